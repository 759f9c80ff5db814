#include "ttba/hochschild.hpp"

#include "ttba/errors.hpp"

#include <cstdlib>
#include <stdexcept>

namespace ttba {

namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t ipow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

std::uint64_t parse_budget(const char* text) {
  std::string s(text);
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("TTBA_BUDGET must be a positive integer, got \"" + s + "\"");
  return std::stoull(s);
}

}  // namespace

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("TTBA_BUDGET")) b.max_entries = parse_budget(env);
  return b;
}

Budget Budget::resolve(std::optional<std::uint64_t> flag) {
  if (flag) return Budget{*flag};
  return from_env();
}

CochainComplex::CochainComplex(AlgebraPtr a, Bimodule m, Budget budget)
    : a_(std::move(a)), m_(std::move(m)), budget_(budget) {
  if (!(m_.left_algebra() == *a_) || !(m_.right_algebra() == *a_))
    throw std::invalid_argument("cochain complex: module must be a bimodule over the algebra on both sides");
}

std::uint64_t CochainComplex::cochain_dim(std::size_t n) const { return checked_mul(ipow(a_->dim(), n), m_.dim()); }

std::uint64_t CochainComplex::differential_entries(std::size_t n) const {
  return checked_mul(cochain_dim(n + 1), cochain_dim(n));
}

RatMatrix CochainComplex::differential(std::size_t n) const {
  const std::uint64_t need = differential_entries(n);
  if (need > budget_.max_entries)
    throw BudgetExceeded("differential delta^" + std::to_string(n) + " needs " + std::to_string(cochain_dim(n + 1)) +
                             " x " + std::to_string(cochain_dim(n)) + " = " + std::to_string(need) +
                             " entries; limit " + std::to_string(budget_.max_entries),
                         need, budget_.max_entries);
  const std::size_t d = a_->dim(), m = m_.dim();
  const std::size_t rows = static_cast<std::size_t>(cochain_dim(n + 1));
  const std::size_t cols = static_cast<std::size_t>(cochain_dim(n));
  const std::size_t tuples = static_cast<std::size_t>(ipow(d, n + 1));

  // place value of position k (0-based) in an (n+1)-tuple and in an n-tuple
  std::vector<std::size_t> pv_out(n + 1), pv_in(n);
  for (std::size_t k = 0; k <= n; ++k) pv_out[k] = static_cast<std::size_t>(ipow(d, n - k));
  for (std::size_t k = 0; k < n; ++k) pv_in[k] = static_cast<std::size_t>(ipow(d, n - 1 - k));

  std::vector<Triplet> t;
  std::vector<std::size_t> idx(n + 1);
  for (std::size_t flat = 0; flat < tuples; ++flat) {
    std::size_t rest = flat;
    for (std::size_t k = 0; k <= n; ++k) {
      idx[k] = rest / pv_out[k];
      rest %= pv_out[k];
    }
    const std::size_t row0 = flat * m;
    // a_1 . phi(a_2, ..., a_{n+1})
    {
      std::size_t in = 0;
      for (std::size_t k = 1; k <= n; ++k) in += idx[k] * pv_in[k - 1];
      const Matrix& l = m_.left_matrix(idx[0]);
      for (std::size_t q = 0; q < m; ++q)
        for (std::size_t r = 0; r < m; ++r)
          if (!l(ix(q), ix(r)).is_zero()) t.push_back({row0 + q, in * m + r, l(ix(q), ix(r))});
    }
    // (-1)^k phi(..., a_k a_{k+1}, ...)
    for (std::size_t k = 0; k < n; ++k) {
      const Rational sign = (k + 1) % 2 == 0 ? Rational(1) : Rational(-1);
      std::size_t base = 0;
      for (std::size_t j = 0; j < k; ++j) base += idx[j] * pv_in[j];
      for (std::size_t j = k + 2; j <= n; ++j) base += idx[j] * pv_in[j - 1];
      for (const auto& e : a_->product(idx[k], idx[k + 1])) {
        const std::size_t in = base + e.col * pv_in[k];
        for (std::size_t q = 0; q < m; ++q) t.push_back({row0 + q, in * m + q, sign * e.value});
      }
    }
    // (-1)^{n+1} phi(a_1, ..., a_n) . a_{n+1}
    {
      const Rational sign = (n + 1) % 2 == 0 ? Rational(1) : Rational(-1);
      std::size_t in = 0;
      for (std::size_t k = 0; k < n; ++k) in += idx[k] * pv_in[k];
      const Matrix& r = m_.right_matrix(idx[n]);
      for (std::size_t q = 0; q < m; ++q)
        for (std::size_t s = 0; s < m; ++s)
          if (!r(ix(q), ix(s)).is_zero()) t.push_back({row0 + q, in * m + s, sign * r(ix(q), ix(s))});
    }
  }
  return RatMatrix::from_triplets(rows, cols, std::move(t));
}

std::size_t CochainComplex::differential_rank(std::size_t n) {
  if (auto it = ranks_.find(n); it != ranks_.end()) return it->second;
  const std::size_t r = rank(differential(n));
  ranks_[n] = r;
  return r;
}

std::size_t CochainComplex::cohomology_dim(std::size_t n) {
  // check the larger differential first so a budget failure costs nothing
  const std::size_t out = differential_rank(n);
  const std::size_t in = n == 0 ? 0 : differential_rank(n - 1);
  return static_cast<std::size_t>(cochain_dim(n)) - out - in;
}

std::size_t hochschild_dim(const AlgebraPtr& a, const Bimodule& m, std::size_t n, Budget budget) {
  CochainComplex c(a, m, budget);
  return c.cohomology_dim(n);
}

std::string Bidimension::str() const { return value ? std::to_string(*value) : ">" + std::to_string(max_degree); }

Bidimension bidimension(const AlgebraPtr& a, std::size_t max_degree, Budget budget) {
  CochainComplex c(a, semisimple_test_bimodule(a), budget);
  Bidimension out;
  out.max_degree = max_degree;
  std::size_t m = 1;
  for (; m <= max_degree + 1; ++m) {
    const std::size_t h = c.cohomology_dim(m);
    out.table.push_back({m, h});
    if (h == 0) {
      out.value = m - 1;
      break;
    }
  }
  if (!out.value) return out;
  for (++m; m <= max_degree + 1; ++m) {
    if (c.differential_entries(m) > budget.max_entries) {
      out.unchecked.push_back(m);
      continue;
    }
    const std::size_t h = c.cohomology_dim(m);
    out.table.push_back({m, h});
    if (h != 0) out.monotone = false;
  }
  return out;
}

CdReport cd_formula_check(const TriAlgebra& t, std::size_t max_degree, Budget budget) {
  CdReport r;
  r.x_nonzero = t.x.dim() != 0;
  auto attempt = [&](auto&& fn) {
    try {
      fn();
    } catch (const BudgetExceeded& e) {
      r.budget_errors.push_back(e.what());
    }
  };
  attempt([&] { r.cd_a = bidimension(t.a, max_degree, budget); });
  attempt([&] { r.cd_b = bidimension(t.b, max_degree, budget); });
  attempt([&] { r.cd_t = bidimension(t.carrier, max_degree, budget); });

  const std::size_t ind = r.x_nonzero ? 1 : 0;
  if (r.cd_a && r.cd_b && r.cd_a->value && r.cd_b->value)
    r.formula = std::max({*r.cd_a->value, *r.cd_b->value, ind});
  if (r.formula && r.cd_t && r.cd_t->value) {
    const std::size_t cd = *r.cd_t->value;
    r.verdict = cd == *r.formula ? "PASS" : "FAIL";
    r.upper_bound_ok = cd <= std::max({*r.cd_a->value, *r.cd_b->value, std::size_t{1}});
    r.lower_bound_ok = cd >= *r.formula;
  } else {
    r.verdict = "UNDETERMINED";
  }

  if (r.x_nonzero) {
    const ExactSequence seq = ideal_and_quotient(t);
    attempt([&] {
      CochainComplex c(seq.quotient, dual_bimodule(ideal_quotient_bimodule(t, seq.quotient)), budget);
      for (std::size_t m = 1; m <= max_degree; ++m) r.acyclicity.push_back({m, c.cohomology_dim(m)});
    });
  }
  return r;
}

WaProbe weak_amenability_probe(const TriAlgebra& t, Budget budget) {
  WaProbe p;
  p.x_nonzero = t.x.dim() != 0;
  p.h1_t_tstar = hochschild_dim(t.carrier, dual_bimodule(regular_bimodule(t.carrier)), 1, budget);
  p.h1_t_istar = hochschild_dim(t.carrier, dual_bimodule(ideal_bimodule(t)), 1, budget);
  try {
    const auto ba = bidimension(t.a, 0, budget), bb = bidimension(t.b, 0, budget);
    p.diagonals_amenable = ba.value == std::size_t{0} && bb.value == std::size_t{0};
  } catch (const BudgetExceeded&) {
  }
  const bool weakly_amenable = p.h1_t_tstar == 0;
  std::string s;
  if (!p.diagonals_amenable) {
    s = "amenability of the diagonal blocks undetermined within budget; the amenable-diagonal hypothesis is unchecked";
  } else if (!*p.diagonals_amenable) {
    s = "diagonal blocks are not amenable; the X = 0 criterion does not apply";
  } else if (!p.x_nonzero) {
    s = weakly_amenable ? "agrees with the X = 0 criterion: X = 0 and H^1(T,T*) = 0"
                        : "disagrees with the X = 0 criterion: X = 0 but H^1(T,T*) != 0";
  } else {
    s = std::string(p.h1_t_istar != 0 ? "agrees" : "disagrees") + " with the claim H^1(T,I*) != 0; " +
        (weakly_amenable ? "disagrees" : "agrees") + " with the X = 0 criterion, which predicts T is not weakly amenable";
  }
  p.statement = s;
  return p;
}

WaSufficient wa_sufficient_check(const AlgebraPtr& a, const AlgebraPtr& b, const Bimodule& x, const Twist& sigma,
                                 Budget budget) {
  const auto report = check_bimodule(x);
  if (!report.empty()) throw ValidationError("X: " + describe(report.front()));
  WaSufficient w;
  w.h1_a_astar = hochschild_dim(a, dual_bimodule(regular_bimodule(a)), 1, budget);
  w.h1_b_bstar = hochschild_dim(b, dual_bimodule(regular_bimodule(b)), 1, budget);
  const Bimodule xstar = twisted_dual(x, sigma.sigma_a, sigma.sigma_b);
  w.h1_a_xstar = hochschild_dim(a, right_action_only(xstar), 1, budget);
  w.h1_b_xstar = hochschild_dim(b, left_action_only(xstar), 1, budget);
  w.met = w.h1_a_astar == 0 && w.h1_b_bstar == 0 && w.h1_a_xstar == 0 && w.h1_b_xstar == 0;
  if (w.met) {
    const TriAlgebra t = build_triangular(a, b, x, sigma);
    w.h1_t_tstar = hochschild_dim(t.carrier, dual_bimodule(regular_bimodule(t.carrier)), 1, budget);
    w.verdict = *w.h1_t_tstar == 0 ? "sufficient condition met; H^1(T,T*) = 0, consistent with the four-group criterion"
                                   : "sufficient condition met but H^1(T,T*) != 0, inconsistent with the four-group criterion";
  } else {
    w.verdict = "sufficient condition not met";
  }
  return w;
}

}  // namespace ttba
