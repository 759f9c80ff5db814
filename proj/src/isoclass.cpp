#include "ttba/isoclass.hpp"

#include "ttba/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ttba {

namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

// basis vectors followed by the zero vector
std::vector<Vector> basis_and_zero(std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector(n, i));
  out.push_back(Vector::Zero(ix(n)));
  return out;
}

std::string index_list(std::initializer_list<std::size_t> xs) {
  std::string s = "(";
  for (auto it = xs.begin(); it != xs.end(); ++it) s += (it == xs.begin() ? "" : ",") + std::to_string(*it);
  return s + ")";
}

std::string tuple_label(std::size_t i, std::size_t n) { return i == n ? "0" : std::to_string(i); }

void require_shapes(const TriAlgebra& s, const TriAlgebra& t, const IsoData& d) {
  if (!(*s.a == *t.a) || !(*s.b == *t.b)) throw std::invalid_argument("iso data: source and target must share A and B");
  const std::size_t da = s.a->dim(), db = s.b->dim(), dx = s.x.dim(), dx2 = t.x.dim();
  if (d.alpha.dim() != da || d.beta.dim() != db) throw std::invalid_argument("iso data: alpha/beta size mismatch");
  if (d.u.rows() != ix(dx2) || d.u.cols() != ix(dx)) throw std::invalid_argument("iso data: u must be dim X' x dim X");
  if (d.theta.f.rows() != ix(dx2) || d.theta.f.cols() != ix(da) || d.theta.g.rows() != ix(dx2) ||
      d.theta.g.cols() != ix(db))
    throw std::invalid_argument("iso data: theta must map into X'");
}

CheckItem conjugacy(const std::string& name, const FDAlgebra& alg, const Automorphism& alpha, const Automorphism& sigma,
                    const Automorphism& tau) {
  CheckItem item{name, false, ""};
  if (!check_automorphism(alg, alpha.matrix)) {
    item.detail = "map is not an algebra automorphism";
  } else if (Matrix(alpha.matrix * alpha.inverse) != identity_matrix(alg.dim())) {
    item.detail = "stored inverse is not the inverse";
  } else if (Matrix(alpha.matrix * sigma.matrix * alpha.inverse) != tau.matrix) {
    item.detail = "alpha sigma alpha^-1 != tau";
  } else {
    item.passed = true;
  }
  return item;
}

CheckItem equivariance(const TriAlgebra& s, const TriAlgebra& t, const IsoData& d) {
  CheckItem item{"equivariance", false, ""};
  const std::size_t da = s.a->dim(), db = s.b->dim(), dx = s.x.dim();
  if (dx != t.x.dim() || !inverse(d.u)) {
    item.detail = "u is not invertible";
    return item;
  }
  for (std::size_t i = 0; i < da; ++i) {
    const Matrix la = t.x.left_action(d.alpha.matrix.col(ix(i)));
    for (std::size_t j = 0; j < db; ++j) {
      const Matrix rb = t.x.right_action(d.beta.matrix.col(ix(j)));
      const Matrix lhs = d.u * s.x.right_matrix(j) * s.x.left_matrix(i);
      const Matrix rhs = rb * la * d.u;
      for (std::size_t p = 0; p < dx; ++p)
        if (lhs.col(ix(p)) != rhs.col(ix(p))) {
          item.detail = "u(a.x.b) != alpha(a).u(x).beta(b) at (a,x,b) = " + index_list({i, p, j});
          return item;
        }
    }
  }
  item.passed = true;
  return item;
}

CheckItem tau_cocycle(const TriAlgebra& s, const TriAlgebra& t, const IsoData& d) {
  CheckItem item{"tau-cocycle", false, ""};
  const std::size_t da = s.a->dim(), db = s.b->dim();
  const auto as = basis_and_zero(da), bs = basis_and_zero(db);
  const Automorphism& ta = t.twist.sigma_a;
  const Automorphism& tb = t.twist.sigma_b;
  for (std::size_t i = 0; i <= da; ++i) {
    const Matrix left = t.x.left_action(ta.apply(d.alpha.apply(as[i])));
    for (std::size_t k = 0; k <= da; ++k) {
      const Vector aa = multiply(*s.a, as[i], as[k]);
      for (std::size_t j = 0; j <= db; ++j)
        for (std::size_t l = 0; l <= db; ++l) {
          const Vector lhs = d.theta(aa, multiply(*s.b, bs[j], bs[l]));
          const Vector rhs = left * d.theta(as[k], bs[l]) +
                             t.x.right_action(tb.apply(d.beta.apply(bs[l]))) * d.theta(as[i], bs[j]);
          if (lhs != rhs) {
            item.detail = "theta(aa',bb') != tau_A(alpha(a)).theta(a',b') + theta(a,b).tau_B(beta(b')) at (a,a',b,b') = (" +
                          tuple_label(i, da) + "," + tuple_label(k, da) + "," + tuple_label(j, db) + "," +
                          tuple_label(l, db) + ")";
            return item;
          }
        }
    }
  }
  item.passed = true;
  return item;
}

bool multiplicative(const Matrix& phi, const FDAlgebra& src, const FDAlgebra& dst) {
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = 0; j < src.dim(); ++j)
      if (Vector(phi * basis_product(src, i, j)) != multiply(dst, phi.col(ix(i)), phi.col(ix(j)))) return false;
  return true;
}

}  // namespace

IsoData identity_iso_data(const TriAlgebra& t) {
  return {identity_automorphism(t.a->dim()), identity_automorphism(t.b->dim()), identity_matrix(t.x.dim()),
          zero_shear(t.x)};
}

bool IsoVerdict::passed() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.passed; });
}

const CheckItem* IsoVerdict::first_failure() const {
  for (const auto& c : items)
    if (!c.passed) return &c;
  return nullptr;
}

IsoVerdict verify_iso_data(const TriAlgebra& source, const TriAlgebra& target, const IsoData& d) {
  require_shapes(source, target, d);
  IsoVerdict v;
  v.items.push_back(conjugacy("conjugacy A", *source.a, d.alpha, source.twist.sigma_a, target.twist.sigma_a));
  v.items.push_back(conjugacy("conjugacy B", *source.b, d.beta, source.twist.sigma_b, target.twist.sigma_b));
  v.items.push_back(equivariance(source, target, d));
  v.items.push_back(tau_cocycle(source, target, d));
  return v;
}

PhiPair build_phi(const TriAlgebra& source, const TriAlgebra& target, const IsoData& d) {
  const IsoVerdict v = verify_iso_data(source, target, d);
  if (const CheckItem* bad = v.first_failure())
    throw ValidationError("build_phi: iso data fails " + bad->name + ": " + bad->detail);
  const Blocks& s = source.blocks;
  const Blocks& t = target.blocks;
  const Matrix uinv = *inverse(d.u);
  PhiPair out;
  out.phi = Matrix::Zero(ix(t.total()), ix(s.total()));
  out.phi.block(ix(t.a_offset()), ix(s.a_offset()), ix(t.a_dim), ix(s.a_dim)) = d.alpha.matrix;
  out.phi.block(ix(t.x_offset()), ix(s.a_offset()), ix(t.x_dim), ix(s.a_dim)) = d.theta.f;
  out.phi.block(ix(t.x_offset()), ix(s.x_offset()), ix(t.x_dim), ix(s.x_dim)) = d.u;
  out.phi.block(ix(t.x_offset()), ix(s.b_offset()), ix(t.x_dim), ix(s.b_dim)) = d.theta.g;
  out.phi.block(ix(t.b_offset()), ix(s.b_offset()), ix(t.b_dim), ix(s.b_dim)) = d.beta.matrix;

  // Psi(a, x, b) = (alpha^-1 a, u^-1 (x - theta(alpha^-1 a, beta^-1 b)), beta^-1 b)
  out.psi = Matrix::Zero(ix(s.total()), ix(t.total()));
  out.psi.block(ix(s.a_offset()), ix(t.a_offset()), ix(s.a_dim), ix(t.a_dim)) = d.alpha.inverse;
  out.psi.block(ix(s.x_offset()), ix(t.a_offset()), ix(s.x_dim), ix(t.a_dim)) = -(uinv * d.theta.f * d.alpha.inverse);
  out.psi.block(ix(s.x_offset()), ix(t.x_offset()), ix(s.x_dim), ix(t.x_dim)) = uinv;
  out.psi.block(ix(s.x_offset()), ix(t.b_offset()), ix(s.x_dim), ix(t.b_dim)) = -(uinv * d.theta.g * d.beta.inverse);
  out.psi.block(ix(s.b_offset()), ix(t.b_offset()), ix(s.b_dim), ix(t.b_dim)) = d.beta.inverse;

  out.multiplicative = multiplicative(out.phi, *source.carrier, *target.carrier);
  out.roundtrip = Matrix(out.psi * out.phi) == identity_matrix(s.total()) &&
                  Matrix(out.phi * out.psi) == identity_matrix(t.total());
  return out;
}

std::string to_string(IdealStatus s) {
  switch (s) {
    case IdealStatus::pass: return "pass";
    case IdealStatus::fail: return "fail";
    case IdealStatus::not_applicable: return "not applicable";
    case IdealStatus::rejected: return "rejected";
  }
  return "fail";
}

IdealVerdict characteristic_ideal_check(const Matrix& phi, const TriAlgebra& source, const TriAlgebra& target) {
  const Blocks& s = source.blocks;
  const Blocks& t = target.blocks;
  if (phi.rows() != ix(t.total()) || phi.cols() != ix(s.total()))
    throw std::invalid_argument("characteristic ideal check: Phi has the wrong shape");
  if (!inverse(phi)) return {IdealStatus::rejected, "Phi is not invertible"};
  if (!multiplicative(phi, *source.carrier, *target.carrier))
    return {IdealStatus::rejected, "Phi is not multiplicative, so not an algebra isomorphism"};
  if (s.x_dim == 0 && t.x_dim == 0) return {IdealStatus::not_applicable, "not applicable, X = 0"};
  const Matrix cols = phi.middleCols(ix(s.x_offset()), ix(s.x_dim));
  Matrix outside(ix(t.a_dim + t.b_dim), cols.cols());
  outside << cols.topRows(ix(t.a_dim)), cols.bottomRows(ix(t.b_dim));
  if (!is_zero(outside)) return {IdealStatus::fail, "Phi(I) leaves the off-diagonal block"};
  if (rank(Matrix(cols.middleRows(ix(t.x_offset()), ix(t.x_dim)))) != t.x_dim)
    return {IdealStatus::fail, "Phi(I) does not span the off-diagonal block"};
  return {IdealStatus::pass, "Phi(I) = I"};
}

TriAlgebra group_triangular(const FiniteGroup& g, const GroupAutomorphism& gamma_a, const GroupAutomorphism& gamma_b) {
  const AlgebraPtr qg = group_algebra(g);
  return build_triangular(qg, qg, group_regular_bimodule(qg), Twist{sigma_gamma(g, gamma_a), sigma_gamma(g, gamma_b)});
}

std::vector<Matrix> equivariant_maps(const Bimodule& x, const Bimodule& x_prime, const Automorphism& alpha,
                                     const Automorphism& beta) {
  const std::size_t n = x.dim(), m = x_prime.dim();
  // unknown u(r, c) at c * m + r
  std::vector<Triplet> t;
  std::size_t row = 0;
  auto add_block = [&](const Matrix& src, const Matrix& dst) {
    // u src - dst u = 0
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c, ++row) {
        for (std::size_t s = 0; s < n; ++s)
          if (!src(ix(s), ix(c)).is_zero()) t.push_back({row, s * m + r, src(ix(s), ix(c))});
        for (std::size_t s = 0; s < m; ++s)
          if (!dst(ix(r), ix(s)).is_zero()) t.push_back({row, c * m + s, -dst(ix(r), ix(s))});
      }
  };
  for (std::size_t i = 0; i < x.left_algebra().dim(); ++i)
    add_block(x.left_matrix(i), x_prime.left_action(alpha.matrix.col(ix(i))));
  for (std::size_t j = 0; j < x.right_algebra().dim(); ++j)
    add_block(x.right_matrix(j), x_prime.right_action(beta.matrix.col(ix(j))));
  std::vector<Matrix> out;
  for (const auto& v : kernel_basis(RatMatrix::from_triplets(row, n * m, std::move(t))))
    out.push_back(v.reshaped(ix(m), ix(n)));
  return out;
}

GroupSearchResult search_iso_group(const FiniteGroup& g, const GroupAutomorphism& gamma_a,
                                   const GroupAutomorphism& gamma_b, const GroupAutomorphism& gamma_a_prime,
                                   const GroupAutomorphism& gamma_b_prime) {
  for (const auto* gamma : {&gamma_a, &gamma_b, &gamma_a_prime, &gamma_b_prime})
    if (!is_group_automorphism(g, *gamma)) throw ValidationError("group search: twist is not a group automorphism");
  const auto auts = group_automorphisms(g);
  std::vector<GroupAutomorphism> da, db;
  for (const auto& d : auts) {
    const auto di = invert(d);
    if (compose(d, compose(gamma_a, di)) == gamma_a_prime) da.push_back(d);
    if (compose(d, compose(gamma_b, di)) == gamma_b_prime) db.push_back(d);
  }
  GroupSearchResult out;
  out.candidates_a = da.size();
  out.candidates_b = db.size();
  if (da.empty() || db.empty()) {
    out.note = "twists are not conjugate within group-induced automorphisms; no witness in this family";
    return out;
  }
  const AlgebraPtr qg = group_algebra(g);
  for (const auto& d : da)
    if (std::find(db.begin(), db.end(), d) != db.end()) {
      const Automorphism s = sigma_gamma(g, d);
      out.delta_a = out.delta_b = d;
      out.witness = IsoData{s, s, s.matrix, zero_shear(group_regular_bimodule(qg))};
      out.note = "common delta; u = sigma_delta, theta = 0";
      return out;
    }
  const Bimodule x = group_regular_bimodule(qg);
  for (const auto& d1 : da)
    for (const auto& d2 : db) {
      const Automorphism alpha = sigma_gamma(g, d1), beta = sigma_gamma(g, d2);
      const auto maps = equivariant_maps(x, x, alpha, beta);
      if (maps.empty()) continue;
      for (std::size_t k = 0; k < 8; ++k) {
        Matrix u = Matrix::Zero(ix(x.dim()), ix(x.dim()));
        for (std::size_t t = 0; t < maps.size(); ++t) {
          mpz_class c;
          mpz_ui_pow_ui(c.get_mpz_t(), t + 1, k);
          u += maps[t] * Rational(c);
        }
        if (inverse(u)) {
          out.delta_a = d1;
          out.delta_b = d2;
          out.witness = IsoData{alpha, beta, u, zero_shear(x)};
          out.note = "distinct deltas; u solved from the equivariance system";
          return out;
        }
      }
    }
  out.note = "no invertible equivariant u found in sampled set";
  return out;
}

namespace {

std::uint64_t factorial_capped(std::size_t n, std::uint64_t cap) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (f > cap / i) return cap + 1;
    f *= i;
  }
  return f;
}

std::vector<std::size_t> identity_perm(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

FunctionSearchResult search_iso_function(const AnchoredFunctionSystem& sigma, const AnchoredFunctionSystem& tau,
                                         std::size_t bound) {
  validate(sigma);
  validate(tau);
  FunctionSearchResult out;
  if (sigma.k != tau.k || sigma.l != tau.l || sigma.omega != tau.omega) {
    out.note = "set sizes differ; no bijections exist";
    return out;
  }
  const std::uint64_t cap = bound;
  std::uint64_t need = factorial_capped(sigma.k, cap);
  if (need <= cap) need *= factorial_capped(sigma.l, cap);
  if (need <= cap) need *= factorial_capped(sigma.omega, cap);
  if (need > cap) throw BudgetExceeded("function search: |K|!|L|!|Omega|! exceeds the search bound", need, cap);

  auto hk = identity_perm(sigma.k);
  do {
    ++out.examined;
    bool ok = true;
    for (std::size_t k = 0; k < sigma.k && ok; ++k) ok = hk[sigma.phi[k]] == tau.phi[hk[k]];
    if (!ok) continue;
    auto hl = identity_perm(sigma.l);
    do {
      ++out.examined;
      bool okl = true;
      for (std::size_t l = 0; l < sigma.l && okl; ++l) okl = hl[sigma.psi[l]] == tau.psi[hl[l]];
      if (!okl) continue;
      auto h = identity_perm(sigma.omega);
      do {
        ++out.examined;
        bool okw = true;
        for (std::size_t w = 0; w < sigma.omega && okw; ++w)
          okw = tau.p[h[w]] == hk[sigma.p[w]] && tau.q[h[w]] == hl[sigma.q[w]];
        if (okw) {
          out.witness = FunctionWitness{hk, hl, h};
          out.note = "first witness in lexicographic order";
          return out;
        }
      } while (std::next_permutation(h.begin(), h.end()));
    } while (std::next_permutation(hl.begin(), hl.end()));
  } while (std::next_permutation(hk.begin(), hk.end()));
  out.note = "exhaustive search found no intertwining permutations; not isomorphic";
  return out;
}

IsoData function_iso_data(const AnchoredFunctionSystem& sigma, const FunctionWitness& w) {
  const Matrix a = permutation_matrix(w.h_k), b = permutation_matrix(w.h_l);
  const TriangularComponents c = anchored_bimodule(sigma);
  Shear zero = zero_shear(c.x);
  return {Automorphism{a, a.transpose()}, Automorphism{b, b.transpose()}, permutation_matrix(w.h_omega), zero};
}

std::vector<TwistClass> classify_twists(const FiniteGroup& g, std::size_t bound) {
  const auto auts = group_automorphisms(g, bound);
  std::vector<bool> done(auts.size(), false);
  std::vector<TwistClass> out;
  for (std::size_t i = 0; i < auts.size(); ++i) {
    if (done[i]) continue;
    std::vector<GroupAutomorphism> conj;
    for (const auto& d : auts) conj.push_back(compose(d, compose(auts[i], invert(d))));
    TwistClass c{auts[i], {}};
    for (std::size_t j = i; j < auts.size(); ++j)
      if (std::find(conj.begin(), conj.end(), auts[j]) != conj.end()) {
        done[j] = true;
        c.members.push_back(auts[j]);
      }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace ttba
