#include "ttba/builders.hpp"

#include "ttba/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace ttba {

namespace {

bool is_permutation_of(const std::vector<std::size_t>& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t v : p) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<std::size_t> inverse_permutation(const std::vector<std::size_t>& p) {
  std::vector<std::size_t> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

std::string cycle_label(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::string out;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s] || perm[s] == s) continue;
    out += "(";
    for (std::size_t c = s; !seen[c]; c = perm[c]) {
      seen[c] = true;
      out += std::to_string(c + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

AlgebraPtr matrix_algebra(std::size_t n) {
  if (n == 0) throw std::invalid_argument("matrix algebra size must be positive");
  std::vector<std::string> labels;
  std::vector<StructureConstant> sc;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
      for (std::size_t l = 0; l < n; ++l) sc.push_back({i * n + j, j * n + l, i * n + l, Rational(1)});
    }
  Vector unit = Vector::Zero(static_cast<Eigen::Index>(n * n));
  for (std::size_t i = 0; i < n; ++i) unit(static_cast<Eigen::Index>(i * n + i)) = 1;
  return std::make_shared<const FDAlgebra>(std::move(labels), sc, std::move(unit));
}

Bimodule matrix_bimodule(const AlgebraPtr& mn, const AlgebraPtr& mm, std::size_t n, std::size_t m) {
  if (mn->dim() != n * n || mm->dim() != m * m) throw std::invalid_argument("algebras do not match the requested matrix sizes");
  std::vector<std::string> labels;
  std::vector<ActionConstant> left, right;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      // e_{ai} E_{ij} = E_{aj}
      for (std::size_t a = 0; a < n; ++a) left.push_back({a * n + i, i * m + j, a * m + j, Rational(1)});
      // E_{ij} e_{jb} = E_{ib}
      for (std::size_t b = 0; b < m; ++b) right.push_back({j * m + b, i * m + j, i * m + b, Rational(1)});
    }
  return Bimodule(mn, mm, std::move(labels), left, right);
}

AlgebraPtr function_algebra(std::size_t k) {
  if (k == 0) throw std::invalid_argument("function algebra needs a nonempty set");
  std::vector<std::string> labels;
  std::vector<StructureConstant> sc;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back("d" + std::to_string(i));
    sc.push_back({i, i, i, Rational(1)});
  }
  Vector unit(static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < k; ++i) unit(static_cast<Eigen::Index>(i)) = 1;
  return std::make_shared<const FDAlgebra>(std::move(labels), sc, std::move(unit));
}

void validate(const AnchoredFunctionSystem& sys) {
  if (sys.k == 0 || sys.l == 0 || sys.omega == 0) throw ValidationError("anchored system: K, L and Omega must be nonempty");
  if (sys.p.size() != sys.omega) throw ValidationError("anchored system: p must have one entry per point of Omega");
  if (sys.q.size() != sys.omega) throw ValidationError("anchored system: q must have one entry per point of Omega");
  for (std::size_t w = 0; w < sys.omega; ++w) {
    if (sys.p[w] >= sys.k) throw ValidationError("anchored system: p[" + std::to_string(w) + "] outside K");
    if (sys.q[w] >= sys.l) throw ValidationError("anchored system: q[" + std::to_string(w) + "] outside L");
  }
  if (!is_permutation_of(sys.phi, sys.k)) throw ValidationError("anchored system: phi is not a permutation of K");
  if (!is_permutation_of(sys.psi, sys.l)) throw ValidationError("anchored system: psi is not a permutation of L");
}

TriangularComponents anchored_bimodule(const AnchoredFunctionSystem& sys) {
  validate(sys);
  AlgebraPtr a = function_algebra(sys.k);
  AlgebraPtr b = function_algebra(sys.l);
  std::vector<std::string> labels;
  std::vector<ActionConstant> left, right;
  for (std::size_t w = 0; w < sys.omega; ++w) {
    labels.push_back("w" + std::to_string(w));
    left.push_back({sys.p[w], w, w, Rational(1)});
    right.push_back({sys.q[w], w, w, Rational(1)});
  }
  // f o phi sends the indicator of k to the indicator of phi^-1(k)
  const Matrix sa = permutation_matrix(inverse_permutation(sys.phi));
  const Matrix sb = permutation_matrix(inverse_permutation(sys.psi));
  Twist sigma{{sa, sa.transpose()}, {sb, sb.transpose()}};
  return {a, b, Bimodule(a, b, std::move(labels), left, right), std::move(sigma)};
}

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> cayley, std::size_t identity)
    : labels_(std::move(labels)), cayley_(std::move(cayley)), identity_(identity), inverses_(labels_.size()) {
  for (std::size_t g = 0; g < order(); ++g)
    for (std::size_t h = 0; h < order(); ++h)
      if (cayley_[g][h] == identity_) inverses_[g] = h;
}

FiniteGroup group_from_cayley(const std::vector<std::vector<std::size_t>>& table, std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw ValidationError("group: empty Cayley table");
  auto cell = [](std::size_t g, std::size_t h) { return "(" + std::to_string(g) + "," + std::to_string(h) + ")"; };
  for (std::size_t g = 0; g < n; ++g) {
    if (table[g].size() != n) throw ValidationError("group: Cayley table row " + std::to_string(g) + " has wrong length");
    for (std::size_t h = 0; h < n; ++h)
      if (table[g][h] >= n) throw ValidationError("group: entry out of range at cell " + cell(g, h));
  }
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t h = 0; h < n; ++h) {
      if (row[table[g][h]]) throw ValidationError("group: Latin square violated, repeated entry in row at cell " + cell(g, h));
      if (col[table[h][g]]) throw ValidationError("group: Latin square violated, repeated entry in column at cell " + cell(h, g));
      row[table[g][h]] = col[table[h][g]] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw ValidationError("group: associativity fails at triple (" + std::to_string(a) + "," + std::to_string(b) +
                                "," + std::to_string(c) + ")");
  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) identity = e;
  }
  if (identity == n) throw ValidationError("group: no identity element (identity row/column)");
  for (std::size_t g = 0; g < n; ++g) {
    bool has = false;
    for (std::size_t h = 0; h < n && !has; ++h) has = table[g][h] == identity && table[h][g] == identity;
    if (!has) throw ValidationError("group: element " + std::to_string(g) + " has no two-sided inverse");
  }
  if (labels.empty())
    for (std::size_t g = 0; g < n; ++g) labels.push_back("g" + std::to_string(g));
  if (labels.size() != n) throw ValidationError("group: label count differs from group order");
  return FiniteGroup(std::move(labels), table, identity);
}

FiniteGroup cyclic_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t g = 0; g < n; ++g) {
    labels.push_back(g == 0 ? "e" : (g == 1 ? "g" : "g^" + std::to_string(g)));
    for (std::size_t h = 0; h < n; ++h) table[g][h] = (g + h) % n;
  }
  return group_from_cayley(table, std::move(labels));
}

FiniteGroup symmetric_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t order = perms.size();
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < order; ++s) {
    labels.push_back(cycle_label(perms[s]));
    for (std::size_t t = 0; t < order; ++t) {
      std::vector<std::size_t> st(n);
      for (std::size_t i = 0; i < n; ++i) st[i] = perms[s][perms[t][i]];
      table[s][t] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), st) - perms.begin());
    }
  }
  return group_from_cayley(table, std::move(labels));
}

AlgebraPtr group_algebra(const FiniteGroup& g) {
  std::vector<StructureConstant> sc;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) sc.push_back({a, b, g.mul(a, b), Rational(1)});
  return std::make_shared<const FDAlgebra>(g.labels(), sc, unit_vector(g.order(), g.identity()));
}

Bimodule group_regular_bimodule(const AlgebraPtr& qg) { return regular_bimodule(qg); }

bool is_group_automorphism(const FiniteGroup& g, const GroupAutomorphism& gamma) {
  if (!is_permutation_of(gamma, g.order())) return false;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (gamma[g.mul(a, b)] != g.mul(gamma[a], gamma[b])) return false;
  return true;
}

GroupAutomorphism compose(const GroupAutomorphism& outer, const GroupAutomorphism& inner) {
  GroupAutomorphism out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

GroupAutomorphism invert(const GroupAutomorphism& gamma) { return inverse_permutation(gamma); }

GroupAutomorphism conjugation(const FiniteGroup& g, std::size_t t) {
  GroupAutomorphism out(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) out[x] = g.mul(g.mul(t, x), g.inverse(t));
  return out;
}

GroupAutomorphism inversion(const FiniteGroup& g) {
  GroupAutomorphism out(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) out[x] = g.inverse(x);
  return out;
}

std::vector<GroupAutomorphism> group_automorphisms(const FiniteGroup& g, std::size_t bound) {
  const std::size_t n = g.order();
  if (n > bound)
    throw BudgetExceeded("group order " + std::to_string(n) + " exceeds the automorphism enumeration bound", n, bound);

  auto element_order = [&](std::size_t x) {
    std::size_t k = 1;
    for (std::size_t y = x; y != g.identity(); y = g.mul(y, x)) ++k;
    return k;
  };

  // Greedy generating set: each generator is the smallest element outside the
  // subgroup generated so far.
  std::vector<std::size_t> gens;
  std::vector<bool> in_sub(n, false);
  in_sub[g.identity()] = true;
  auto close = [&](std::vector<bool>& sub) {
    bool grown = true;
    while (grown) {
      grown = false;
      for (std::size_t a = 0; a < n; ++a)
        if (sub[a])
          for (std::size_t s : gens)
            if (!sub[g.mul(a, s)]) sub[g.mul(a, s)] = grown = true;
    }
  };
  for (std::size_t x = 0; x < n; ++x) {
    if (in_sub[x]) continue;
    gens.push_back(x);
    close(in_sub);
  }

  // Extends the images of the first `k` generators to the subgroup they
  // generate; fails on any Cayley-table inconsistency or collision.
  auto extend = [&](const std::vector<std::size_t>& images, std::size_t k, GroupAutomorphism& map) {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    map.assign(n, unset);
    std::vector<bool> used(n, false);
    map[g.identity()] = g.identity();
    used[g.identity()] = true;
    std::queue<std::size_t> todo;
    todo.push(g.identity());
    while (!todo.empty()) {
      const std::size_t x = todo.front();
      todo.pop();
      for (std::size_t s = 0; s < k; ++s) {
        const std::size_t y = g.mul(x, gens[s]);
        const std::size_t img = g.mul(map[x], images[s]);
        if (map[y] == unset) {
          if (used[img]) return false;
          map[y] = img;
          used[img] = true;
          todo.push(y);
        } else if (map[y] != img) {
          return false;
        }
      }
    }
    return true;
  };

  std::vector<GroupAutomorphism> result;
  std::vector<std::size_t> images(gens.size());
  GroupAutomorphism scratch;
  auto search = [&](auto&& self, std::size_t k) -> void {
    if (k == gens.size()) {
      GroupAutomorphism map;
      if (extend(images, k, map) && is_group_automorphism(g, map)) result.push_back(map);
      return;
    }
    const std::size_t ord = element_order(gens[k]);
    for (std::size_t y = 0; y < n; ++y) {
      if (element_order(y) != ord) continue;
      images[k] = y;
      if (extend(images, k + 1, scratch)) self(self, k + 1);
    }
  };
  search(search, 0);
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

Automorphism sigma_gamma(const FiniteGroup& g, const GroupAutomorphism& gamma) {
  if (!is_group_automorphism(g, gamma)) throw ValidationError("sigma_gamma: gamma is not a group automorphism");
  const Matrix m = permutation_matrix(gamma);
  return {m, m.transpose()};
}

}  // namespace ttba
