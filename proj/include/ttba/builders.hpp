#pragma once

#include "ttba/triangular.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ttba {

/// M_n(Q) with matrix units e_{ij} at index i*n + j.
AlgebraPtr matrix_algebra(std::size_t n);

/// M_{n,m}(Q) as an M_n-M_m bimodule, basis E_{ij} at index i*m + j.
Bimodule matrix_bimodule(const AlgebraPtr& mn, const AlgebraPtr& mm, std::size_t n, std::size_t m);

/// Q^K with pointwise product; basis of point indicators.
AlgebraPtr function_algebra(std::size_t k);

/// Anchors p: Omega -> K, q: Omega -> L and twisting permutations phi of K,
/// psi of L. All maps are arrays of 0-based indices.
struct AnchoredFunctionSystem {
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t omega = 0;
  std::vector<std::size_t> p;
  std::vector<std::size_t> q;
  std::vector<std::size_t> phi;
  std::vector<std::size_t> psi;
  friend bool operator==(const AnchoredFunctionSystem&, const AnchoredFunctionSystem&) = default;
};

/// Throws ValidationError naming the first broken field.
void validate(const AnchoredFunctionSystem& sys);

struct TriangularComponents {
  AlgebraPtr a;
  AlgebraPtr b;
  Bimodule x;
  Twist sigma;
};

/// A = Q^K, B = Q^L, X = Q^Omega with (f.xi.g)(w) = f(p(w)) xi(w) g(q(w)),
/// sigma_A(f) = f o phi and sigma_B(g) = g o psi.
TriangularComponents anchored_bimodule(const AnchoredFunctionSystem& sys);

class FiniteGroup {
public:
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> cayley, std::size_t identity);

  std::size_t order() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<std::size_t>>& cayley() const { return cayley_; }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t g, std::size_t h) const { return cayley_[g][h]; }
  std::size_t inverse(std::size_t g) const { return inverses_[g]; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.labels_ == b.labels_ && a.cayley_ == b.cayley_;
  }

private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> cayley_;
  std::size_t identity_;
  std::vector<std::size_t> inverses_;
};

/// Checks the group axioms (Latin square, identity, inverses, associativity)
/// and throws ValidationError naming the violated axiom and cell or triple.
FiniteGroup group_from_cayley(const std::vector<std::vector<std::size_t>>& table, std::vector<std::string> labels = {});

FiniteGroup cyclic_group(std::size_t n);
/// S_n on {1..n}, elements in lexicographic order of their images, labelled
/// in cycle notation; (s t)(i) = s(t(i)).
FiniteGroup symmetric_group(std::size_t n);

/// Q[G] with e_g e_h = e_{gh}.
AlgebraPtr group_algebra(const FiniteGroup& g);
/// Q[G] as a bimodule over itself by convolution.
Bimodule group_regular_bimodule(const AlgebraPtr& qg);

/// gamma as the array g -> gamma(g).
using GroupAutomorphism = std::vector<std::size_t>;

bool is_group_automorphism(const FiniteGroup& g, const GroupAutomorphism& gamma);
GroupAutomorphism compose(const GroupAutomorphism& outer, const GroupAutomorphism& inner);
GroupAutomorphism invert(const GroupAutomorphism& gamma);
/// g -> t g t^-1
GroupAutomorphism conjugation(const FiniteGroup& g, std::size_t t);
/// g -> g^-1; an automorphism only for abelian groups.
GroupAutomorphism inversion(const FiniteGroup& g);

/// All of Aut(G), found by generator-image search with Cayley-table pruning,
/// sorted lexicographically (identity first). Throws BudgetExceeded when
/// |G| > bound.
std::vector<GroupAutomorphism> group_automorphisms(const FiniteGroup& g, std::size_t bound = 12);

/// sigma_gamma(f) = f o gamma^-1, i.e. e_g -> e_{gamma(g)} on the group basis.
Automorphism sigma_gamma(const FiniteGroup& g, const GroupAutomorphism& gamma);

}  // namespace ttba
