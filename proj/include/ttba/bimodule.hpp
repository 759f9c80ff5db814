#pragma once

#include "ttba/algebra.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ttba {

using AlgebraPtr = std::shared_ptr<const FDAlgebra>;

/// Action coefficient: the algebra basis element `alg` sends x_from to
/// value * x_to (plus the other entries with the same (alg, from)).
struct ActionConstant {
  std::size_t alg;
  std::size_t from;
  std::size_t to;
  Rational value;
  friend bool operator==(const ActionConstant&, const ActionConstant&) = default;
};

/// A-B bimodule on Q^dim. Left action matrices L_i (x -> e_i . x) and right
/// action matrices R_j (x -> x . e_j) act on column coordinate vectors.
class Bimodule {
public:
  Bimodule() = default;
  Bimodule(AlgebraPtr left, AlgebraPtr right, std::vector<std::string> basis_labels,
           const std::vector<ActionConstant>& left_action, const std::vector<ActionConstant>& right_action);
  Bimodule(AlgebraPtr left, AlgebraPtr right, std::vector<std::string> basis_labels,
           std::vector<Matrix> left_matrices, std::vector<Matrix> right_matrices);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const FDAlgebra& left_algebra() const { return *left_; }
  const FDAlgebra& right_algebra() const { return *right_; }
  const AlgebraPtr& left_algebra_ptr() const { return left_; }
  const AlgebraPtr& right_algebra_ptr() const { return right_; }

  const Matrix& left_matrix(std::size_t i) const { return left_mats_[i]; }
  const Matrix& right_matrix(std::size_t j) const { return right_mats_[j]; }
  Matrix left_action(const Vector& a) const;
  Matrix right_action(const Vector& b) const;

  std::vector<ActionConstant> left_constants() const;
  std::vector<ActionConstant> right_constants() const;

  /// Same algebras (by value), labels and action tensors.
  friend bool operator==(const Bimodule& x, const Bimodule& y);

private:
  AlgebraPtr left_;
  AlgebraPtr right_;
  std::vector<std::string> labels_;
  std::vector<Matrix> left_mats_;
  std::vector<Matrix> right_mats_;
};

/// Both module associativities, the compatibility axiom and unit actions on
/// basis triples; empty iff X is a unital bimodule.
ValidationReport check_bimodule(const Bimodule& x);

/// a . x . b evaluated left action first.
Vector act(const Bimodule& m, const Vector& a, const Vector& x, const Vector& b);

/// A as an A-A bimodule over itself.
Bimodule regular_bimodule(const AlgebraPtr& a);

/// M* for an A-B bimodule M, a B-A bimodule with (b.phi)(m) = phi(m.b) and
/// (phi.a)(m) = phi(a.m), in the dual basis.
Bimodule dual_bimodule(const Bimodule& m);

/// X* with (b.phi.a)(x) = phi(sigma_A(a) . x . sigma_B(b)); a B-A bimodule.
/// The identity twist gives dual_bimodule(x).
Bimodule twisted_dual(const Bimodule& x, const Automorphism& sigma_a, const Automorphism& sigma_b);

/// The left (resp. right) action of m alone, as a bimodule over that algebra
/// on which the other side acts by zero.
Bimodule left_action_only(const Bimodule& m);
Bimodule right_action_only(const Bimodule& m);

/// M/N for a sub-bimodule N = span(sub).
Bimodule quotient_bimodule(const Bimodule& m, const std::vector<Vector>& sub);

/// A (x) A with a.(c (x) d).b = ac (x) db, the left regular module of A^e.
Bimodule free_bimodule(const AlgebraPtr& a);

/// E = A^e / rad(A^e) as an A-bimodule.
Bimodule semisimple_test_bimodule(const AlgebraPtr& a);

/// Matrix of z -> (sum_k w_k e_{c_k} (x) e_{d_k}^op) . z on m, for w in A^e
/// coordinates (index c * dim A + d).
Matrix enveloping_action(const Bimodule& m, const Vector& w);

/// Replaces the algebras by basis-permuted copies and relabels module basis
/// element p as module_perm[p]. Requires left and right algebra to coincide
/// when a single algebra permutation is given.
Bimodule permute_bimodule(const Bimodule& m, const AlgebraPtr& left, const std::vector<std::size_t>& left_perm,
                          const AlgebraPtr& right, const std::vector<std::size_t>& right_perm,
                          const std::vector<std::size_t>& module_perm);

}  // namespace ttba
