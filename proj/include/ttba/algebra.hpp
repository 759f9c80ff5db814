#pragma once

#include "ttba/exactlin.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ttba {

/// One failed axiom instance, e.g. axiom "associativity" with indices (i,j,k).
struct Violation {
  std::string axiom;
  std::vector<std::size_t> indices;
  std::string detail;
};
using ValidationReport = std::vector<Violation>;

std::string describe(const Violation& v);

/// e_i * e_j = sum_k value * e_k
struct StructureConstant {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Rational value;
  friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

/// Finite-dimensional algebra over Q given by structure constants in a fixed
/// basis, together with a declared unit vector. Construction only checks
/// index ranges; the algebra axioms are reported by check_algebra().
class FDAlgebra {
public:
  FDAlgebra() = default;
  FDAlgebra(std::vector<std::string> basis_labels, const std::vector<StructureConstant>& structure, Vector unit);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const Vector& unit() const { return unit_; }

  /// Sparse coordinates of e_i * e_j.
  const std::vector<SparseEntry>& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Rational coefficient(std::size_t i, std::size_t j, std::size_t k) const;

  /// All nonzero structure constants in (i, j, k) order.
  std::vector<StructureConstant> structure() const;

  /// Matrix of y -> x*y (resp. y -> y*x).
  Matrix left_multiplication(const Vector& x) const;
  Matrix right_multiplication(const Vector& x) const;

  friend bool operator==(const FDAlgebra& a, const FDAlgebra& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_ && a.unit_ == b.unit_;
  }

private:
  std::vector<std::string> labels_;
  std::vector<std::vector<SparseEntry>> table_;
  Vector unit_;
};

Vector multiply(const FDAlgebra& a, const Vector& x, const Vector& y);
Vector basis_product(const FDAlgebra& a, std::size_t i, std::size_t j);

/// Every failed associativity triple and unit axiom; empty iff valid.
ValidationReport check_algebra(const FDAlgebra& a);

FDAlgebra direct_sum(const FDAlgebra& a, const FDAlgebra& b);
FDAlgebra opposite(const FDAlgebra& a);
/// Basis e_i (x) f_j at index i * dim(b) + j.
FDAlgebra tensor(const FDAlgebra& a, const FDAlgebra& b);
/// A (x) A^op; (a (x) b^op) acts on a bimodule as z -> a z b.
FDAlgebra enveloping(const FDAlgebra& a);

/// Jacobson radical via the trace form: x is radical iff tr(L_{xy}) = 0 for
/// every y (characteristic zero).
std::vector<Vector> radical(const FDAlgebra& a);

/// Quotient by a two-sided ideal, in the complement coordinates of
/// SubspaceQuotient.
FDAlgebra quotient_algebra(const FDAlgebra& a, const std::vector<Vector>& ideal);

/// Center as the common kernel of x -> e_i x - x e_i.
std::vector<Vector> center_basis(const FDAlgebra& a);

/// Relabels basis element i as perm[i].
FDAlgebra permute_basis(const FDAlgebra& a, const std::vector<std::size_t>& perm);
Matrix permutation_matrix(const std::vector<std::size_t>& perm);

/// Algebra automorphism stored with its inverse. Columns of `matrix` are the
/// images of the basis vectors.
struct Automorphism {
  Matrix matrix;
  Matrix inverse;

  std::size_t dim() const { return static_cast<std::size_t>(matrix.rows()); }
  Vector apply(const Vector& v) const { return matrix * v; }
  Automorphism inverted() const { return {inverse, matrix}; }
  friend bool operator==(const Automorphism& a, const Automorphism& b) { return a.matrix == b.matrix; }
};

Automorphism identity_automorphism(std::size_t n);
Automorphism compose(const Automorphism& outer, const Automorphism& inner);

/// The Automorphism when m is invertible, multiplicative on basis pairs, and
/// fixes the unit; nullopt otherwise.
std::optional<Automorphism> check_automorphism(const FDAlgebra& a, const Matrix& m);

}  // namespace ttba
