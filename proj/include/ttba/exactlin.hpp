#pragma once

#include "ttba/rational.hpp"

#include <Eigen/Core>
#include <cstddef>
#include <optional>
#include <vector>

namespace ttba {

using Matrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

struct SparseEntry {
  std::size_t col;
  Rational value;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

struct Triplet {
  std::size_t row;
  std::size_t col;
  Rational value;
};

/// Sparse rational matrix stored by rows; every row is sorted by column and
/// holds no explicit zeros.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  /// Duplicate (row, col) entries are summed; zero sums are dropped.
  static RatMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> entries);
  static RatMatrix from_dense(const Matrix& m);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& v);
  const std::vector<SparseEntry>& row(std::size_t r) const { return rows_[r]; }

  RatMatrix transpose() const;
  Matrix to_dense() const;
  bool is_zero() const { return nonzeros() == 0; }

  Vector operator*(const Vector& v) const;
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

private:
  std::size_t cols_ = 0;
  std::vector<std::vector<SparseEntry>> rows_;
};

/// Rank over Q by fraction-free elimination. Rows are inserted in order and
/// each new pivot is the first row (in row-major order) to reach its column.
std::size_t rank(const RatMatrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {v : Mv = 0}, one vector per free column f (ascending), with
/// v[f] = 1, zero on the other free columns.
std::vector<Vector> kernel_basis(const RatMatrix& m);
std::vector<Vector> kernel_basis(const Matrix& m);

/// Canonical particular solution (free variables set to zero) or nullopt
/// when the system is inconsistent.
std::optional<Vector> solve(const RatMatrix& m, const Vector& b);

/// Nonzero rows of the reduced row echelon form, each with leading entry 1.
std::vector<Vector> row_space_basis(const RatMatrix& m);

/// Rows of the reduced echelon basis of span(vectors).
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t ambient);

std::optional<Matrix> inverse(const Matrix& m);

Matrix identity_matrix(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Matrix& m);

/// Stacks vectors as the rows of a sparse matrix.
RatMatrix rows_matrix(const std::vector<Vector>& vectors, std::size_t ambient);

/// V/W for W = span(spanning) inside Q^n, using the non-pivot coordinates of
/// the reduced echelon basis of W as quotient coordinates.
class SubspaceQuotient {
public:
  SubspaceQuotient(std::size_t ambient, const std::vector<Vector>& spanning);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t sub_dim() const { return basis_.size(); }
  std::size_t quotient_dim() const { return complement_.size(); }
  const std::vector<Vector>& sub_basis() const { return basis_; }
  const std::vector<std::size_t>& complement() const { return complement_; }

  Vector reduce(const Vector& v) const;
  Vector project(const Vector& v) const;
  Vector lift(const Vector& q) const;
  bool contains(const Vector& v) const;

private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> complement_;
};

}  // namespace ttba
