#include "ttba/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ttba {

namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

void add_scaled(Vector& acc, const std::vector<SparseEntry>& v, const Rational& s) {
  for (const auto& e : v) acc(ix(e.col)) += e.value * s;
}

}  // namespace

std::string describe(const Violation& v) {
  std::ostringstream os;
  os << v.axiom << " (";
  for (std::size_t i = 0; i < v.indices.size(); ++i) os << (i ? "," : "") << v.indices[i];
  os << ")";
  if (!v.detail.empty()) os << ": " << v.detail;
  return os.str();
}

FDAlgebra::FDAlgebra(std::vector<std::string> basis_labels, const std::vector<StructureConstant>& structure, Vector unit)
    : labels_(std::move(basis_labels)), table_(labels_.size() * labels_.size()), unit_(std::move(unit)) {
  const std::size_t n = labels_.size();
  if (static_cast<std::size_t>(unit_.size()) != n) throw std::invalid_argument("unit vector length differs from algebra dimension");
  std::vector<Triplet> t;
  t.reserve(structure.size());
  for (const auto& c : structure) {
    if (c.i >= n || c.j >= n || c.k >= n) throw std::out_of_range("structure constant index out of range");
    t.push_back({c.i * n + c.j, c.k, c.value});
  }
  const RatMatrix m = RatMatrix::from_triplets(n * n, n, std::move(t));
  for (std::size_t r = 0; r < n * n; ++r) table_[r] = m.row(r);
}

Rational FDAlgebra::coefficient(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& e : product(i, j))
    if (e.col == k) return e.value;
  return Rational(0);
}

std::vector<StructureConstant> FDAlgebra::structure() const {
  std::vector<StructureConstant> out;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& e : product(i, j)) out.push_back({i, j, e.col, e.value});
  return out;
}

Matrix FDAlgebra::left_multiplication(const Vector& x) const {
  const std::size_t n = dim();
  Matrix m = Matrix::Zero(ix(n), ix(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (x(ix(i)).is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& e : product(i, j)) m(ix(e.col), ix(j)) += x(ix(i)) * e.value;
  }
  return m;
}

Matrix FDAlgebra::right_multiplication(const Vector& x) const {
  const std::size_t n = dim();
  Matrix m = Matrix::Zero(ix(n), ix(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (x(ix(j)).is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& e : product(i, j)) m(ix(e.col), ix(i)) += x(ix(j)) * e.value;
  }
  return m;
}

Vector multiply(const FDAlgebra& a, const Vector& x, const Vector& y) {
  const std::size_t n = a.dim();
  if (static_cast<std::size_t>(x.size()) != n || static_cast<std::size_t>(y.size()) != n)
    throw std::invalid_argument("coordinate length differs from algebra dimension");
  Vector out = Vector::Zero(ix(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (x(ix(i)).is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y(ix(j)).is_zero()) continue;
      add_scaled(out, a.product(i, j), x(ix(i)) * y(ix(j)));
    }
  }
  return out;
}

Vector basis_product(const FDAlgebra& a, std::size_t i, std::size_t j) {
  Vector out = Vector::Zero(ix(a.dim()));
  add_scaled(out, a.product(i, j), Rational(1));
  return out;
}

ValidationReport check_algebra(const FDAlgebra& a) {
  ValidationReport report;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // (e_i e_j) e_k versus e_i (e_j e_k)
        Vector lhs = Vector::Zero(ix(n)), rhs = Vector::Zero(ix(n));
        for (const auto& e : a.product(i, j)) add_scaled(lhs, a.product(e.col, k), e.value);
        for (const auto& e : a.product(j, k)) add_scaled(rhs, a.product(i, e.col), e.value);
        if (lhs != rhs) report.push_back({"associativity", {i, j, k}, "(e_i e_j) e_k != e_i (e_j e_k)"});
      }
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = unit_vector(n, i);
    if (multiply(a, a.unit(), ei) != ei)
      report.push_back({"unit", {i}, "unit * e_i != e_i; algebras without an exact unit are not supported"});
    if (multiply(a, ei, a.unit()) != ei)
      report.push_back({"unit", {i}, "e_i * unit != e_i; algebras without an exact unit are not supported"});
  }
  return report;
}

FDAlgebra direct_sum(const FDAlgebra& a, const FDAlgebra& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  std::vector<std::string> labels = a.basis_labels();
  labels.insert(labels.end(), b.basis_labels().begin(), b.basis_labels().end());
  std::vector<StructureConstant> sc = a.structure();
  for (auto c : b.structure()) sc.push_back({c.i + na, c.j + na, c.k + na, c.value});
  Vector unit(ix(na + nb));
  unit << a.unit(), b.unit();
  return FDAlgebra(std::move(labels), sc, std::move(unit));
}

FDAlgebra opposite(const FDAlgebra& a) {
  std::vector<StructureConstant> sc;
  for (const auto& c : a.structure()) sc.push_back({c.j, c.i, c.k, c.value});
  return FDAlgebra(a.basis_labels(), sc, a.unit());
}

FDAlgebra tensor(const FDAlgebra& a, const FDAlgebra& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  std::vector<std::string> labels;
  labels.reserve(na * nb);
  for (const auto& la : a.basis_labels())
    for (const auto& lb : b.basis_labels()) labels.push_back(la + "⊗" + lb);
  const auto sa = a.structure(), sb = b.structure();
  std::vector<StructureConstant> sc;
  sc.reserve(sa.size() * sb.size());
  for (const auto& x : sa)
    for (const auto& y : sb)
      sc.push_back({x.i * nb + y.i, x.j * nb + y.j, x.k * nb + y.k, x.value * y.value});
  Vector unit = Vector::Zero(ix(na * nb));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) unit(ix(i * nb + j)) = a.unit()(ix(i)) * b.unit()(ix(j));
  return FDAlgebra(std::move(labels), sc, std::move(unit));
}

FDAlgebra enveloping(const FDAlgebra& a) { return tensor(a, opposite(a)); }

std::vector<Vector> radical(const FDAlgebra& a) {
  const std::size_t n = a.dim();
  // t_k = tr(L_{e_k}); gram(i, j) = tr(L_{e_i e_j})
  std::vector<Rational> trace(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) trace[k] += a.coefficient(k, i, i);
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational g = 0;
      for (const auto& e : a.product(i, j)) g += e.value * trace[e.col];
      if (!g.is_zero()) t.push_back({j, i, g});
    }
  return kernel_basis(RatMatrix::from_triplets(n, n, std::move(t)));
}

FDAlgebra quotient_algebra(const FDAlgebra& a, const std::vector<Vector>& ideal) {
  const SubspaceQuotient q(a.dim(), ideal);
  const auto& comp = q.complement();
  std::vector<std::string> labels;
  for (std::size_t c : comp) labels.push_back(a.basis_labels()[c]);
  std::vector<StructureConstant> sc;
  for (std::size_t s = 0; s < comp.size(); ++s)
    for (std::size_t t = 0; t < comp.size(); ++t) {
      const Vector p = q.project(basis_product(a, comp[s], comp[t]));
      for (std::size_t k = 0; k < comp.size(); ++k)
        if (!p(ix(k)).is_zero()) sc.push_back({s, t, k, p(ix(k))});
    }
  return FDAlgebra(std::move(labels), sc, q.project(a.unit()));
}

std::vector<Vector> center_basis(const FDAlgebra& a) {
  const std::size_t n = a.dim();
  // row (i, k): coefficient of e_k in e_i x - x e_i, as a function of x
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& e : a.product(i, j)) t.push_back({i * n + e.col, j, e.value});
      for (const auto& e : a.product(j, i)) t.push_back({i * n + e.col, j, -e.value});
    }
  return kernel_basis(RatMatrix::from_triplets(n * n, n, std::move(t)));
}

FDAlgebra permute_basis(const FDAlgebra& a, const std::vector<std::size_t>& perm) {
  const std::size_t n = a.dim();
  if (perm.size() != n) throw std::invalid_argument("permutation length differs from algebra dimension");
  std::vector<std::string> labels(n);
  Vector unit = Vector::Zero(ix(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels[perm[i]] = a.basis_labels()[i];
    unit(ix(perm[i])) = a.unit()(ix(i));
  }
  std::vector<StructureConstant> sc;
  for (const auto& c : a.structure()) sc.push_back({perm[c.i], perm[c.j], perm[c.k], c.value});
  return FDAlgebra(std::move(labels), sc, std::move(unit));
}

Matrix permutation_matrix(const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  Matrix m = Matrix::Zero(ix(n), ix(n));
  for (std::size_t i = 0; i < n; ++i) m(ix(perm[i]), ix(i)) = 1;
  return m;
}

Automorphism identity_automorphism(std::size_t n) { return {identity_matrix(n), identity_matrix(n)}; }

Automorphism compose(const Automorphism& outer, const Automorphism& inner) {
  return {outer.matrix * inner.matrix, inner.inverse * outer.inverse};
}

std::optional<Automorphism> check_automorphism(const FDAlgebra& a, const Matrix& m) {
  const std::size_t n = a.dim();
  if (static_cast<std::size_t>(m.rows()) != n || static_cast<std::size_t>(m.cols()) != n) return std::nullopt;
  auto inv = inverse(m);
  if (!inv) return std::nullopt;
  if (Vector(m * a.unit()) != a.unit()) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector lhs = m * basis_product(a, i, j);
      const Vector rhs = multiply(a, m.col(ix(i)), m.col(ix(j)));
      if (lhs != rhs) return std::nullopt;
    }
  return Automorphism{m, *inv};
}

}  // namespace ttba
