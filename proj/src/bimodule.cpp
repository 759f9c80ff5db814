#include "ttba/bimodule.hpp"

#include <stdexcept>

namespace ttba {

namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

std::vector<Matrix> matrices_from_constants(std::size_t alg_dim, std::size_t dim, const std::vector<ActionConstant>& cs) {
  std::vector<Matrix> mats(alg_dim, Matrix::Zero(ix(dim), ix(dim)));
  for (const auto& c : cs) {
    if (c.alg >= alg_dim || c.from >= dim || c.to >= dim) throw std::out_of_range("action constant index out of range");
    mats[c.alg](ix(c.to), ix(c.from)) += c.value;
  }
  return mats;
}

std::vector<ActionConstant> constants_from_matrices(const std::vector<Matrix>& mats) {
  std::vector<ActionConstant> out;
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (Eigen::Index p = 0; p < mats[i].cols(); ++p)
      for (Eigen::Index q = 0; q < mats[i].rows(); ++q)
        if (!mats[i](q, p).is_zero())
          out.push_back({i, static_cast<std::size_t>(p), static_cast<std::size_t>(q), mats[i](q, p)});
  return out;
}

Matrix combination(const std::vector<Matrix>& mats, const Vector& w, std::size_t dim) {
  Matrix m = Matrix::Zero(ix(dim), ix(dim));
  for (std::size_t i = 0; i < mats.size(); ++i)
    if (!w(ix(i)).is_zero()) m += mats[i] * w(ix(i));
  return m;
}

std::vector<std::string> dual_labels(const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(l + "*");
  return out;
}

}  // namespace

Bimodule::Bimodule(AlgebraPtr left, AlgebraPtr right, std::vector<std::string> basis_labels,
                   const std::vector<ActionConstant>& left_action, const std::vector<ActionConstant>& right_action)
    : left_(std::move(left)), right_(std::move(right)), labels_(std::move(basis_labels)) {
  if (!left_ || !right_) throw std::invalid_argument("bimodule requires both algebras");
  left_mats_ = matrices_from_constants(left_->dim(), dim(), left_action);
  right_mats_ = matrices_from_constants(right_->dim(), dim(), right_action);
}

Bimodule::Bimodule(AlgebraPtr left, AlgebraPtr right, std::vector<std::string> basis_labels,
                   std::vector<Matrix> left_matrices, std::vector<Matrix> right_matrices)
    : left_(std::move(left)), right_(std::move(right)), labels_(std::move(basis_labels)),
      left_mats_(std::move(left_matrices)), right_mats_(std::move(right_matrices)) {
  if (!left_ || !right_) throw std::invalid_argument("bimodule requires both algebras");
  if (left_mats_.size() != left_->dim() || right_mats_.size() != right_->dim())
    throw std::invalid_argument("one action matrix per algebra basis element is required");
  for (const auto* mats : {&left_mats_, &right_mats_})
    for (const auto& m : *mats)
      if (static_cast<std::size_t>(m.rows()) != dim() || static_cast<std::size_t>(m.cols()) != dim())
        throw std::invalid_argument("action matrix shape differs from module dimension");
}

Matrix Bimodule::left_action(const Vector& a) const {
  if (static_cast<std::size_t>(a.size()) != left_->dim()) throw std::invalid_argument("coordinate length differs from left algebra dimension");
  return combination(left_mats_, a, dim());
}

Matrix Bimodule::right_action(const Vector& b) const {
  if (static_cast<std::size_t>(b.size()) != right_->dim()) throw std::invalid_argument("coordinate length differs from right algebra dimension");
  return combination(right_mats_, b, dim());
}

std::vector<ActionConstant> Bimodule::left_constants() const { return constants_from_matrices(left_mats_); }
std::vector<ActionConstant> Bimodule::right_constants() const { return constants_from_matrices(right_mats_); }

bool operator==(const Bimodule& x, const Bimodule& y) {
  return *x.left_ == *y.left_ && *x.right_ == *y.right_ && x.labels_ == y.labels_ && x.left_mats_ == y.left_mats_ &&
         x.right_mats_ == y.right_mats_;
}

ValidationReport check_bimodule(const Bimodule& x) {
  ValidationReport report;
  const FDAlgebra& a = x.left_algebra();
  const FDAlgebra& b = x.right_algebra();
  const std::size_t n = x.dim();
  auto record = [&](const std::string& axiom, std::size_t i, std::size_t j, const Matrix& lhs, const Matrix& rhs) {
    for (std::size_t p = 0; p < n; ++p)
      if (lhs.col(ix(p)) != rhs.col(ix(p))) report.push_back({axiom, {i, j, p}, ""});
  };
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      record("left associativity (e_i e_j).x_p = e_i.(e_j.x_p)", i, j, x.left_action(basis_product(a, i, j)),
             x.left_matrix(i) * x.left_matrix(j));
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t l = 0; l < b.dim(); ++l)
      record("right associativity x_p.(e_j e_l) = (x_p.e_j).e_l", j, l, x.right_action(basis_product(b, j, l)),
             x.right_matrix(l) * x.right_matrix(j));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      record("compatibility (e_i.x_p).f_j = e_i.(x_p.f_j)", i, j, x.right_matrix(j) * x.left_matrix(i),
             x.left_matrix(i) * x.right_matrix(j));
  const Matrix id = identity_matrix(n);
  const Matrix lu = x.left_action(a.unit()), ru = x.right_action(b.unit());
  for (std::size_t p = 0; p < n; ++p) {
    if (lu.col(ix(p)) != id.col(ix(p))) report.push_back({"left unit 1_A.x_p = x_p", {p}, ""});
    if (ru.col(ix(p)) != id.col(ix(p))) report.push_back({"right unit x_p.1_B = x_p", {p}, ""});
  }
  return report;
}

Vector act(const Bimodule& m, const Vector& a, const Vector& x, const Vector& b) {
  if (static_cast<std::size_t>(x.size()) != m.dim()) throw std::invalid_argument("coordinate length differs from module dimension");
  return m.right_action(b) * (m.left_action(a) * x);
}

Bimodule regular_bimodule(const AlgebraPtr& a) {
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    left.push_back(a->left_multiplication(unit_vector(a->dim(), i)));
    right.push_back(a->right_multiplication(unit_vector(a->dim(), i)));
  }
  return Bimodule(a, a, a->basis_labels(), std::move(left), std::move(right));
}

Bimodule dual_bimodule(const Bimodule& m) {
  std::vector<Matrix> left, right;
  for (std::size_t j = 0; j < m.right_algebra().dim(); ++j) left.push_back(m.right_matrix(j).transpose());
  for (std::size_t i = 0; i < m.left_algebra().dim(); ++i) right.push_back(m.left_matrix(i).transpose());
  return Bimodule(m.right_algebra_ptr(), m.left_algebra_ptr(), dual_labels(m.basis_labels()), std::move(left),
                  std::move(right));
}

Bimodule twisted_dual(const Bimodule& x, const Automorphism& sigma_a, const Automorphism& sigma_b) {
  std::vector<Matrix> left, right;
  for (std::size_t j = 0; j < x.right_algebra().dim(); ++j)
    left.push_back(x.right_action(sigma_b.matrix.col(ix(j))).transpose());
  for (std::size_t i = 0; i < x.left_algebra().dim(); ++i)
    right.push_back(x.left_action(sigma_a.matrix.col(ix(i))).transpose());
  return Bimodule(x.right_algebra_ptr(), x.left_algebra_ptr(), dual_labels(x.basis_labels()), std::move(left),
                  std::move(right));
}

Bimodule left_action_only(const Bimodule& m) {
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < m.left_algebra().dim(); ++i) {
    left.push_back(m.left_matrix(i));
    right.push_back(Matrix::Zero(ix(m.dim()), ix(m.dim())));
  }
  return Bimodule(m.left_algebra_ptr(), m.left_algebra_ptr(), m.basis_labels(), std::move(left), std::move(right));
}

Bimodule right_action_only(const Bimodule& m) {
  std::vector<Matrix> left, right;
  for (std::size_t j = 0; j < m.right_algebra().dim(); ++j) {
    left.push_back(Matrix::Zero(ix(m.dim()), ix(m.dim())));
    right.push_back(m.right_matrix(j));
  }
  return Bimodule(m.right_algebra_ptr(), m.right_algebra_ptr(), m.basis_labels(), std::move(left), std::move(right));
}

Bimodule quotient_bimodule(const Bimodule& m, const std::vector<Vector>& sub) {
  const SubspaceQuotient q(m.dim(), sub);
  const auto& comp = q.complement();
  const std::size_t qd = comp.size();
  auto descend = [&](const Matrix& act_m) {
    Matrix out(ix(qd), ix(qd));
    for (std::size_t s = 0; s < qd; ++s) out.col(ix(s)) = q.project(act_m.col(ix(comp[s])));
    return out;
  };
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < m.left_algebra().dim(); ++i) left.push_back(descend(m.left_matrix(i)));
  for (std::size_t j = 0; j < m.right_algebra().dim(); ++j) right.push_back(descend(m.right_matrix(j)));
  std::vector<std::string> labels;
  for (std::size_t c : comp) labels.push_back(m.basis_labels()[c]);
  return Bimodule(m.left_algebra_ptr(), m.right_algebra_ptr(), std::move(labels), std::move(left), std::move(right));
}

Bimodule free_bimodule(const AlgebraPtr& a) {
  const std::size_t n = a->dim();
  std::vector<ActionConstant> left, right;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t d = 0; d < n; ++d) {
        for (const auto& e : a->product(i, c)) left.push_back({i, c * n + d, e.col * n + d, e.value});
        for (const auto& e : a->product(d, i)) right.push_back({i, c * n + d, c * n + e.col, e.value});
      }
  std::vector<std::string> labels;
  for (const auto& lc : a->basis_labels())
    for (const auto& ld : a->basis_labels()) labels.push_back(lc + "⊗" + ld);
  return Bimodule(a, a, std::move(labels), left, right);
}

Bimodule semisimple_test_bimodule(const AlgebraPtr& a) {
  return quotient_bimodule(free_bimodule(a), radical(enveloping(*a)));
}

Matrix enveloping_action(const Bimodule& m, const Vector& w) {
  const std::size_t n = m.left_algebra().dim();
  Matrix out = Matrix::Zero(ix(m.dim()), ix(m.dim()));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = 0; d < n; ++d) {
      const Rational& coeff = w(ix(c * n + d));
      if (!coeff.is_zero()) out += (m.left_matrix(c) * m.right_matrix(d)) * coeff;
    }
  return out;
}

Bimodule permute_bimodule(const Bimodule& m, const AlgebraPtr& left, const std::vector<std::size_t>& left_perm,
                          const AlgebraPtr& right, const std::vector<std::size_t>& right_perm,
                          const std::vector<std::size_t>& module_perm) {
  const Matrix p = permutation_matrix(module_perm);
  const Matrix pt = p.transpose();
  std::vector<Matrix> l(m.left_algebra().dim()), r(m.right_algebra().dim());
  for (std::size_t i = 0; i < l.size(); ++i) l[left_perm[i]] = p * m.left_matrix(i) * pt;
  for (std::size_t j = 0; j < r.size(); ++j) r[right_perm[j]] = p * m.right_matrix(j) * pt;
  std::vector<std::string> labels(m.dim());
  for (std::size_t q = 0; q < m.dim(); ++q) labels[module_perm[q]] = m.basis_labels()[q];
  return Bimodule(left, right, std::move(labels), std::move(l), std::move(r));
}

}  // namespace ttba
