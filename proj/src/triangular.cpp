#include "ttba/triangular.hpp"

#include "ttba/errors.hpp"

#include <stdexcept>

namespace ttba {

namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

void require_valid(const ValidationReport& report, const std::string& block) {
  if (report.empty()) return;
  std::string msg = block + ": " + describe(report.front());
  if (report.size() > 1) msg += " (and " + std::to_string(report.size() - 1) + " more)";
  throw ValidationError(msg);
}

void require_automorphism(const FDAlgebra& alg, const Automorphism& s, const std::string& name) {
  if (s.dim() != alg.dim()) throw ValidationError(name + ": matrix size differs from algebra dimension");
  if (!check_automorphism(alg, s.matrix)) throw ValidationError(name + ": not an algebra automorphism");
  if (Matrix(s.matrix * s.inverse) != identity_matrix(alg.dim()))
    throw ValidationError(name + ": stored inverse is not the inverse");
}

std::size_t span_rank(const std::vector<Vector>& vs, std::size_t n) { return rank(rows_matrix(vs, n)); }

}  // namespace

Twist identity_twist(std::size_t dim_a, std::size_t dim_b) {
  return {identity_automorphism(dim_a), identity_automorphism(dim_b)};
}

Vector TriAlgebra::embed(const Vector& av, const Vector& xv, const Vector& bv) const {
  Vector t(ix(blocks.total()));
  t << av, xv, bv;
  return t;
}

std::tuple<Vector, Vector, Vector> TriAlgebra::split(const Vector& t) const {
  return {t.segment(ix(blocks.a_offset()), ix(blocks.a_dim)), t.segment(ix(blocks.x_offset()), ix(blocks.x_dim)),
          t.segment(ix(blocks.b_offset()), ix(blocks.b_dim))};
}

TriAlgebra build_triangular(AlgebraPtr a, AlgebraPtr b, Bimodule x, Twist sigma) {
  require_valid(check_algebra(*a), "A");
  require_valid(check_algebra(*b), "B");
  if (!(x.left_algebra() == *a)) throw ValidationError("X: left algebra differs from A");
  if (!(x.right_algebra() == *b)) throw ValidationError("X: right algebra differs from B");
  require_valid(check_bimodule(x), "X");
  require_automorphism(*a, sigma.sigma_a, "sigma_A");
  require_automorphism(*b, sigma.sigma_b, "sigma_B");

  TriAlgebra t{a, b, x, sigma, nullptr, {a->dim(), x.dim(), b->dim()}};
  const Blocks& bl = t.blocks;
  std::vector<std::string> labels;
  for (const auto& l : a->basis_labels()) labels.push_back("A:" + l);
  for (const auto& l : x.basis_labels()) labels.push_back("X:" + l);
  for (const auto& l : b->basis_labels()) labels.push_back("B:" + l);

  std::vector<StructureConstant> sc;
  for (const auto& c : a->structure()) sc.push_back({c.i, c.j, c.k, c.value});
  for (const auto& c : b->structure())
    sc.push_back({c.i + bl.b_offset(), c.j + bl.b_offset(), c.k + bl.b_offset(), c.value});
  for (std::size_t i = 0; i < bl.a_dim; ++i) {
    const Matrix la = x.left_action(sigma.sigma_a.matrix.col(ix(i)));
    for (std::size_t p = 0; p < bl.x_dim; ++p)
      for (std::size_t q = 0; q < bl.x_dim; ++q)
        if (!la(ix(q), ix(p)).is_zero()) sc.push_back({i, bl.x_offset() + p, bl.x_offset() + q, la(ix(q), ix(p))});
  }
  for (std::size_t j = 0; j < bl.b_dim; ++j) {
    const Matrix rb = x.right_action(sigma.sigma_b.matrix.col(ix(j)));
    for (std::size_t p = 0; p < bl.x_dim; ++p)
      for (std::size_t q = 0; q < bl.x_dim; ++q)
        if (!rb(ix(q), ix(p)).is_zero()) sc.push_back({bl.x_offset() + p, bl.b_offset() + j, bl.x_offset() + q, rb(ix(q), ix(p))});
  }
  Vector unit = t.embed(a->unit(), Vector::Zero(ix(bl.x_dim)), b->unit());
  t.carrier = std::make_shared<const FDAlgebra>(std::move(labels), sc, std::move(unit));
  require_valid(check_algebra(*t.carrier), "carrier");
  return t;
}

PeirceData peirce(const TriAlgebra& t) {
  const FDAlgebra& c = *t.carrier;
  const std::size_t n = c.dim();
  const Blocks& bl = t.blocks;
  PeirceData d;
  d.e11 = t.embed(t.a->unit(), Vector::Zero(ix(bl.x_dim)), Vector::Zero(ix(bl.b_dim)));
  d.e22 = t.embed(Vector::Zero(ix(bl.a_dim)), Vector::Zero(ix(bl.x_dim)), t.b->unit());
  const Vector zero = Vector::Zero(ix(n));
  d.idempotents = multiply(c, d.e11, d.e11) == d.e11 && multiply(c, d.e22, d.e22) == d.e22 &&
                  multiply(c, d.e11, d.e22) == zero && multiply(c, d.e22, d.e11) == zero;
  d.sums_to_unit = Vector(d.e11 + d.e22) == c.unit();

  auto corner = [&](const Vector& left, const Vector& right) {
    std::vector<Vector> vs;
    for (std::size_t s = 0; s < n; ++s) vs.push_back(multiply(c, multiply(c, left, unit_vector(n, s)), right));
    return vs;
  };
  auto block = [&](std::size_t offset, std::size_t dim) {
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < dim; ++i) vs.push_back(unit_vector(n, offset + i));
    return vs;
  };
  auto same_span = [&](const std::vector<Vector>& u, const std::vector<Vector>& v) {
    std::vector<Vector> both = u;
    both.insert(both.end(), v.begin(), v.end());
    const auto r = span_rank(u, n);
    return r == span_rank(v, n) && r == span_rank(both, n);
  };

  const auto c11 = corner(d.e11, d.e11), c22 = corner(d.e22, d.e22), c12 = corner(d.e11, d.e22),
             c21 = corner(d.e22, d.e11);
  d.corner_dims = {span_rank(c11, n), span_rank(c22, n), span_rank(c12, n), span_rank(c21, n)};
  d.lower_corner_zero = d.corner_dims[3] == 0;

  bool a_products = true;
  for (std::size_t i = 0; i < bl.a_dim && a_products; ++i)
    for (std::size_t j = 0; j < bl.a_dim; ++j) {
      Vector expect = Vector::Zero(ix(n));
      expect.segment(0, ix(bl.a_dim)) = basis_product(*t.a, i, j);
      if (basis_product(c, i, j) != expect) { a_products = false; break; }
    }
  bool b_products = true;
  for (std::size_t i = 0; i < bl.b_dim && b_products; ++i)
    for (std::size_t j = 0; j < bl.b_dim; ++j) {
      Vector expect = Vector::Zero(ix(n));
      expect.segment(ix(bl.b_offset()), ix(bl.b_dim)) = basis_product(*t.b, i, j);
      if (basis_product(c, bl.b_offset() + i, bl.b_offset() + j) != expect) { b_products = false; break; }
    }
  d.corner_a_matches = a_products && d.corner_dims[0] == bl.a_dim && same_span(c11, block(bl.a_offset(), bl.a_dim));
  d.corner_b_matches = b_products && d.corner_dims[1] == bl.b_dim && same_span(c22, block(bl.b_offset(), bl.b_dim));
  d.corner_x_matches = d.corner_dims[2] == bl.x_dim && same_span(c12, block(bl.x_offset(), bl.x_dim));
  return d;
}

ExactSequence ideal_and_quotient(const TriAlgebra& t) {
  const FDAlgebra& c = *t.carrier;
  const std::size_t n = c.dim();
  const Blocks& bl = t.blocks;
  ExactSequence es;
  for (std::size_t p = 0; p < bl.x_dim; ++p) es.ideal_basis.push_back(unit_vector(n, bl.x_offset() + p));
  es.quotient = std::make_shared<const FDAlgebra>(direct_sum(*t.a, *t.b));

  es.ideal_square_zero = true;
  for (std::size_t p = 0; p < bl.x_dim; ++p)
    for (std::size_t q = 0; q < bl.x_dim; ++q)
      if (!c.product(bl.x_offset() + p, bl.x_offset() + q).empty()) es.ideal_square_zero = false;

  const std::size_t qd = bl.a_dim + bl.b_dim;
  es.projection = Matrix::Zero(ix(qd), ix(n));
  for (std::size_t i = 0; i < bl.a_dim; ++i) es.projection(ix(i), ix(i)) = 1;
  for (std::size_t j = 0; j < bl.b_dim; ++j) es.projection(ix(bl.a_dim + j), ix(bl.b_offset() + j)) = 1;

  es.projection_multiplicative = true;
  for (std::size_t s = 0; s < n && es.projection_multiplicative; ++s)
    for (std::size_t u = 0; u < n; ++u) {
      const Vector lhs = es.projection * basis_product(c, s, u);
      const Vector rhs = multiply(*es.quotient, es.projection.col(ix(s)), es.projection.col(ix(u)));
      if (lhs != rhs) { es.projection_multiplicative = false; break; }
    }

  const auto kernel = kernel_basis(es.projection);
  std::vector<Vector> both = kernel;
  both.insert(both.end(), es.ideal_basis.begin(), es.ideal_basis.end());
  const auto rk = span_rank(kernel, n);
  es.kernel_is_ideal = kernel.size() == bl.x_dim && rk == span_rank(both, n) && rk == span_rank(es.ideal_basis, n);
  return es;
}

Bimodule ideal_bimodule(const TriAlgebra& t) {
  const Blocks& bl = t.blocks;
  const Matrix zero = Matrix::Zero(ix(bl.x_dim), ix(bl.x_dim));
  std::vector<Matrix> left(bl.total(), zero), right(bl.total(), zero);
  for (std::size_t i = 0; i < bl.a_dim; ++i) left[bl.a_offset() + i] = t.x.left_action(t.twist.sigma_a.matrix.col(ix(i)));
  for (std::size_t j = 0; j < bl.b_dim; ++j) right[bl.b_offset() + j] = t.x.right_action(t.twist.sigma_b.matrix.col(ix(j)));
  return Bimodule(t.carrier, t.carrier, t.x.basis_labels(), std::move(left), std::move(right));
}

Bimodule ideal_quotient_bimodule(const TriAlgebra& t, const AlgebraPtr& quotient) {
  const Blocks& bl = t.blocks;
  if (quotient->dim() != bl.a_dim + bl.b_dim) throw std::invalid_argument("quotient dimension differs from dim A + dim B");
  const Matrix zero = Matrix::Zero(ix(bl.x_dim), ix(bl.x_dim));
  std::vector<Matrix> left(quotient->dim(), zero), right(quotient->dim(), zero);
  for (std::size_t i = 0; i < bl.a_dim; ++i) left[i] = t.x.left_action(t.twist.sigma_a.matrix.col(ix(i)));
  for (std::size_t j = 0; j < bl.b_dim; ++j) right[bl.a_dim + j] = t.x.right_action(t.twist.sigma_b.matrix.col(ix(j)));
  return Bimodule(quotient, quotient, t.x.basis_labels(), std::move(left), std::move(right));
}

Rational tri_norm(const TriAlgebra& t, const Vector& element) {
  if (static_cast<std::size_t>(element.size()) != t.blocks.total()) throw std::invalid_argument("coordinate length differs from carrier dimension");
  auto l1 = [](const Vector& v) {
    Rational s = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) s += abs(v(i));
    return s;
  };
  const auto [av, xv, bv] = t.split(element);
  return l1(av) + l1(xv) + l1(bv);
}

}  // namespace ttba
