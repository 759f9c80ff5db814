#include "ttba/shear.hpp"

#include "ttba/errors.hpp"

#include <stdexcept>

namespace ttba {

namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

std::vector<Matrix> twisted_left(const Bimodule& x, const Automorphism& s) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < x.left_algebra().dim(); ++i) out.push_back(x.left_action(s.matrix.col(ix(i))));
  return out;
}

std::vector<Matrix> twisted_right(const Bimodule& x, const Automorphism& s) {
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < x.right_algebra().dim(); ++j) out.push_back(x.right_action(s.matrix.col(ix(j))));
  return out;
}

void require_shape(const Bimodule& x, const Shear& s) {
  const auto dx = ix(x.dim());
  if (s.f.rows() != dx || s.f.cols() != ix(x.left_algebra().dim()) || s.g.rows() != dx ||
      s.g.cols() != ix(x.right_algebra().dim()))
    throw std::invalid_argument("shear: f must be dim X x dim A and g dim X x dim B");
}

}  // namespace

Shear zero_shear(const Bimodule& x) {
  return {Matrix::Zero(ix(x.dim()), ix(x.left_algebra().dim())), Matrix::Zero(ix(x.dim()), ix(x.right_algebra().dim()))};
}

Shear operator+(const Shear& s, const Shear& t) { return {s.f + t.f, s.g + t.g}; }
Shear operator-(const Shear& s) { return {-s.f, -s.g}; }
Shear operator*(const Rational& c, const Shear& s) { return {s.f * c, s.g * c}; }

std::size_t shear_param_count(const Bimodule& x) {
  return x.dim() * (x.left_algebra().dim() + x.right_algebra().dim());
}

Vector shear_params(const Shear& s) {
  Vector v(s.f.size() + s.g.size());
  v << s.f.reshaped(), s.g.reshaped();
  return v;
}

Shear shear_from_params(const Bimodule& x, const Vector& params) {
  if (params.size() != ix(shear_param_count(x))) throw std::invalid_argument("shear: parameter vector has wrong length");
  const auto dx = ix(x.dim()), da = ix(x.left_algebra().dim()), db = ix(x.right_algebra().dim());
  Shear s = zero_shear(x);
  s.f = params.head(dx * da).reshaped(dx, da);
  s.g = params.tail(dx * db).reshaped(dx, db);
  return s;
}

RatMatrix cocycle_system(const Bimodule& x, const Twist& sigma) {
  const FDAlgebra& a = x.left_algebra();
  const FDAlgebra& b = x.right_algebra();
  const std::size_t dx = x.dim(), da = a.dim(), db = b.dim();
  const auto ls = twisted_left(x, sigma.sigma_a);
  const auto rs = twisted_right(x, sigma.sigma_b);
  auto fp = [&](std::size_t q, std::size_t i) { return i * dx + q; };
  auto gp = [&](std::size_t q, std::size_t j) { return dx * da + j * dx + q; };

  std::vector<Triplet> t;
  std::size_t row = 0;
  // f(e_i e_k) - sigma_A(e_i).f(e_k)
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < da; ++k) {
      for (std::size_t q = 0; q < dx; ++q, ++row) {
        for (const auto& e : a.product(i, k)) t.push_back({row, fp(q, e.col), e.value});
        for (std::size_t r = 0; r < dx; ++r)
          if (!ls[i](ix(q), ix(r)).is_zero()) t.push_back({row, fp(r, k), -ls[i](ix(q), ix(r))});
      }
    }
  // g(e_j e_l) - g(e_j).sigma_B(e_l)
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t l = 0; l < db; ++l) {
      for (std::size_t q = 0; q < dx; ++q, ++row) {
        for (const auto& e : b.product(j, l)) t.push_back({row, gp(q, e.col), e.value});
        for (std::size_t r = 0; r < dx; ++r)
          if (!rs[l](ix(q), ix(r)).is_zero()) t.push_back({row, gp(r, j), -rs[l](ix(q), ix(r))});
      }
    }
  // sigma_A(e_i).g(e_l) + f(e_i).sigma_B(e_l)
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t l = 0; l < db; ++l) {
      for (std::size_t q = 0; q < dx; ++q, ++row) {
        for (std::size_t r = 0; r < dx; ++r) {
          if (!ls[i](ix(q), ix(r)).is_zero()) t.push_back({row, gp(r, l), ls[i](ix(q), ix(r))});
          if (!rs[l](ix(q), ix(r)).is_zero()) t.push_back({row, fp(r, i), rs[l](ix(q), ix(r))});
        }
      }
    }
  return RatMatrix::from_triplets(row, shear_param_count(x), std::move(t));
}

bool is_cocycle(const Bimodule& x, const Twist& sigma, const Shear& theta) {
  require_shape(x, theta);
  return is_zero(Matrix(cocycle_system(x, sigma) * shear_params(theta)));
}

std::vector<Shear> cocycle_space(const Bimodule& x, const Twist& sigma) {
  std::vector<Shear> out;
  for (const auto& v : kernel_basis(cocycle_system(x, sigma))) out.push_back(shear_from_params(x, v));
  return out;
}

Shear inner_shear(const Bimodule& x, const Twist& sigma, const Vector& eta) {
  if (eta.size() != ix(x.dim())) throw std::invalid_argument("inner shear: eta has wrong length");
  Shear s = zero_shear(x);
  for (std::size_t i = 0; i < x.left_algebra().dim(); ++i)
    s.f.col(ix(i)) = x.left_action(sigma.sigma_a.matrix.col(ix(i))) * eta;
  for (std::size_t j = 0; j < x.right_algebra().dim(); ++j)
    s.g.col(ix(j)) = -(x.right_action(sigma.sigma_b.matrix.col(ix(j))) * eta);
  return s;
}

std::vector<Shear> inner_shears(const Bimodule& x, const Twist& sigma) {
  std::vector<Vector> images;
  for (std::size_t p = 0; p < x.dim(); ++p) images.push_back(shear_params(inner_shear(x, sigma, unit_vector(x.dim(), p))));
  std::vector<Shear> out;
  for (const auto& v : span_basis(images, shear_param_count(x))) out.push_back(shear_from_params(x, v));
  return out;
}

bool in_span(const std::vector<Shear>& basis, const Shear& theta) {
  if (basis.empty()) return is_zero(shear_params(theta));
  std::vector<Vector> vs;
  for (const auto& s : basis) vs.push_back(shear_params(s));
  const std::size_t n = static_cast<std::size_t>(vs.front().size());
  const std::size_t r = rank(rows_matrix(vs, n));
  vs.push_back(shear_params(theta));
  return rank(rows_matrix(vs, n)) == r;
}

ShearCohomology shear_cohomology(const Bimodule& x, const Twist& sigma) {
  const auto z = cocycle_space(x, sigma);
  const auto b = inner_shears(x, sigma);
  ShearCohomology c;
  c.z1 = z.size();
  c.b1 = b.size();
  c.ambient = shear_param_count(x);
  c.inner_in_cocycles = true;
  for (const auto& s : b) c.inner_in_cocycles = c.inner_in_cocycles && is_cocycle(x, sigma, s);
  return c;
}

std::size_t shear_quotient_dim(const Bimodule& x, const Twist& sigma) { return shear_cohomology(x, sigma).quotient(); }

LambdaMap lambda_map(const TriAlgebra& t, const Shear& theta) {
  require_shape(t.x, theta);
  const Blocks& bl = t.blocks;
  Matrix m = identity_matrix(bl.total());
  m.block(ix(bl.x_offset()), ix(bl.a_offset()), ix(bl.x_dim), ix(bl.a_dim)) = theta.f;
  m.block(ix(bl.x_offset()), ix(bl.b_offset()), ix(bl.x_dim), ix(bl.b_dim)) = theta.g;
  LambdaMap out{m, true};
  const FDAlgebra& c = *t.carrier;
  for (std::size_t i = 0; i < c.dim() && out.multiplicative; ++i)
    for (std::size_t j = 0; j < c.dim() && out.multiplicative; ++j)
      out.multiplicative = Vector(m * basis_product(c, i, j)) == multiply(c, m.col(ix(i)), m.col(ix(j)));
  return out;
}

Shear transport(const Shear& theta, const Automorphism& alpha, const Automorphism& beta, const Matrix& u) {
  if (u.rows() != u.cols() || u.rows() != theta.f.rows())
    throw std::invalid_argument("transport: u must be square of size dim X");
  if (alpha.dim() != static_cast<std::size_t>(theta.f.cols()) || beta.dim() != static_cast<std::size_t>(theta.g.cols()))
    throw std::invalid_argument("transport: alpha, beta do not match the shear shape");
  const auto uinv = inverse(u);
  if (!uinv) throw ValidationError("transport: u is singular");
  return {Matrix(*uinv * theta.f * alpha.matrix), Matrix(*uinv * theta.g * beta.matrix)};
}

}  // namespace ttba
