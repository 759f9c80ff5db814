#pragma once

#include "ttba/triangular.hpp"

namespace ttba {

/// theta(a, b) = f(a) + g(b) with f : A -> X (dim X x dim A) and
/// g : B -> X (dim X x dim B).
struct Shear {
  Matrix f;
  Matrix g;

  Vector operator()(const Vector& a, const Vector& b) const { return f * a + g * b; }
  friend bool operator==(const Shear&, const Shear&) = default;
};

Shear zero_shear(const Bimodule& x);
Shear operator+(const Shear& s, const Shear& t);
Shear operator-(const Shear& s);
Shear operator*(const Rational& c, const Shear& s);

/// Flat coordinates: f(q, i) at i * dim X + q, then g(q, j) at
/// dim X * dim A + j * dim X + q.
Vector shear_params(const Shear& s);
Shear shear_from_params(const Bimodule& x, const Vector& params);
std::size_t shear_param_count(const Bimodule& x);

/// Linear system in the shear parameters whose kernel is Z^1_sigma. Rows come
/// from the cocycle identity on tuples (a, a', b, b') drawn from basis u {0}:
///   f(aa') = sigma_A(a).f(a'),  g(bb') = g(b).sigma_B(b'),
///   sigma_A(a).g(b') + f(a).sigma_B(b') = 0.
RatMatrix cocycle_system(const Bimodule& x, const Twist& sigma);

bool is_cocycle(const Bimodule& x, const Twist& sigma, const Shear& theta);
std::vector<Shear> cocycle_space(const Bimodule& x, const Twist& sigma);

/// theta_eta(a, b) = sigma_A(a).eta - eta.sigma_B(b).
Shear inner_shear(const Bimodule& x, const Twist& sigma, const Vector& eta);
/// A basis of B^1_sigma.
std::vector<Shear> inner_shears(const Bimodule& x, const Twist& sigma);

struct ShearCohomology {
  std::size_t z1 = 0;
  std::size_t b1 = 0;
  std::size_t ambient = 0;
  bool inner_in_cocycles = false;
  std::size_t quotient() const { return z1 - b1; }
};
ShearCohomology shear_cohomology(const Bimodule& x, const Twist& sigma);
std::size_t shear_quotient_dim(const Bimodule& x, const Twist& sigma);

/// True iff theta lies in span(basis).
bool in_span(const std::vector<Shear>& basis, const Shear& theta);

struct LambdaMap {
  Matrix matrix;
  bool multiplicative = false;
};
/// (a, x, b) -> (a, x + theta(a, b), b) on the carrier.
LambdaMap lambda_map(const TriAlgebra& t, const Shear& theta);

/// theta_sigma(a, b) = u^-1 theta(alpha(a), beta(b)). Throws ValidationError
/// when u is singular.
Shear transport(const Shear& theta, const Automorphism& alpha, const Automorphism& beta, const Matrix& u);

}  // namespace ttba
