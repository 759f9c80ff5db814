#pragma once

#include "ttba/bimodule.hpp"

#include <array>
#include <tuple>

namespace ttba {

/// The pair (sigma_A, sigma_B).
struct Twist {
  Automorphism sigma_a;
  Automorphism sigma_b;
  friend bool operator==(const Twist&, const Twist&) = default;
};

Twist identity_twist(std::size_t dim_a, std::size_t dim_b);

/// Carrier basis order: A-block, then X-block, then B-block.
struct Blocks {
  std::size_t a_dim = 0;
  std::size_t x_dim = 0;
  std::size_t b_dim = 0;
  std::size_t a_offset() const { return 0; }
  std::size_t x_offset() const { return a_dim; }
  std::size_t b_offset() const { return a_dim + x_dim; }
  std::size_t total() const { return a_dim + x_dim + b_dim; }
};

/// T_sigma(A, B; X) with product
///   (a,x,b)(a',x',b') = (aa', sigma_A(a).x' + x.sigma_B(b'), bb').
struct TriAlgebra {
  AlgebraPtr a;
  AlgebraPtr b;
  Bimodule x;
  Twist twist;
  AlgebraPtr carrier;
  Blocks blocks;

  Vector embed(const Vector& av, const Vector& xv, const Vector& bv) const;
  std::tuple<Vector, Vector, Vector> split(const Vector& t) const;
};

/// Validates the components (errors name the failing block) and assembles
/// the carrier algebra; the carrier itself is then re-validated.
TriAlgebra build_triangular(AlgebraPtr a, AlgebraPtr b, Bimodule x, Twist sigma);

struct PeirceData {
  Vector e11;
  Vector e22;
  bool idempotents = false;      // e11^2 = e11, e22^2 = e22, e11 e22 = e22 e11 = 0
  bool sums_to_unit = false;
  std::array<std::size_t, 4> corner_dims{};  // e11Te11, e22Te22, e11Te22, e22Te11
  bool corner_a_matches = false;
  bool corner_b_matches = false;
  bool corner_x_matches = false;
  bool lower_corner_zero = false;
};

PeirceData peirce(const TriAlgebra& t);

struct ExactSequence {
  std::vector<Vector> ideal_basis;
  AlgebraPtr quotient;        // direct_sum(A, B)
  Matrix projection;          // carrier -> quotient
  bool ideal_square_zero = false;
  bool projection_multiplicative = false;
  bool kernel_is_ideal = false;
};

ExactSequence ideal_and_quotient(const TriAlgebra& t);

/// I as a T-T bimodule: (a,x,b).y = sigma_A(a).y and y.(a,x,b) = y.sigma_B(b).
Bimodule ideal_bimodule(const TriAlgebra& t);

/// The same actions factored through pi, as a bimodule over Q = A (+) B.
Bimodule ideal_quotient_bimodule(const TriAlgebra& t, const AlgebraPtr& quotient);

/// ||a||_1 + ||x||_1 + ||b||_1 in the declared bases.
Rational tri_norm(const TriAlgebra& t, const Vector& element);

}  // namespace ttba
