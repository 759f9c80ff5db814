#include "ttba/catalog.hpp"

#include <stdexcept>

namespace ttba {

namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

Automorphism inner_automorphism(std::size_t n, const Matrix& g) {
  const auto g_inv = inverse(g);
  if (!g_inv) throw std::invalid_argument("conjugating matrix is singular");
  auto conj = [n](const Matrix& left, const Matrix& right) {
    Matrix m(ix(n * n), ix(n * n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Matrix e = Matrix::Zero(ix(n), ix(n));
        e(ix(i), ix(j)) = 1;
        const Matrix img = left * e * right;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) m(ix(a * n + b), ix(i * n + j)) = img(ix(a), ix(b));
      }
    return m;
  };
  return {conj(g, *g_inv), conj(*g_inv, g)};
}

TriAlgebra scalar_triangular() {
  AlgebraPtr q = matrix_algebra(1);
  return build_triangular(q, q, matrix_bimodule(q, q, 1, 1), identity_twist(1, 1));
}

TriAlgebra zero_offdiagonal_triangular() {
  AlgebraPtr q = matrix_algebra(1);
  Bimodule zero(q, q, {}, std::vector<ActionConstant>{}, std::vector<ActionConstant>{});
  return build_triangular(q, q, std::move(zero), identity_twist(1, 1));
}

TriAlgebra matrix_block_triangular() {
  AlgebraPtr m2 = matrix_algebra(2);
  AlgebraPtr q = matrix_algebra(1);
  Matrix g(2, 2);
  g << Rational(1), Rational(1), Rational(0), Rational(1);
  return build_triangular(m2, q, matrix_bimodule(m2, q, 2, 1), {inner_automorphism(2, g), identity_automorphism(1)});
}

TriAlgebra c3_inversion_triangular() {
  const FiniteGroup c3 = cyclic_group(3);
  AlgebraPtr qg = group_algebra(c3);
  return build_triangular(qg, qg, group_regular_bimodule(qg), {sigma_gamma(c3, inversion(c3)), identity_automorphism(3)});
}

std::vector<AnchoredFunctionSystem> anchored_examples() {
  return {
      {2, 2, 3, {0, 1, 1}, {0, 0, 1}, {1, 0}, {0, 1}},
      {3, 2, 4, {0, 1, 2, 2}, {1, 0, 1, 0}, {1, 2, 0}, {1, 0}},
      {3, 3, 3, {0, 1, 2}, {2, 0, 1}, {0, 2, 1}, {1, 2, 0}},
  };
}

TriAlgebra anchored_triangular(const AnchoredFunctionSystem& sys) {
  auto c = anchored_bimodule(sys);
  return build_triangular(c.a, c.b, std::move(c.x), std::move(c.sigma));
}

}  // namespace ttba
