#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ttba/errors.hpp"
#include "ttba/exactlin.hpp"

#include <random>

using namespace ttba;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  Matrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Vector vec(std::initializer_list<int> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (int x : xs) v(i++) = x;
  return v;
}

// Small-integer sparse matrix from a fixed-seed engine (raw mt19937 output is
// portable; the distributions are not).
RatMatrix random_sparse(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng() % 3 == 0) {
        const int num = static_cast<int>(rng() % 7) - 3;
        const int den = static_cast<int>(rng() % 3) + 1;
        t.push_back({r, c, Rational(mpz_class(num), mpz_class(den))});
      }
  return RatMatrix::from_triplets(rows, cols, std::move(t));
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("3/6").str() == "1/2");
  CHECK(Rational::parse("-4/2").str() == "-2");
  CHECK(Rational::parse("0/5").str() == "0");
  CHECK(Rational::parse("0").den() == 1);
  CHECK(Rational::parse("17").str() == "17");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK(Rational::parse("-7/3") < Rational(0));
}

TEST_CASE("rank examples") {
  CHECK(rank(identity_matrix(3)) == 3);
  CHECK(rank(RatMatrix(4, 7)) == 0);
  CHECK(rank(mat({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(identity_matrix(2)).empty());
  auto k1 = kernel_basis(mat({{1, 1}}));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0] == vec({-1, 1}));
  auto k2 = kernel_basis(mat({{1, 2}, {2, 4}}));
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == vec({-2, 1}));
}

TEST_CASE("solve examples") {
  auto x = solve(RatMatrix::from_dense(identity_matrix(2)), vec({3, 5}));
  REQUIRE(x);
  CHECK(*x == vec({3, 5}));
  auto y = solve(RatMatrix::from_dense(mat({{1, 1}})), vec({0}));
  REQUIRE(y);
  CHECK(*y == vec({0, 0}));
  CHECK_FALSE(solve(RatMatrix::from_dense(mat({{1}, {1}})), vec({1, 2})));
}

TEST_CASE("solve returns the reduced-echelon particular solution") {
  // x + 2y + z = 4, y + z = 1 -> pivots x,y; free z = 0 -> y = 1, x = 2
  auto x = solve(RatMatrix::from_dense(mat({{1, 2, 1}, {0, 1, 1}})), vec({4, 1}));
  REQUIRE(x);
  CHECK(*x == vec({2, 1, 0}));
}

TEST_CASE("inverse") {
  Matrix m = mat({{2, 1}, {1, 1}});
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(Matrix(m * *inv) == identity_matrix(2));
  CHECK_FALSE(inverse(mat({{1, 2}, {2, 4}})));
}

TEST_CASE("random sparse matrices: rank-nullity, transpose, kernel") {
  std::mt19937 rng(20261016u);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
    RatMatrix m = random_sparse(rng, rows, cols);
    const auto r = rank(m);
    CHECK(r == rank(m.transpose()));
    const auto ker = kernel_basis(m);
    CHECK(r + ker.size() == cols);
    for (const auto& v : ker) {
      const Vector mv = m * v;
      CHECK(is_zero(Matrix(mv)));
    }
    // row space basis and the dense route agree
    CHECK(row_space_basis(m).size() == r);
    CHECK(rank(m.to_dense()) == r);
  }
}

TEST_CASE("determinism: repeated runs give identical kernels") {
  std::mt19937 rng(7u);
  RatMatrix m = random_sparse(rng, 6, 10);
  const auto a = kernel_basis(m);
  const auto b = kernel_basis(m);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("solve agrees with the product on random consistent systems") {
  std::mt19937 rng(99u);
  for (int trial = 0; trial < 20; ++trial) {
    RatMatrix m = random_sparse(rng, 5, 7);
    Vector x0(7);
    for (int i = 0; i < 7; ++i) x0(i) = static_cast<int>(rng() % 5) - 2;
    const Vector b = m * x0;
    auto x = solve(m, b);
    REQUIRE(x);
    CHECK(Vector(m * *x) == b);
  }
}

TEST_CASE("subspace quotient") {
  std::vector<Vector> w = {vec({1, 1, 0}), vec({0, 0, 1})};
  SubspaceQuotient q(3, w);
  CHECK(q.sub_dim() == 2);
  CHECK(q.quotient_dim() == 1);
  CHECK(q.contains(vec({2, 2, 5})));
  CHECK_FALSE(q.contains(vec({1, 0, 0})));
  // project kills the subspace and lift is a section
  CHECK(is_zero(Matrix(q.project(vec({3, 3, -1})))));
  const Vector p = q.project(vec({1, 0, 0}));
  CHECK(q.project(q.lift(p)) == p);
}

TEST_CASE("sparse product and set") {
  RatMatrix a(2, 2);
  a.set(0, 1, Rational(1));
  CHECK((a * a).is_zero());
  a.set(0, 1, Rational(0));
  CHECK(a.nonzeros() == 0);
}
