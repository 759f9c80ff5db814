#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "ttba/catalog.hpp"
#include "ttba/errors.hpp"
#include "ttba/hochschild.hpp"

#include <cstdlib>

using namespace ttba;
using namespace ttba::testing;

namespace {

// H^0 by the commutant: {m : e_i.m = m.e_i}
std::size_t invariants_oracle(const Bimodule& m) {
  Matrix stacked(static_cast<Eigen::Index>(m.dim() * m.left_algebra().dim()), static_cast<Eigen::Index>(m.dim()));
  for (std::size_t i = 0; i < m.left_algebra().dim(); ++i)
    stacked.middleRows(static_cast<Eigen::Index>(i * m.dim()), static_cast<Eigen::Index>(m.dim())) =
        m.left_matrix(i) - m.right_matrix(i);
  return m.dim() - rank(stacked);
}

// H^1 = dim Der(A, M) - dim Inn(A, M), with derivations solved directly from
// D(e_i e_j) = e_i.D(e_j) + D(e_i).e_j
std::size_t derivation_oracle(const Bimodule& m) {
  const FDAlgebra& a = m.left_algebra();
  const std::size_t d = a.dim(), n = m.dim();
  Matrix sys = Matrix::Zero(static_cast<Eigen::Index>(d * d * n), static_cast<Eigen::Index>(d * n));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto r0 = static_cast<Eigen::Index>((i * d + j) * n);
      for (const auto& e : a.product(i, j))
        sys.block(r0, static_cast<Eigen::Index>(e.col * n), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) +=
            identity_matrix(n) * e.value;
      sys.block(r0, static_cast<Eigen::Index>(j * n), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) -=
          m.left_matrix(i);
      sys.block(r0, static_cast<Eigen::Index>(i * n), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) -=
          m.right_matrix(j);
    }
  const std::size_t der = d * n - rank(sys);
  const std::size_t inner = n - invariants_oracle(m);
  return der - inner;
}

std::vector<std::size_t> rotate(std::size_t n, std::size_t by) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = (i + by) % n;
  return p;
}

}  // namespace

TEST_CASE("hochschild_dim: small cases") {
  const AlgebraPtr m2 = matrix_algebra(2);
  CHECK(hochschild_dim(m2, regular_bimodule(m2), 0) == 1);
  CHECK(hochschild_dim(m2, regular_bimodule(m2), 1) == 0);
  CHECK(hochschild_dim(m2, dual_bimodule(regular_bimodule(m2)), 1) == 0);
  const AlgebraPtr q = matrix_algebra(1);
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(hochschild_dim(q, regular_bimodule(q), n) == 0);
    CHECK(hochschild_dim(q, free_bimodule(q), n) == 0);
  }
}

TEST_CASE("H^0 and H^1 agree with direct solves") {
  std::vector<Bimodule> cases;
  for (const auto& t : {scalar_triangular(), matrix_block_triangular(), c3_inversion_triangular()}) {
    cases.push_back(regular_bimodule(t.carrier));
    cases.push_back(dual_bimodule(regular_bimodule(t.carrier)));
    cases.push_back(ideal_bimodule(t));
    cases.push_back(dual_bimodule(ideal_bimodule(t)));
    cases.push_back(semisimple_test_bimodule(t.carrier));
  }
  for (const auto& m : cases) {
    const AlgebraPtr a = m.left_algebra_ptr();
    CHECK(hochschild_dim(a, m, 0) == invariants_oracle(m));
    CHECK(hochschild_dim(a, m, 1) == derivation_oracle(m));
  }
  for (const auto& a : {matrix_algebra(2), group_algebra(symmetric_group(3)), scalar_triangular().carrier})
    CHECK(hochschild_dim(a, regular_bimodule(a), 0) == center_basis(*a).size());
}

TEST_CASE("delta squares to zero") {
  std::vector<std::pair<AlgebraPtr, Bimodule>> cases;
  for (const auto& t : {scalar_triangular(), matrix_block_triangular(), c3_inversion_triangular()}) {
    cases.emplace_back(t.carrier, dual_bimodule(ideal_bimodule(t)));
    cases.emplace_back(t.a, regular_bimodule(t.a));
  }
  const TriAlgebra s = scalar_triangular();
  cases.emplace_back(s.carrier, semisimple_test_bimodule(s.carrier));
  for (const auto& [a, m] : cases) {
    CochainComplex c(a, m);
    const std::size_t top = a->dim() <= 3 ? 3 : 2;
    for (std::size_t n = 0; n + 1 <= top; ++n) {
      if (c.differential_entries(n + 1) > 2'000'000) break;
      CHECK((c.differential(n + 1) * c.differential(n)).is_zero());
    }
  }
}

TEST_CASE("dimensions are invariant under basis permutation") {
  const TriAlgebra t = scalar_triangular();
  const auto perm = rotate(3, 1);
  const AlgebraPtr pa = std::make_shared<const FDAlgebra>(permute_basis(*t.carrier, perm));
  for (const auto& m : {regular_bimodule(t.carrier), dual_bimodule(ideal_bimodule(t)), semisimple_test_bimodule(t.carrier)}) {
    const Bimodule pm = permute_bimodule(m, pa, perm, pa, perm, rotate(m.dim(), 1));
    for (std::size_t n = 0; n <= 2; ++n) CHECK(hochschild_dim(pa, pm, n) == hochschild_dim(t.carrier, m, n));
  }
}

TEST_CASE("bidimension") {
  CHECK(bidimension(matrix_algebra(1), 2).str() == "0");
  CHECK(bidimension(function_algebra(2), 2).str() == "0");
  const Bidimension m2 = bidimension(matrix_algebra(2), 2);
  CHECK(m2.str() == "0");
  CHECK(m2.monotone);
  CHECK(m2.unchecked.empty());
  CHECK(bidimension(group_algebra(cyclic_group(3)), 1).str() == "0");
  CHECK(bidimension(group_algebra(symmetric_group(3)), 0).str() == "0");
  CHECK(bidimension(function_algebra(3), 2).str() == "0");

  const Bidimension t = bidimension(scalar_triangular().carrier, 2);
  CHECK(t.str() == "1");
  REQUIRE(t.table.size() == 3);
  CHECK(t.table[0].dim != 0);
  CHECK(t.table[1].dim == 0);
  CHECK(t.table[2].dim == 0);
  CHECK(t.monotone);
  CHECK(bidimension(scalar_triangular().carrier, 0).str() == ">0");
}

TEST_CASE("budget") {
  const AlgebraPtr a = scalar_triangular().carrier;
  CochainComplex c(a, regular_bimodule(a), Budget{100});
  CHECK(c.differential_entries(1) == 27 * 9);
  try {
    c.differential(1);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.required() == 243);
    CHECK(e.limit() == 100);
    CHECK(std::string(e.what()).find("27 x 9") != std::string::npos);
  }
  CHECK(Budget::resolve(std::uint64_t{5}).max_entries == 5);
  ::setenv("TTBA_BUDGET", "1234", 1);
  CHECK(Budget::resolve(std::nullopt).max_entries == 1234);
  CHECK(Budget::resolve(std::uint64_t{7}).max_entries == 7);
  ::setenv("TTBA_BUDGET", "12x", 1);
  CHECK_THROWS_AS(Budget::from_env(), ParseError);
  ::unsetenv("TTBA_BUDGET");
  CHECK(Budget::resolve(std::nullopt).max_entries == Budget::default_entries);
  CHECK_THROWS_AS(CochainComplex(a, regular_bimodule(matrix_algebra(2))), std::invalid_argument);
}

TEST_CASE("cd_formula_check") {
  const CdReport s = cd_formula_check(scalar_triangular(), 2);
  CHECK(s.verdict == "PASS");
  CHECK(s.formula == std::size_t{1});
  CHECK(s.upper_bound_ok == true);
  CHECK(s.lower_bound_ok == true);
  CHECK(s.acyclicity.size() == 2);
  CHECK(s.budget_errors.empty());

  const CdReport z = cd_formula_check(zero_offdiagonal_triangular(), 2);
  CHECK(z.verdict == "PASS");
  CHECK(z.formula == std::size_t{0});
  CHECK(z.cd_t->str() == "0");
  CHECK(z.acyclicity.empty());

  const CdReport m = cd_formula_check(matrix_block_triangular(), 2);
  CHECK(m.verdict == "UNDETERMINED");
  CHECK_FALSE(m.budget_errors.empty());
  CHECK(m.formula == std::size_t{1});
}

TEST_CASE("cd_formula_check under an extended budget") {
  const CdReport m = cd_formula_check(matrix_block_triangular(), 1, Budget{100'000'000});
  CHECK(m.verdict == "PASS");
  CHECK(m.cd_t->str() == "1");
}

TEST_CASE("weak_amenability_probe") {
  const TriAlgebra t = scalar_triangular();
  const WaProbe p = weak_amenability_probe(t);
  CHECK(p.h1_t_tstar == derivation_oracle(dual_bimodule(regular_bimodule(t.carrier))));
  CHECK(p.h1_t_istar == derivation_oracle(dual_bimodule(ideal_bimodule(t))));
  CHECK(p.diagonals_amenable == true);
  CHECK_FALSE(p.statement.empty());
  const WaProbe again = weak_amenability_probe(t);
  CHECK(again.h1_t_tstar == p.h1_t_tstar);
  CHECK(again.statement == p.statement);

  const WaProbe z = weak_amenability_probe(zero_offdiagonal_triangular());
  const AlgebraPtr qq = function_algebra(2);
  CHECK(z.h1_t_tstar == hochschild_dim(qq, dual_bimodule(regular_bimodule(qq)), 1));
  CHECK(z.statement.find("X = 0") != std::string::npos);
}

TEST_CASE("wa_sufficient_check") {
  const TriAlgebra s = scalar_triangular();
  const WaSufficient w = wa_sufficient_check(s.a, s.b, s.x, s.twist);
  CHECK(w.h1_a_astar == 0);
  CHECK(w.h1_b_bstar == 0);
  CHECK(w.h1_a_xstar == 0);
  CHECK(w.h1_b_xstar == 0);
  CHECK(w.met);
  REQUIRE(w.h1_t_tstar);

  const TriAlgebra m = matrix_block_triangular();
  const WaSufficient wm = wa_sufficient_check(m.a, m.b, m.x, m.twist);
  CHECK(wm.h1_a_astar == 0);
  CHECK(wm.h1_b_bstar == 0);
  const Bimodule xstar = twisted_dual(m.x, m.twist.sigma_a, m.twist.sigma_b);
  CHECK(wm.h1_a_xstar == derivation_oracle(right_action_only(xstar)));
  CHECK(wm.h1_b_xstar == derivation_oracle(left_action_only(xstar)));

  auto left = s.x.left_constants();
  left.front().value = 2;
  const Bimodule broken(s.a, s.b, s.x.basis_labels(), left, s.x.right_constants());
  CHECK_THROWS_AS(wa_sufficient_check(s.a, s.b, broken, s.twist), ValidationError);
}
