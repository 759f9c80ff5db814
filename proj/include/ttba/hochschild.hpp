#pragma once

#include "ttba/triangular.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ttba {

/// Cap on rows x cols of any single differential. Flag beats TTBA_BUDGET
/// beats the default.
struct Budget {
  static constexpr std::uint64_t default_entries = 10'000'000;
  std::uint64_t max_entries = default_entries;

  static Budget from_env();
  static Budget resolve(std::optional<std::uint64_t> flag);
};

/// Bar complex C^n = Hom(A^{(x)n}, M); cochain coordinates are indexed by
/// flatten(i_1..i_n) * dim M + q with i_1 most significant.
class CochainComplex {
public:
  CochainComplex(AlgebraPtr a, Bimodule m, Budget budget = {});

  const FDAlgebra& algebra() const { return *a_; }
  const Bimodule& module() const { return m_; }
  std::uint64_t cochain_dim(std::size_t n) const;
  /// rows x cols of delta^n.
  std::uint64_t differential_entries(std::size_t n) const;

  /// delta^n : C^n -> C^{n+1}. Throws BudgetExceeded.
  RatMatrix differential(std::size_t n) const;
  std::size_t differential_rank(std::size_t n);
  std::size_t cohomology_dim(std::size_t n);

private:
  AlgebraPtr a_;
  Bimodule m_;
  Budget budget_;
  std::map<std::size_t, std::size_t> ranks_;
};

std::size_t hochschild_dim(const AlgebraPtr& a, const Bimodule& m, std::size_t n, Budget budget = {});

struct DegreeDim {
  std::size_t degree;
  std::size_t dim;
};

struct Bidimension {
  std::optional<std::size_t> value;       // absent means > max_degree
  std::size_t max_degree = 0;
  std::vector<DegreeDim> table;           // H^m(A, E) as computed
  std::vector<std::size_t> unchecked;     // cross-check degrees skipped for budget
  bool monotone = true;                   // no nonzero H^m above the first zero
  std::string str() const;
};

/// Least n <= N with H^{n+1}(A, E) = 0, E = semisimple_test_bimodule(A).
Bidimension bidimension(const AlgebraPtr& a, std::size_t max_degree, Budget budget = {});

struct CdReport {
  std::optional<Bidimension> cd_a;
  std::optional<Bidimension> cd_b;
  std::optional<Bidimension> cd_t;
  bool x_nonzero = false;
  std::optional<std::size_t> formula;      // max{cd A, cd B, 1_{X != 0}}
  std::string verdict;                     // PASS, FAIL or UNDETERMINED
  std::optional<bool> upper_bound_ok;
  std::optional<bool> lower_bound_ok;
  std::vector<DegreeDim> acyclicity;       // H^m(Q, X*) for m = 1..N
  std::vector<std::string> budget_errors;  // non-empty means a partial report
};

CdReport cd_formula_check(const TriAlgebra& t, std::size_t max_degree, Budget budget = {});

struct WaProbe {
  std::size_t h1_t_tstar = 0;
  std::size_t h1_t_istar = 0;
  bool x_nonzero = false;
  std::optional<bool> diagonals_amenable;  // cd A = cd B = 0
  std::string statement;                   // agreement with the X = 0 criterion, stated not asserted
};

WaProbe weak_amenability_probe(const TriAlgebra& t, Budget budget = {});

struct WaSufficient {
  std::size_t h1_a_astar = 0;
  std::size_t h1_b_bstar = 0;
  std::size_t h1_a_xstar = 0;
  std::size_t h1_b_xstar = 0;
  bool met = false;
  std::optional<std::size_t> h1_t_tstar;  // only when met
  std::string verdict;
};

/// Throws ValidationError when X fails check_bimodule.
WaSufficient wa_sufficient_check(const AlgebraPtr& a, const AlgebraPtr& b, const Bimodule& x, const Twist& sigma,
                                 Budget budget = {});

}  // namespace ttba
