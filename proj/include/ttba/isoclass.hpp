#pragma once

#include "ttba/builders.hpp"
#include "ttba/shear.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ttba {

/// Candidate isomorphism data T_sigma(A,B;X) -> T_tau(A,B;X'):
/// Phi(a, x, b) = (alpha(a), u(x) + theta(a, b), beta(b)).
struct IsoData {
  Automorphism alpha;
  Automorphism beta;
  Matrix u;      // dim X' x dim X
  Shear theta;   // values in X'
};

IsoData identity_iso_data(const TriAlgebra& t);

struct CheckItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct IsoVerdict {
  std::vector<CheckItem> items;  // conjugacy A, conjugacy B, u invertible, equivariance, tau-cocycle
  bool passed() const;
  const CheckItem* first_failure() const;
};

IsoVerdict verify_iso_data(const TriAlgebra& source, const TriAlgebra& target, const IsoData& d);

struct PhiPair {
  Matrix phi;
  Matrix psi;  // built from the inverse formula, not by inversion
  bool multiplicative = false;
  bool roundtrip = false;
};

/// Throws ValidationError (naming the first failed item) when the data does
/// not verify.
PhiPair build_phi(const TriAlgebra& source, const TriAlgebra& target, const IsoData& d);

enum class IdealStatus { pass, fail, not_applicable, rejected };

struct IdealVerdict {
  IdealStatus status = IdealStatus::fail;
  std::string detail;
};

std::string to_string(IdealStatus s);

/// Phi(I) = I' for an algebra isomorphism Phi between the carriers.
IdealVerdict characteristic_ideal_check(const Matrix& phi, const TriAlgebra& source, const TriAlgebra& target);

/// A = B = X = Q[G] with sigma = (sigma_gamma_a, sigma_gamma_b), tau likewise.
TriAlgebra group_triangular(const FiniteGroup& g, const GroupAutomorphism& gamma_a, const GroupAutomorphism& gamma_b);

struct GroupSearchResult {
  std::optional<IsoData> witness;
  GroupAutomorphism delta_a;
  GroupAutomorphism delta_b;
  std::size_t candidates_a = 0;  // delta with delta gamma_a delta^-1 = gamma'_a
  std::size_t candidates_b = 0;
  std::string note;
};

GroupSearchResult search_iso_group(const FiniteGroup& g, const GroupAutomorphism& gamma_a,
                                   const GroupAutomorphism& gamma_b, const GroupAutomorphism& gamma_a_prime,
                                   const GroupAutomorphism& gamma_b_prime);

/// Linear space of u with u(a.x) = alpha(a).u(x) and u(x.b) = u(x).beta(b),
/// as a basis of dim X' x dim X matrices.
std::vector<Matrix> equivariant_maps(const Bimodule& x, const Bimodule& x_prime, const Automorphism& alpha,
                                     const Automorphism& beta);

struct FunctionWitness {
  std::vector<std::size_t> h_k;
  std::vector<std::size_t> h_l;
  std::vector<std::size_t> h_omega;
};

struct FunctionSearchResult {
  std::optional<FunctionWitness> witness;
  std::size_t examined = 0;
  std::string note;
};

/// Exhaustive lexicographic search over (h_K, h_L, H). Throws BudgetExceeded
/// when |K|! |L|! |Omega|! exceeds bound.
FunctionSearchResult search_iso_function(const AnchoredFunctionSystem& sigma, const AnchoredFunctionSystem& tau,
                                         std::size_t bound = 10'000'000);

IsoData function_iso_data(const AnchoredFunctionSystem& sigma, const FunctionWitness& w);

struct TwistClass {
  GroupAutomorphism representative;
  std::vector<GroupAutomorphism> members;
};

/// Conjugacy classes of Aut(G), ordered by their first member in the
/// enumeration order; members keep that order.
std::vector<TwistClass> classify_twists(const FiniteGroup& g, std::size_t bound = 12);

}  // namespace ttba
