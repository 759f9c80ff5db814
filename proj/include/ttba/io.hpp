#pragma once

#include "ttba/isoclass.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace ttba {

using Json = nlohmann::ordered_json;

inline constexpr const char* format_version = "1";

/// Throws ParseError on unreadable files or invalid JSON.
Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& doc);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& doc);

/// Checks format_version and returns "kind"; throws ParseError.
std::string kind_of(const Json& doc);
Json envelope(const std::string& kind);

Rational rational_from_json(const Json& j);
Json to_json(const Rational& r);
Vector vector_from_json(const Json& j, std::optional<std::size_t> size = std::nullopt);
Json to_json(const Vector& v);
/// Row-major array of rows.
Matrix matrix_from_json(const Json& j, std::optional<std::size_t> rows = std::nullopt,
                        std::optional<std::size_t> cols = std::nullopt);
Json to_json(const Matrix& m);

/// A component given inline or as a path relative to `base`; the returned
/// base is the directory nested references resolve against.
struct Resolved {
  Json doc;
  std::filesystem::path base;
};
Resolved resolve_ref(const Json& node, const std::filesystem::path& base);

FDAlgebra algebra_from_json(const Json& doc);
Json algebra_to_json(const FDAlgebra& a, const std::string& name = "");

/// Missing left/right algebra keys fall back to the given defaults.
Bimodule bimodule_from_json(const Json& doc, const std::filesystem::path& base, AlgebraPtr left_default = nullptr,
                            AlgebraPtr right_default = nullptr);
Json bimodule_to_json(const Bimodule& m, bool embed_algebras = true);

/// Components of a triangular file before validation.
struct TriangularSpec {
  AlgebraPtr a;
  AlgebraPtr b;
  Bimodule x;
  Matrix sigma_a;
  Matrix sigma_b;
};
TriangularSpec triangular_spec_from_json(const Json& doc, const std::filesystem::path& base);
/// Builds and validates; singular or non-automorphic twists raise ValidationError.
TriAlgebra build_from_spec(const TriangularSpec& s);
TriAlgebra triangular_from_json(const Json& doc, const std::filesystem::path& base);
Json triangular_to_json(const TriAlgebra& t, const std::string& name = "");

struct TwistPair {
  GroupAutomorphism gamma_a;
  GroupAutomorphism gamma_b;
  GroupAutomorphism gamma_a_prime;
  GroupAutomorphism gamma_b_prime;
  friend bool operator==(const TwistPair&, const TwistPair&) = default;
};

/// Cayley table and labels only; group_from_cayley performs validation.
struct GroupSpec {
  std::vector<std::vector<std::size_t>> cayley;
  std::vector<std::string> labels;
  std::optional<TwistPair> twists;
};
GroupSpec group_spec_from_json(const Json& doc);
Json group_to_json(const FiniteGroup& g, const std::optional<TwistPair>& twists = std::nullopt,
                   const std::string& name = "");

AnchoredFunctionSystem anchored_from_json(const Json& doc);
Json anchored_to_json(const AnchoredFunctionSystem& s, const std::string& name = "");

Shear shear_from_json(const Json& doc);
Json shear_to_json(const Shear& s);

struct IsoFile {
  TriAlgebra sigma;
  TriAlgebra tau;
  IsoData data;
};
IsoFile iso_from_json(const Json& doc, const std::filesystem::path& base);
/// sigma and tau are embedded inline unless references are given.
Json iso_to_json(const IsoData& d, const Json& sigma_ref, const Json& tau_ref);

/// Triangular algebra from a triangular or anchored-system document.
TriAlgebra load_triangular(const std::filesystem::path& path);

}  // namespace ttba
