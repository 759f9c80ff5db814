#include "ttba/io.hpp"

#include "ttba/catalog.hpp"
#include "ttba/errors.hpp"

#include <fstream>
#include <sstream>

namespace ttba {

namespace fs = std::filesystem;

namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  return doc.at(key);
}

std::size_t index_from_json(const Json& j, const std::string& what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw ParseError(what + ": expected a nonnegative integer index");
  return j.get<std::size_t>();
}

std::size_t bounded_index(const Json& j, std::size_t bound, const std::string& what) {
  const std::size_t v = index_from_json(j, what);
  if (v >= bound) throw ParseError(what + ": index " + std::to_string(v) + " out of range");
  return v;
}

std::vector<std::size_t> index_array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": expected an array of indices");
  std::vector<std::size_t> out;
  for (const auto& e : j) out.push_back(index_from_json(e, what));
  return out;
}

std::vector<std::string> label_array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError(what + ": expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

void expect_kind(const Json& doc, const std::string& kind) {
  const std::string k = kind_of(doc);
  if (k != kind) throw ParseError("expected kind \"" + kind + "\", got \"" + k + "\"");
}

Json named(const std::string& kind, const std::string& name) {
  Json j = envelope(kind);
  if (!name.empty()) j["name"] = name;
  return j;
}

std::vector<ActionConstant> actions_from_json(const Json& j, std::size_t alg_dim, std::size_t dim,
                                              const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": expected an array of [alg, from, to, value]");
  std::vector<ActionConstant> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4) throw ParseError(what + ": entries must be [alg, from, to, value]");
    out.push_back({bounded_index(e[0], alg_dim, what), bounded_index(e[1], dim, what), bounded_index(e[2], dim, what),
                   rational_from_json(e[3])});
  }
  return out;
}

Json actions_to_json(const std::vector<ActionConstant>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(Json::array({c.alg, c.from, c.to, c.value.str()}));
  return out;
}

Automorphism automorphism_from_matrix(const Matrix& m, const std::string& name) {
  const auto inv = inverse(m);
  if (!inv) throw ValidationError(name + ": matrix is singular");
  return {m, *inv};
}

AlgebraPtr algebra_ref(const Json& node, const fs::path& base) {
  const Resolved r = resolve_ref(node, base);
  return std::make_shared<const FDAlgebra>(algebra_from_json(r.doc));
}

}  // namespace

Json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": invalid JSON: " + e.what());
  }
}

void write_json(const fs::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << dump(doc);
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string kind_of(const Json& doc) {
  const Json& v = require(doc, "format_version");
  if (!v.is_string() || v.get<std::string>() != format_version)
    throw ParseError(std::string("unsupported format_version; expected \"") + format_version + "\"");
  const Json& k = require(doc, "kind");
  if (!k.is_string()) throw ParseError("\"kind\" must be a string");
  return k.get<std::string>();
}

Json envelope(const std::string& kind) {
  Json j;
  j["format_version"] = format_version;
  j["kind"] = kind;
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("expected a rational as text, e.g. \"-3/4\"");
}

Json to_json(const Rational& r) { return r.str(); }

Vector vector_from_json(const Json& j, std::optional<std::size_t> size) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  if (size && j.size() != *size)
    throw ParseError("vector has length " + std::to_string(j.size()) + ", expected " + std::to_string(*size));
  Vector v(ix(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(ix(i)) = rational_from_json(j[i]);
  return v;
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

Matrix matrix_from_json(const Json& j, std::optional<std::size_t> rows, std::optional<std::size_t> cols) {
  if (!j.is_array()) throw ParseError("expected a matrix as an array of rows");
  const std::size_t r = j.size();
  if (rows && r != *rows)
    throw ParseError("matrix has " + std::to_string(r) + " rows, expected " + std::to_string(*rows));
  std::size_t c = r == 0 ? cols.value_or(0) : (j[0].is_array() ? j[0].size() : 0);
  if (cols && r != 0 && c != *cols)
    throw ParseError("matrix has " + std::to_string(c) + " columns, expected " + std::to_string(*cols));
  Matrix m(ix(r), ix(c));
  for (std::size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != c) throw ParseError("matrix rows must be arrays of equal length");
    for (std::size_t k = 0; k < c; ++k) m(ix(i), ix(k)) = rational_from_json(j[i][k]);
  }
  return m;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
    out.push_back(row);
  }
  return out;
}

Resolved resolve_ref(const Json& node, const fs::path& base) {
  if (node.is_string()) {
    const fs::path p = base / node.get<std::string>();
    return {read_json(p), p.parent_path()};
  }
  if (node.is_object()) return {node, base};
  throw ParseError("component must be an inline object or a relative path");
}

FDAlgebra algebra_from_json(const Json& doc) {
  expect_kind(doc, "algebra");
  auto labels = label_array(require(doc, "basis"), "basis");
  const std::size_t n = labels.size();
  const Json& s = require(doc, "structure");
  if (!s.is_array()) throw ParseError("structure: expected an array of [i, j, k, value]");
  std::vector<StructureConstant> sc;
  for (const auto& e : s) {
    if (!e.is_array() || e.size() != 4) throw ParseError("structure: entries must be [i, j, k, value]");
    sc.push_back({bounded_index(e[0], n, "structure"), bounded_index(e[1], n, "structure"),
                  bounded_index(e[2], n, "structure"), rational_from_json(e[3])});
  }
  return FDAlgebra(std::move(labels), sc, vector_from_json(require(doc, "unit"), n));
}

Json algebra_to_json(const FDAlgebra& a, const std::string& name) {
  Json j = named("algebra", name);
  j["basis"] = a.basis_labels();
  Json s = Json::array();
  for (const auto& c : a.structure()) s.push_back(Json::array({c.i, c.j, c.k, c.value.str()}));
  j["structure"] = s;
  j["unit"] = to_json(a.unit());
  return j;
}

Bimodule bimodule_from_json(const Json& doc, const fs::path& base, AlgebraPtr left_default, AlgebraPtr right_default) {
  expect_kind(doc, "bimodule");
  AlgebraPtr left = doc.contains("left_algebra") ? algebra_ref(doc["left_algebra"], base) : left_default;
  AlgebraPtr right = doc.contains("right_algebra") ? algebra_ref(doc["right_algebra"], base) : right_default;
  if (!left || !right) throw ParseError("bimodule: missing \"left_algebra\" or \"right_algebra\"");
  auto labels = label_array(require(doc, "basis"), "basis");
  const std::size_t n = labels.size();
  const auto l = actions_from_json(require(doc, "left"), left->dim(), n, "left");
  const auto r = actions_from_json(require(doc, "right"), right->dim(), n, "right");
  return Bimodule(left, right, std::move(labels), l, r);
}

Json bimodule_to_json(const Bimodule& m, bool embed_algebras) {
  Json j = envelope("bimodule");
  if (embed_algebras) {
    j["left_algebra"] = algebra_to_json(m.left_algebra());
    j["right_algebra"] = algebra_to_json(m.right_algebra());
  }
  j["basis"] = m.basis_labels();
  j["left"] = actions_to_json(m.left_constants());
  j["right"] = actions_to_json(m.right_constants());
  return j;
}

TriangularSpec triangular_spec_from_json(const Json& doc, const fs::path& base) {
  expect_kind(doc, "triangular");
  TriangularSpec s;
  s.a = algebra_ref(require(doc, "A"), base);
  s.b = algebra_ref(require(doc, "B"), base);
  const Resolved xr = resolve_ref(require(doc, "X"), base);
  s.x = bimodule_from_json(xr.doc, xr.base, s.a, s.b);
  s.sigma_a = matrix_from_json(require(doc, "sigma_A"), s.a->dim(), s.a->dim());
  s.sigma_b = matrix_from_json(require(doc, "sigma_B"), s.b->dim(), s.b->dim());
  return s;
}

TriAlgebra build_from_spec(const TriangularSpec& s) {
  const Twist sigma{automorphism_from_matrix(s.sigma_a, "sigma_A"), automorphism_from_matrix(s.sigma_b, "sigma_B")};
  return build_triangular(s.a, s.b, s.x, sigma);
}

TriAlgebra triangular_from_json(const Json& doc, const fs::path& base) {
  return build_from_spec(triangular_spec_from_json(doc, base));
}

Json triangular_to_json(const TriAlgebra& t, const std::string& name) {
  Json j = named("triangular", name);
  j["A"] = algebra_to_json(*t.a);
  j["B"] = algebra_to_json(*t.b);
  j["X"] = bimodule_to_json(t.x, false);
  j["sigma_A"] = to_json(t.twist.sigma_a.matrix);
  j["sigma_B"] = to_json(t.twist.sigma_b.matrix);
  return j;
}

GroupSpec group_spec_from_json(const Json& doc) {
  expect_kind(doc, "group");
  GroupSpec g;
  const Json& table = require(doc, "cayley");
  if (!table.is_array()) throw ParseError("cayley: expected a square array of indices");
  for (const auto& row : table) g.cayley.push_back(index_array(row, "cayley"));
  if (doc.contains("labels")) g.labels = label_array(doc["labels"], "labels");
  if (doc.contains("twist_pair")) {
    const Json& t = doc["twist_pair"];
    g.twists = TwistPair{index_array(require(t, "gamma_A"), "gamma_A"), index_array(require(t, "gamma_B"), "gamma_B"),
                         index_array(require(t, "gamma_A_prime"), "gamma_A_prime"),
                         index_array(require(t, "gamma_B_prime"), "gamma_B_prime")};
  }
  return g;
}

Json group_to_json(const FiniteGroup& g, const std::optional<TwistPair>& twists, const std::string& name) {
  Json j = named("group", name);
  j["labels"] = g.labels();
  j["cayley"] = g.cayley();
  if (twists) {
    Json t;
    t["gamma_A"] = twists->gamma_a;
    t["gamma_B"] = twists->gamma_b;
    t["gamma_A_prime"] = twists->gamma_a_prime;
    t["gamma_B_prime"] = twists->gamma_b_prime;
    j["twist_pair"] = t;
  }
  return j;
}

AnchoredFunctionSystem anchored_from_json(const Json& doc) {
  expect_kind(doc, "anchored-system");
  AnchoredFunctionSystem s;
  s.k = index_from_json(require(doc, "K"), "K");
  s.l = index_from_json(require(doc, "L"), "L");
  s.omega = index_from_json(require(doc, "Omega"), "Omega");
  s.p = index_array(require(doc, "p"), "p");
  s.q = index_array(require(doc, "q"), "q");
  s.phi = index_array(require(doc, "phi"), "phi");
  s.psi = index_array(require(doc, "psi"), "psi");
  return s;
}

Json anchored_to_json(const AnchoredFunctionSystem& s, const std::string& name) {
  Json j = named("anchored-system", name);
  j["K"] = s.k;
  j["L"] = s.l;
  j["Omega"] = s.omega;
  j["p"] = s.p;
  j["q"] = s.q;
  j["phi"] = s.phi;
  j["psi"] = s.psi;
  return j;
}

Shear shear_from_json(const Json& doc) {
  expect_kind(doc, "shear");
  Shear s{matrix_from_json(require(doc, "f")), matrix_from_json(require(doc, "g"))};
  if (s.f.rows() != s.g.rows()) throw ParseError("shear: f and g must have the same number of rows (dim X)");
  return s;
}

Json shear_to_json(const Shear& s) {
  Json j = envelope("shear");
  j["f"] = to_json(s.f);
  j["g"] = to_json(s.g);
  return j;
}

IsoFile iso_from_json(const Json& doc, const fs::path& base) {
  expect_kind(doc, "iso-data");
  const Resolved sr = resolve_ref(require(doc, "sigma"), base);
  const Resolved tr = resolve_ref(require(doc, "tau"), base);
  TriAlgebra sigma = triangular_from_json(sr.doc, sr.base);
  TriAlgebra tau = triangular_from_json(tr.doc, tr.base);
  const std::size_t da = sigma.a->dim(), db = sigma.b->dim(), dx = sigma.x.dim(), dx2 = tau.x.dim();
  const Matrix alpha = matrix_from_json(require(doc, "alpha"), da, da);
  const Matrix beta = matrix_from_json(require(doc, "beta"), db, db);
  const Matrix u = matrix_from_json(require(doc, "u"), dx2, dx);
  const Json& th = require(doc, "theta");
  Shear theta{matrix_from_json(require(th, "f"), dx2, da), matrix_from_json(require(th, "g"), dx2, db)};
  IsoData d{automorphism_from_matrix(alpha, "alpha"), automorphism_from_matrix(beta, "beta"), u, theta};
  return {std::move(sigma), std::move(tau), std::move(d)};
}

Json iso_to_json(const IsoData& d, const Json& sigma_ref, const Json& tau_ref) {
  Json j = envelope("iso-data");
  j["sigma"] = sigma_ref;
  j["tau"] = tau_ref;
  j["alpha"] = to_json(d.alpha.matrix);
  j["beta"] = to_json(d.beta.matrix);
  j["u"] = to_json(d.u);
  Json th;
  th["f"] = to_json(d.theta.f);
  th["g"] = to_json(d.theta.g);
  j["theta"] = th;
  return j;
}

TriAlgebra load_triangular(const fs::path& path) {
  const Json doc = read_json(path);
  const std::string kind = kind_of(doc);
  if (kind == "triangular") return triangular_from_json(doc, path.parent_path());
  if (kind == "anchored-system") {
    const AnchoredFunctionSystem s = anchored_from_json(doc);
    validate(s);
    return anchored_triangular(s);
  }
  throw ParseError("expected a triangular or anchored-system file, got kind \"" + kind + "\"");
}

}  // namespace ttba
