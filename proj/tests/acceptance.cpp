// Acceptance gate: one PASS/FAIL line per criterion.
#include "test_support.hpp"
#include "ttba/catalog.hpp"
#include "ttba/commands.hpp"
#include "ttba/errors.hpp"
#include "ttba/hochschild.hpp"
#include "ttba/isoclass.hpp"
#include "ttba/shear.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>

using namespace ttba;
using namespace ttba::testing;
namespace fs = std::filesystem;

namespace {

const fs::path data = TTBA_DATA_DIR;

struct Check {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& title, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0) c.require(secs < limit_s, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s));
  if (!c.ok) ++failures;
  std::cout << (c.ok ? "PASS" : "FAIL") << "  " << n << ". " << title << "  (" << std::fixed;
  std::cout.precision(2);
  std::cout << secs << " s)";
  if (!c.ok) std::cout << "  " << c.why;
  std::cout << std::endl;
}

std::vector<std::pair<std::string, TriAlgebra>> suite() {
  return {{"3-dim", scalar_triangular()},
          {"7-dim", matrix_block_triangular()},
          {"Q[C3]", c3_inversion_triangular()},
          {"anchored", anchored_triangular(anchored_examples()[0])}};
}

std::vector<std::pair<std::string, TriAlgebra>> bundled() {
  std::vector<std::pair<std::string, TriAlgebra>> out = suite();
  out.emplace_back("X=0", zero_offdiagonal_triangular());
  for (std::size_t i = 1; i < anchored_examples().size(); ++i)
    out.emplace_back("anchored " + std::to_string(i + 1), anchored_triangular(anchored_examples()[i]));
  return out;
}

std::vector<std::size_t> rotate(std::size_t n, std::size_t by) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = (i + by) % n;
  return p;
}

// dim of {z : zx = xz for all basis x}, straight from the structure constants
std::size_t center_dim_oracle(const FDAlgebra& a) {
  const std::size_t n = a.dim();
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(n * n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t k = 0; k < n; ++k)
        m(static_cast<Eigen::Index>(i * n + k), static_cast<Eigen::Index>(z)) = a.coefficient(z, i, k) - a.coefficient(i, z, k);
  return n - rank(m);
}

bool phi_is_isomorphism(const TriAlgebra& s, const TriAlgebra& t, const Matrix& phi, const Matrix& psi) {
  const std::size_t n = s.carrier->dim();
  const Matrix id = identity_matrix(n);
  if (!(psi * phi == id) || !(phi * psi == id)) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ei = unit_vector(n, i), ej = unit_vector(n, j);
      if (!(Vector(phi * multiply(*s.carrier, ei, ej)) == multiply(*t.carrier, phi * ei, phi * ej))) return false;
    }
  return true;
}

}  // namespace

int main() {
  criterion(1, "associativity and construction", 2.0, [](Check& c) {
    std::mt19937 rng(101);
    for (const auto& [name, t] : suite()) {
      c.require(check_algebra(*t.carrier).empty(), name + ": check_algebra");
      const std::size_t n = t.carrier->dim();
      for (int k = 0; k < 100; ++k) {
        const Vector s = random_vector(rng, n), r = random_vector(rng, n), w = random_vector(rng, n);
        const auto [a, x, b] = t.split(s);
        const auto [a2, x2, b2] = t.split(r);
        const auto [a3, x3, b3] = t.split(w);
        const Vector witness =
            t.x.left_action(t.twist.sigma_a.apply(a)) *
                (t.x.left_action(t.twist.sigma_a.apply(a2)) * x3 + t.x.right_action(t.twist.sigma_b.apply(b3)) * x2) +
            t.x.right_action(t.twist.sigma_b.apply(multiply(*t.b, b2, b3))) * x;
        const Vector left = multiply(*t.carrier, multiply(*t.carrier, s, r), w);
        const Vector right = multiply(*t.carrier, s, multiply(*t.carrier, r, w));
        c.require(left == right, name + ": associativity on a random triple");
        c.require(std::get<1>(t.split(left)) == witness, name + ": off-diagonal witness");
        c.require(std::get<1>(t.split(right)) == witness, name + ": off-diagonal witness (right bracketing)");
      }
    }
  });

  criterion(2, "Lambda_theta multiplicative iff cocycle", 2.0, [](Check& c) {
    std::mt19937 rng(202);
    for (const auto& [name, t] : bundled()) {
      const auto z = cocycle_space(t.x, t.twist);
      for (const auto& s : z) c.require(lambda_map(t, s).multiplicative, name + ": Z1 basis element not multiplicative");
      const std::size_t params = shear_param_count(t.x);
      if (z.size() == params) continue;  // every shear is a cocycle, e.g. X = 0
      int outside = 0;
      while (outside < 20) {
        const Shear s = shear_from_params(t.x, random_vector(rng, params));
        if (in_span(z, s)) continue;
        ++outside;
        c.require(!lambda_map(t, s).multiplicative, name + ": non-cocycle gave a multiplicative map");
      }
    }
  });

  criterion(3, "scalar shear cohomology", 0, [](Check& c) {
    const TriAlgebra t = scalar_triangular();
    const ShearCohomology h = shear_cohomology(t.x, t.twist);
    // oracle: theta(a,b) = f a + g b is a cocycle iff f + g = 0, a line; inner shears eta(a - b) span it
    const Matrix sys = cocycle_system(t.x, t.twist).to_dense();
    c.require(2 - rank(sys) == 1, "linear-solve oracle dim Z1 != 1");
    c.require(h.z1 == 1, "dim Z1 = " + std::to_string(h.z1));
    c.require(h.b1 == 1, "dim B1 = " + std::to_string(h.b1));
    c.require(h.quotient() == 0, "quotient != 0");
  });

  criterion(4, "finite function-algebra guideline", 0, [](Check& c) {
    int i = 0;
    for (const auto& sys : anchored_examples()) {
      ++i;
      c.require(sys.k <= 3 && sys.l <= 3 && sys.omega <= 4, "example " + std::to_string(i) + " too large");
      std::vector<bool> hit_k(sys.k), hit_l(sys.l);
      for (std::size_t w = 0; w < sys.omega; ++w) hit_k[sys.p[w]] = hit_l[sys.q[w]] = true;
      c.require(std::count(hit_k.begin(), hit_k.end(), false) == 0 && std::count(hit_l.begin(), hit_l.end(), false) == 0,
                "example " + std::to_string(i) + " anchors not surjective");
      const TriAlgebra t = anchored_triangular(sys);
      c.require(shear_quotient_dim(t.x, t.twist) == 0, "example " + std::to_string(i) + ": quotient != 0");
    }
  });

  criterion(5, "classification roundtrip", 0, [](Check& c) {
    struct Case {
      std::string name;
      TriAlgebra s, t;
      IsoData d;
    };
    std::vector<Case> cases;
    for (const auto& [name, t] : bundled()) {
      cases.push_back({name + " identity", t, t, identity_iso_data(t)});
      for (const auto& z : cocycle_space(t.x, t.twist)) {
        IsoData d = identity_iso_data(t);
        d.theta = z;
        cases.push_back({name + " shear", t, t, d});
      }
    }
    const FiniteGroup s3 = symmetric_group(3);
    const auto c12 = conjugation(s3, 2), c13 = conjugation(s3, 5);
    const auto found = search_iso_group(s3, c12, c12, c13, c13);
    c.require(found.witness.has_value(), "S3 witness missing");
    if (found.witness) cases.push_back({"S3 group", group_triangular(s3, c12, c12), group_triangular(s3, c13, c13), *found.witness});
    const AnchoredFunctionSystem a{3, 1, 3, {0, 1, 2}, {0, 0, 0}, {1, 0, 2}, {0}};
    const AnchoredFunctionSystem b{3, 1, 3, {0, 1, 2}, {0, 0, 0}, {0, 2, 1}, {0}};
    const auto fw = search_iso_function(a, b);
    c.require(fw.witness.has_value(), "function witness missing");
    if (fw.witness) cases.push_back({"function", anchored_triangular(a), anchored_triangular(b), function_iso_data(a, *fw.witness)});

    for (const auto& k : cases) {
      c.require(verify_iso_data(k.s, k.t, k.d).passed(), k.name + ": not accepted");
      const PhiPair p = build_phi(k.s, k.t, k.d);
      c.require(p.multiplicative && p.roundtrip, k.name + ": library Phi check");
      c.require(phi_is_isomorphism(k.s, k.t, p.phi, p.psi), k.name + ": Phi/Psi oracle");
      const IdealVerdict iv = characteristic_ideal_check(p.phi, k.s, k.t);
      c.require(iv.status == IdealStatus::pass || (iv.status == IdealStatus::not_applicable && k.s.blocks.x_dim == 0),
                k.name + ": characteristic ideal " + iv.detail);
    }
  });

  criterion(6, "transport for the conjugate Q[C3] pair", 0, [](Check& c) {
    const FiniteGroup g = cyclic_group(3);
    const GroupAutomorphism delta = inversion(g);
    const GroupAutomorphism tau_gamma = compose(delta, compose(inversion(g), invert(delta)));
    const TriAlgebra s = group_triangular(g, inversion(g), {0, 1, 2});
    const TriAlgebra t = group_triangular(g, tau_gamma, {0, 1, 2});
    const Automorphism d = sigma_gamma(g, delta);
    const auto zt = cocycle_space(t.x, t.twist), zs = cocycle_space(s.x, s.twist);
    c.require(zt.size() == zs.size(), "dim Z1 differs");
    std::vector<Vector> moved;
    for (const auto& th : zt) {
      const Shear m = transport(th, d, d, d.matrix);
      c.require(is_cocycle(s.x, s.twist, m), "image is not a sigma-cocycle");
      c.require(transport(m, d.inverted(), d.inverted(), d.inverse) == th, "inverse transport mismatch");
      moved.push_back(shear_params(m));
    }
    c.require(rank(rows_matrix(moved, shear_param_count(s.x))) == zs.size(), "transport loses rank");
  });

  criterion(7, "group-twist dynamics", 5.0, [](Check& c) {
    const auto cls3 = classify_twists(cyclic_group(3));
    c.require(cls3.size() == 2 && cls3[0].members.size() == 1 && cls3[1].members.size() == 1, "C3 classes");
    const FiniteGroup s3 = symmetric_group(3);
    std::vector<std::size_t> sizes;
    for (const auto& k : classify_twists(s3)) sizes.push_back(k.members.size());
    c.require(sizes == std::vector<std::size_t>{1, 3, 2}, "S3 class sizes");
    // oracle: brute-force conjugacy classes over all permutations of S3 that respect the table
    std::vector<std::size_t> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t auts = 0;
    do auts += is_group_automorphism(s3, perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    c.require(auts == 6, "brute-force |Aut S3|");

    CommandOptions o;
    o.family = "group";
    o.out = fs::temp_directory_path() / "ttba_acceptance_s3.json";
    const CommandResult r = cmd_iso_search({data / "s3_group.json"}, o);
    c.require(r.exit_code == exit_ok && r.report["verified"] == true, "S3 search");
    c.require(cmd_iso_verify(*o.out).exit_code == exit_ok, "S3 witness verify");
    o.out.reset();
    const CommandResult n = cmd_iso_search({data / "c3_group.json"}, o);
    c.require(n.summary == "no witness in searched family (group-induced automorphisms)", "C3: " + n.summary);
  });

  criterion(8, "cd formula", 30.0, [](Check& c) {
    c.require(bidimension(function_algebra(1), 2).str() == "0", "bidim Q");
    c.require(bidimension(function_algebra(2), 2).str() == "0", "bidim Q+Q");
    c.require(bidimension(matrix_algebra(2), 2).str() == "0", "bidim M2");
    c.require(bidimension(scalar_triangular().carrier, 2).str() == "1", "bidim 3-dim");
    c.require(cd_formula_check(scalar_triangular(), 2).verdict == "PASS", "cd 3-dim");
    c.require(cd_formula_check(zero_offdiagonal_triangular(), 2).verdict == "PASS", "cd X=0");
  });

  criterion(9, "cohomology engine self-consistency", 0, [](Check& c) {
    std::vector<std::pair<AlgebraPtr, Bimodule>> cases;
    for (const auto& [name, t] : bundled()) {
      if (t.carrier->dim() > 7) continue;
      cases.emplace_back(t.carrier, regular_bimodule(t.carrier));
      cases.emplace_back(t.carrier, dual_bimodule(ideal_bimodule(t)));
    }
    cases.emplace_back(matrix_algebra(2), regular_bimodule(matrix_algebra(2)));
    for (auto& [a, m] : cases) {
      CochainComplex cx(a, m, Budget{4'000'000});
      for (std::size_t n = 0; n < 3 && cx.differential_entries(n + 1) <= 4'000'000; ++n)
        c.require((cx.differential(n + 1) * cx.differential(n)).is_zero(), "delta o delta != 0");
    }
    for (const AlgebraPtr& a : {matrix_algebra(2), group_algebra(symmetric_group(3))})
      c.require(hochschild_dim(a, regular_bimodule(a), 0) == center_dim_oracle(*a), "H0 != center");
    c.require(center_dim_oracle(*group_algebra(symmetric_group(3))) == 3, "center of Q[S3]");

    const TriAlgebra t = scalar_triangular();
    const auto perm = rotate(3, 1);
    const AlgebraPtr pa = std::make_shared<const FDAlgebra>(permute_basis(*t.carrier, perm));
    for (const auto& m : {regular_bimodule(t.carrier), dual_bimodule(regular_bimodule(t.carrier))}) {
      const Bimodule pm = permute_bimodule(m, pa, perm, pa, perm, rotate(m.dim(), 2));
      for (std::size_t n = 0; n <= 2; ++n)
        c.require(hochschild_dim(pa, pm, n) == hochschild_dim(t.carrier, m, n), "permutation changes H^n");
    }
  });

  criterion(10, "amenability probes", 0, [](Check& c) {
    for (const TriAlgebra& t : {scalar_triangular(), matrix_block_triangular()}) {
      const WaSufficient w = wa_sufficient_check(t.a, t.b, t.x, t.twist);
      c.require(!w.verdict.empty(), "no verdict");
    }
    const TriAlgebra t = scalar_triangular();
    const WaProbe p = weak_amenability_probe(t), q = weak_amenability_probe(t);
    c.require(p.h1_t_tstar == q.h1_t_tstar && p.h1_t_istar == q.h1_t_istar && p.statement == q.statement,
              "probe not deterministic");
    c.require(!p.statement.empty(), "no statement");
    const auto perm = rotate(3, 1);
    const AlgebraPtr pa = std::make_shared<const FDAlgebra>(permute_basis(*t.carrier, perm));
    const Bimodule tt = dual_bimodule(regular_bimodule(t.carrier));
    const Bimodule ii = dual_bimodule(ideal_bimodule(t));
    c.require(hochschild_dim(pa, permute_bimodule(tt, pa, perm, pa, perm, rotate(3, 2)), 1) == p.h1_t_tstar,
              "H1(T,T*) not permutation invariant");
    c.require(hochschild_dim(pa, permute_bimodule(ii, pa, perm, pa, perm, rotate(ii.dim(), 0)), 1) == p.h1_t_istar,
              "H1(T,I*) not permutation invariant");
    std::cout << "      H1(T,T*) = " << p.h1_t_tstar << ", H1(T,I*) = " << p.h1_t_istar << ": " << p.statement
              << std::endl;
  });

  criterion(11, "determinism and round trips", 0, [](Check& c) {
    for (const auto& entry : fs::directory_iterator(data)) {
      const fs::path f = entry.path();
      if (f.extension() != ".json") continue;
      const std::string name = f.filename().string();
      std::string kind;
      try {
        kind = kind_of(read_json(f));
      } catch (const ParseError&) {
        continue;
      }
      if (kind == "triangular" || kind == "anchored-system") {
        const CommandResult r1 = cmd_report(f), r2 = cmd_report(f);
        c.require(r1.exit_code == exit_ok, name + ": report exit " + std::to_string(r1.exit_code));
        c.require(dump(r1.report) == dump(r2.report), name + ": report differs between runs");
      }
      const Json doc = read_json(f);
      try {
        if (kind == "algebra") {
          const FDAlgebra a = algebra_from_json(doc);
          c.require(algebra_from_json(algebra_to_json(a)) == a, name + ": algebra round trip");
        } else if (kind == "triangular") {
          const TriAlgebra t = triangular_from_json(doc, data);
          const TriAlgebra u = triangular_from_json(Json::parse(dump(triangular_to_json(t))), data);
          c.require(*u.carrier == *t.carrier && u.x == t.x && u.twist == t.twist, name + ": triangular round trip");
        } else if (kind == "anchored-system") {
          const auto s = anchored_from_json(doc);
          c.require(anchored_from_json(anchored_to_json(s)) == s, name + ": anchored round trip");
        } else if (kind == "group") {
          const GroupSpec g = group_spec_from_json(doc);
          const GroupSpec h = group_spec_from_json(group_to_json(group_from_cayley(g.cayley, g.labels), g.twists));
          c.require(h.cayley == g.cayley && h.labels == g.labels && h.twists == g.twists, name + ": group round trip");
        }
      } catch (const ParseError&) {
        // bad_rational.json is meant to fail
      }
    }
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
