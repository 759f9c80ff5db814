#include "ttba/commands.hpp"

#include "ttba/catalog.hpp"
#include "ttba/errors.hpp"

#include <sstream>

namespace ttba {

namespace fs = std::filesystem;

namespace {

Json violations_json(const ValidationReport& report) {
  Json out = Json::array();
  for (const auto& v : report) {
    Json j;
    j["axiom"] = v.axiom;
    j["indices"] = v.indices;
    j["detail"] = v.detail;
    out.push_back(j);
  }
  return out;
}

Json table_json(const std::vector<DegreeDim>& t) {
  Json out = Json::array();
  for (const auto& d : t) out.push_back(Json{{"degree", d.degree}, {"dim", d.dim}});
  return out;
}

Json bidim_json(const Bidimension& b) {
  Json j;
  j["value"] = b.str();
  j["max_degree"] = b.max_degree;
  j["table"] = table_json(b.table);
  j["unchecked_degrees"] = b.unchecked;
  j["monotone"] = b.monotone;
  return j;
}

Json shear_basis_json(const std::vector<Shear>& basis) {
  Json out = Json::array();
  for (const auto& s : basis) out.push_back(Json{{"f", to_json(s.f)}, {"g", to_json(s.g)}});
  return out;
}

Json blocks_json(const Blocks& b) { return Json{{"A", b.a_dim}, {"X", b.x_dim}, {"B", b.b_dim}, {"total", b.total()}}; }

std::string opt_str(const std::optional<Bidimension>& b) { return b ? b->str() : "?"; }

Json verdict_json(const IsoVerdict& v) {
  Json items = Json::array();
  for (const auto& c : v.items) {
    Json j;
    j["check"] = c.name;
    j["passed"] = c.passed;
    if (!c.detail.empty()) j["detail"] = c.detail;
    items.push_back(j);
  }
  return items;
}

struct AlgebraInput {
  AlgebraPtr algebra;
  std::optional<TriAlgebra> tri;
};

AlgebraInput load_algebra_input(const fs::path& path) {
  const Json doc = read_json(path);
  const std::string kind = kind_of(doc);
  if (kind == "algebra") {
    auto a = std::make_shared<const FDAlgebra>(algebra_from_json(doc));
    const auto report = check_algebra(*a);
    if (!report.empty()) throw ValidationError("algebra: " + describe(report.front()));
    return {a, std::nullopt};
  }
  if (kind == "triangular" || kind == "anchored-system") {
    TriAlgebra t = load_triangular(path);
    return {t.carrier, std::move(t)};
  }
  throw ParseError("expected an algebra, triangular or anchored-system file, got kind \"" + kind + "\"");
}

Bimodule resolve_module(const AlgebraInput& in, const std::string& name) {
  if (name == "regular") return regular_bimodule(in.algebra);
  if (name == "dual") return dual_bimodule(regular_bimodule(in.algebra));
  if (name == "semisimple") return semisimple_test_bimodule(in.algebra);
  if (name == "ideal" || name == "ideal-dual") {
    if (!in.tri) throw ParseError("--module " + name + " needs a triangular input");
    const Bimodule i = ideal_bimodule(*in.tri);
    return name == "ideal" ? i : dual_bimodule(i);
  }
  const fs::path p(name);
  const Json doc = read_json(p);
  Bimodule m = bimodule_from_json(doc, p.parent_path(), in.algebra, in.algebra);
  const auto report = check_bimodule(m);
  if (!report.empty()) throw ValidationError("module: " + describe(report.front()));
  return m;
}

CommandResult validate_triangular(const Json& doc, const fs::path& base, Json report) {
  const TriangularSpec s = triangular_spec_from_json(doc, base);
  Json parts;
  parts["A"] = violations_json(check_algebra(*s.a));
  parts["B"] = violations_json(check_algebra(*s.b));
  parts["X"] = violations_json(check_bimodule(s.x));
  report["components"] = parts;
  try {
    const TriAlgebra t = build_from_spec(s);
    report["valid"] = true;
    report["blocks"] = blocks_json(t.blocks);
    return {exit_ok, report, "valid triangular algebra of dimension " + std::to_string(t.blocks.total())};
  } catch (const ValidationError& e) {
    report["valid"] = false;
    report["error"] = e.what();
    return {exit_invalid, report, std::string("invalid: ") + e.what()};
  }
}

CommandResult report_violations(Json report, const ValidationReport& v, const std::string& what) {
  report["valid"] = v.empty();
  report["violations"] = violations_json(v);
  if (v.empty()) return {exit_ok, report, "valid " + what};
  return {exit_invalid, report,
          "invalid " + what + ": " + describe(v.front()) +
              (v.size() > 1 ? " (and " + std::to_string(v.size() - 1) + " more)" : "")};
}

std::string scope_group() {
  return "searched delta over all group automorphisms of G; non-conjugacy here is relative to group-induced "
         "automorphisms of Q[G], not a proof of non-isomorphism";
}

std::string scope_function() {
  return "exhaustive search over all permutation triples (h_K, h_L, H); automorphisms of Q^K are exactly basis "
         "permutations, so absence certifies non-isomorphism";
}

}  // namespace

CommandResult run_command(const std::string& name, const std::function<CommandResult()>& body) {
  auto fail = [&](int code, const std::string& type, const std::string& msg) {
    Json r;
    r["command"] = name;
    r["status"] = type;
    r["error"] = msg;
    return CommandResult{code, r, type + ": " + msg};
  };
  try {
    return body();
  } catch (const ParseError& e) {
    return fail(exit_parse, "parse error", e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(exit_parse, "parse error", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(exit_parse, "parse error", e.what());
  } catch (const std::out_of_range& e) {
    return fail(exit_parse, "parse error", e.what());
  } catch (const ValidationError& e) {
    return fail(exit_invalid, "invalid", e.what());
  } catch (const BudgetExceeded& e) {
    CommandResult r = fail(exit_budget, "budget exceeded", e.what());
    r.report["required_entries"] = e.required();
    r.report["limit"] = e.limit();
    return r;
  }
}

CommandResult cmd_validate(const fs::path& path, const CommandOptions&) {
  return run_command("validate", [&]() -> CommandResult {
    const Json doc = read_json(path);
    const std::string kind = kind_of(doc);
    Json report;
    report["command"] = "validate";
    report["kind"] = kind;
    const fs::path base = path.parent_path();
    if (kind == "algebra") {
      const FDAlgebra a = algebra_from_json(doc);
      report["dim"] = a.dim();
      return report_violations(report, check_algebra(a), "algebra");
    }
    if (kind == "bimodule") {
      const Bimodule m = bimodule_from_json(doc, base);
      report["dim"] = m.dim();
      ValidationReport v = check_algebra(m.left_algebra());
      for (const auto& x : check_algebra(m.right_algebra())) v.push_back(x);
      for (const auto& x : check_bimodule(m)) v.push_back(x);
      return report_violations(report, v, "bimodule");
    }
    if (kind == "triangular") return validate_triangular(doc, base, report);
    if (kind == "group") {
      const GroupSpec g = group_spec_from_json(doc);
      try {
        const FiniteGroup grp = group_from_cayley(g.cayley, g.labels);
        report["order"] = grp.order();
        ValidationReport v;
        if (g.twists) {
          const std::vector<std::pair<const char*, const GroupAutomorphism*>> named{
              {"gamma_A", &g.twists->gamma_a},
              {"gamma_B", &g.twists->gamma_b},
              {"gamma_A_prime", &g.twists->gamma_a_prime},
              {"gamma_B_prime", &g.twists->gamma_b_prime}};
          for (const auto& [n, gamma] : named)
            if (!is_group_automorphism(grp, *gamma)) v.push_back({std::string(n) + " is a group automorphism", {}, ""});
        }
        return report_violations(report, v, "group of order " + std::to_string(grp.order()));
      } catch (const ValidationError& e) {
        report["valid"] = false;
        report["error"] = e.what();
        return {exit_invalid, report, std::string("invalid: ") + e.what()};
      }
    }
    if (kind == "anchored-system") {
      const AnchoredFunctionSystem s = anchored_from_json(doc);
      try {
        validate(s);
        const TriAlgebra t = anchored_triangular(s);
        report["valid"] = true;
        report["blocks"] = blocks_json(t.blocks);
        return {exit_ok, report, "valid anchored system"};
      } catch (const ValidationError& e) {
        report["valid"] = false;
        report["error"] = e.what();
        return {exit_invalid, report, std::string("invalid: ") + e.what()};
      }
    }
    if (kind == "iso-data") {
      const IsoFile f = iso_from_json(doc, base);
      const IsoVerdict v = verify_iso_data(f.sigma, f.tau, f.data);
      report["valid"] = v.passed();
      report["checks"] = verdict_json(v);
      if (v.passed()) return {exit_ok, report, "iso data verifies"};
      return {exit_invalid, report, "iso data fails " + v.first_failure()->name};
    }
    if (kind == "shear") {
      const Shear s = shear_from_json(doc);
      report["dim_X"] = s.f.rows();
      if (doc.contains("triangular")) {
        const Resolved r = resolve_ref(doc["triangular"], base);
        const TriAlgebra t = triangular_from_json(r.doc, r.base);
        const bool ok = is_cocycle(t.x, t.twist, s);
        report["valid"] = ok;
        report["cocycle"] = ok;
        return {ok ? exit_ok : exit_invalid, report, ok ? "shear is a cocycle" : "shear is not a cocycle"};
      }
      report["valid"] = true;
      return {exit_ok, report, "well-formed shear"};
    }
    throw ParseError("unknown kind \"" + kind + "\"");
  });
}

CommandResult cmd_shear(const fs::path& path, const CommandOptions&) {
  return run_command("shear", [&]() -> CommandResult {
    const TriAlgebra t = load_triangular(path);
    const auto z = cocycle_space(t.x, t.twist);
    const auto b = inner_shears(t.x, t.twist);
    Json r;
    r["command"] = "shear";
    r["blocks"] = blocks_json(t.blocks);
    r["z1_dim"] = z.size();
    r["b1_dim"] = b.size();
    r["quotient_dim"] = z.size() - b.size();
    r["z1_basis"] = shear_basis_json(z);
    r["b1_basis"] = shear_basis_json(b);
    std::ostringstream s;
    s << "dim Z1 = " << z.size() << ", dim B1 = " << b.size() << ", dim Z1/B1 = " << z.size() - b.size();
    return {exit_ok, r, s.str()};
  });
}

CommandResult cmd_iso_verify(const fs::path& path, const CommandOptions&) {
  return run_command("iso verify", [&]() -> CommandResult {
    const IsoFile f = iso_from_json(read_json(path), path.parent_path());
    const IsoVerdict v = verify_iso_data(f.sigma, f.tau, f.data);
    Json r;
    r["command"] = "iso verify";
    r["checks"] = verdict_json(v);
    r["passed"] = v.passed();
    if (!v.passed()) return {exit_invalid, r, "FAIL: " + v.first_failure()->name + ": " + v.first_failure()->detail};
    const PhiPair p = build_phi(f.sigma, f.tau, f.data);
    const IdealVerdict iv = characteristic_ideal_check(p.phi, f.sigma, f.tau);
    r["phi_multiplicative"] = p.multiplicative;
    r["roundtrip"] = p.roundtrip;
    r["characteristic_ideal"] = to_string(iv.status);
    r["characteristic_ideal_detail"] = iv.detail;
    const bool ok = p.multiplicative && p.roundtrip && iv.status != IdealStatus::fail && iv.status != IdealStatus::rejected;
    return {ok ? exit_ok : exit_invalid, r, ok ? "PASS: Phi is an isomorphism and Psi inverts it" : "FAIL: Phi check"};
  });
}

CommandResult cmd_iso_search(const std::vector<fs::path>& paths, const CommandOptions& opt) {
  return run_command("iso search", [&]() -> CommandResult {
    Json r;
    r["command"] = "iso search";
    r["family"] = opt.family;
    if (opt.family == "group") {
      if (paths.size() != 1) throw ParseError("--family group takes one group file with a twist_pair");
      const GroupSpec spec = group_spec_from_json(read_json(paths[0]));
      if (!spec.twists) throw ParseError("group file has no \"twist_pair\"");
      const FiniteGroup g = group_from_cayley(spec.cayley, spec.labels);
      const TwistPair& tp = *spec.twists;
      const GroupSearchResult res = search_iso_group(g, tp.gamma_a, tp.gamma_b, tp.gamma_a_prime, tp.gamma_b_prime);
      r["scope"] = scope_group();
      r["candidates_A"] = res.candidates_a;
      r["candidates_B"] = res.candidates_b;
      r["note"] = res.note;
      if (!res.witness) {
        r["witness"] = nullptr;
        r["result"] = "no witness in searched family (group-induced automorphisms)";
        return {exit_ok, r, "no witness in searched family (group-induced automorphisms)"};
      }
      const TriAlgebra src = group_triangular(g, tp.gamma_a, tp.gamma_b);
      const TriAlgebra dst = group_triangular(g, tp.gamma_a_prime, tp.gamma_b_prime);
      const IsoVerdict v = verify_iso_data(src, dst, *res.witness);
      const Json iso = iso_to_json(*res.witness, triangular_to_json(src, "sigma"), triangular_to_json(dst, "tau"));
      r["delta_A"] = res.delta_a;
      r["delta_B"] = res.delta_b;
      r["verified"] = v.passed();
      r["result"] = "witness found";
      if (opt.out) {
        write_json(*opt.out, iso);
        r["witness_file"] = opt.out->filename().string();
      } else {
        r["witness"] = iso;
      }
      return {v.passed() ? exit_ok : exit_invalid, r, "witness found; verification " + std::string(v.passed() ? "passes" : "FAILS")};
    }
    if (opt.family == "function") {
      if (paths.size() != 2) throw ParseError("--family function takes two anchored-system files (sigma, tau)");
      const AnchoredFunctionSystem s = anchored_from_json(read_json(paths[0]));
      const AnchoredFunctionSystem t = anchored_from_json(read_json(paths[1]));
      const FunctionSearchResult res =
          search_iso_function(s, t, static_cast<std::size_t>(opt.max_entries.value_or(10'000'000)));
      r["scope"] = scope_function();
      r["examined"] = res.examined;
      r["note"] = res.note;
      if (!res.witness) {
        r["witness"] = nullptr;
        r["result"] = "no witness";
        r["certification"] = "exhaustive search over permutation triples found no intertwiner; not isomorphic";
        return {exit_ok, r, "no witness; exhaustive search certifies non-isomorphism"};
      }
      r["h_K"] = res.witness->h_k;
      r["h_L"] = res.witness->h_l;
      r["H"] = res.witness->h_omega;
      const TriAlgebra src = anchored_triangular(s), dst = anchored_triangular(t);
      const IsoData d = function_iso_data(s, *res.witness);
      const IsoVerdict v = verify_iso_data(src, dst, d);
      const Json iso = iso_to_json(d, triangular_to_json(src, "sigma"), triangular_to_json(dst, "tau"));
      r["verified"] = v.passed();
      r["result"] = "witness found";
      if (opt.out) {
        write_json(*opt.out, iso);
        r["witness_file"] = opt.out->filename().string();
      } else {
        r["witness"] = iso;
      }
      return {v.passed() ? exit_ok : exit_invalid, r, "witness found; verification " + std::string(v.passed() ? "passes" : "FAILS")};
    }
    throw ParseError("--family must be group or function");
  });
}

CommandResult cmd_cohomology(const fs::path& path, const CommandOptions& opt) {
  return run_command("cohomology", [&]() -> CommandResult {
    const AlgebraInput in = load_algebra_input(path);
    const Bimodule m = resolve_module(in, opt.module);
    CochainComplex c(in.algebra, m, Budget::resolve(opt.max_entries));
    std::vector<DegreeDim> table;
    for (std::size_t n = 0; n <= opt.degree; ++n) table.push_back({n, c.cohomology_dim(n)});
    Json r;
    r["command"] = "cohomology";
    r["module"] = opt.module;
    r["algebra_dim"] = in.algebra->dim();
    r["module_dim"] = m.dim();
    r["degree"] = opt.degree;
    r["dim"] = table.back().dim;
    r["table"] = table_json(table);
    return {exit_ok, r, std::to_string(table.back().dim)};
  });
}

CommandResult cmd_bidim(const fs::path& path, const CommandOptions& opt) {
  return run_command("bidim", [&]() -> CommandResult {
    const AlgebraInput in = load_algebra_input(path);
    const Bidimension b = bidimension(in.algebra, opt.max_degree, Budget::resolve(opt.max_entries));
    Json r;
    r["command"] = "bidim";
    r["algebra_dim"] = in.algebra->dim();
    r["bidimension"] = bidim_json(b);
    return {exit_ok, r, b.str()};
  });
}

namespace {

Json cd_json(const CdReport& c, std::size_t max_degree) {
  Json r;
  r["max_degree"] = max_degree;
  r["cd_A"] = opt_str(c.cd_a);
  r["cd_B"] = opt_str(c.cd_b);
  r["cd_T"] = opt_str(c.cd_t);
  r["x_nonzero"] = c.x_nonzero;
  r["formula"] = c.formula ? Json(*c.formula) : Json(nullptr);
  r["verdict"] = c.verdict;
  r["upper_bound_ok"] = c.upper_bound_ok ? Json(*c.upper_bound_ok) : Json(nullptr);
  r["lower_bound_ok"] = c.lower_bound_ok ? Json(*c.lower_bound_ok) : Json(nullptr);
  Json tables;
  if (c.cd_a) tables["A"] = bidim_json(*c.cd_a);
  if (c.cd_b) tables["B"] = bidim_json(*c.cd_b);
  if (c.cd_t) tables["T"] = bidim_json(*c.cd_t);
  r["bidimensions"] = tables;
  r["acyclicity_H_Q_Xstar"] = table_json(c.acyclicity);
  r["budget_errors"] = c.budget_errors;
  return r;
}

std::string cd_line(const CdReport& c) {
  return opt_str(c.cd_t) + " = max{" + opt_str(c.cd_a) + "," + opt_str(c.cd_b) + "," + (c.x_nonzero ? "1" : "0") +
         "}: " + c.verdict;
}

}  // namespace

CommandResult cmd_cd_check(const fs::path& path, const CommandOptions& opt) {
  return run_command("cd-check", [&]() -> CommandResult {
    const TriAlgebra t = load_triangular(path);
    const CdReport c = cd_formula_check(t, opt.max_degree, Budget::resolve(opt.max_entries));
    Json r{{"command", "cd-check"}};
    r.update(cd_json(c, opt.max_degree));
    std::string line = cd_line(c);
    if (!c.budget_errors.empty()) return {exit_budget, r, line + " (partial: " + c.budget_errors.front() + ")"};
    return {c.verdict == "PASS" ? exit_ok : exit_invalid, r, line};
  });
}

CommandResult cmd_wa(const fs::path& path, const CommandOptions& opt) {
  return run_command("wa", [&]() -> CommandResult {
    const TriAlgebra t = load_triangular(path);
    const Budget budget = Budget::resolve(opt.max_entries);
    const WaSufficient w = wa_sufficient_check(t.a, t.b, t.x, t.twist, budget);
    const WaProbe p = weak_amenability_probe(t, budget);
    Json r;
    r["command"] = "wa";
    Json four;
    four["H1(A,A*)"] = w.h1_a_astar;
    four["H1(B,B*)"] = w.h1_b_bstar;
    four["H1(A,X*)"] = w.h1_a_xstar;
    four["H1(B,X*)"] = w.h1_b_xstar;
    r["sufficient_condition"] = four;
    r["sufficient_condition_met"] = w.met;
    r["H1(T,T*) when met"] = w.h1_t_tstar ? Json(*w.h1_t_tstar) : Json(nullptr);
    r["sufficient_verdict"] = w.verdict;
    Json probe;
    probe["H1(T,T*)"] = p.h1_t_tstar;
    probe["H1(T,I*)"] = p.h1_t_istar;
    probe["x_nonzero"] = p.x_nonzero;
    probe["diagonals_amenable"] = p.diagonals_amenable ? Json(*p.diagonals_amenable) : Json(nullptr);
    probe["statement"] = p.statement;
    r["probe"] = probe;
    std::ostringstream s;
    s << "H1(A,A*)=" << w.h1_a_astar << " H1(B,B*)=" << w.h1_b_bstar << " H1(A,X*)=" << w.h1_a_xstar
      << " H1(B,X*)=" << w.h1_b_xstar << "; " << w.verdict << "\nH1(T,T*)=" << p.h1_t_tstar
      << " H1(T,I*)=" << p.h1_t_istar << "; " << p.statement;
    return {exit_ok, r, s.str()};
  });
}

CommandResult cmd_classify_twists(const fs::path& path, const CommandOptions&) {
  return run_command("classify-twists", [&]() -> CommandResult {
    const GroupSpec spec = group_spec_from_json(read_json(path));
    const FiniteGroup g = group_from_cayley(spec.cayley, spec.labels);
    const auto classes = classify_twists(g);
    Json r;
    r["command"] = "classify-twists";
    r["order"] = g.order();
    Json cs = Json::array();
    std::string sizes;
    std::size_t total = 0;
    for (const auto& c : classes) {
      cs.push_back(Json{{"representative", c.representative}, {"size", c.members.size()}, {"members", c.members}});
      sizes += (sizes.empty() ? "" : ",") + std::to_string(c.members.size());
      total += c.members.size();
    }
    r["automorphisms"] = total;
    r["classes"] = cs;
    return {exit_ok, r,
            std::to_string(classes.size()) + " classes of sizes " + sizes + " in Aut(G) of order " + std::to_string(total)};
  });
}

CommandResult cmd_report(const fs::path& path, const CommandOptions& opt) {
  return run_command("report", [&]() -> CommandResult {
    const std::string kind = kind_of(read_json(path));
    if (kind != "triangular" && kind != "anchored-system")
      throw ParseError("report expects a triangular or anchored-system file, got kind \"" + kind + "\"");
    const TriAlgebra t = load_triangular(path);
    const Budget budget = Budget::resolve(opt.max_entries);
    Json r;
    r["command"] = "report";
    r["validation"] = Json{{"valid", check_algebra(*t.carrier).empty()}};
    r["blocks"] = blocks_json(t.blocks);

    const PeirceData pd = peirce(t);
    r["peirce"] = Json{{"e11", to_json(pd.e11)},
                       {"e22", to_json(pd.e22)},
                       {"idempotents", pd.idempotents},
                       {"sums_to_unit", pd.sums_to_unit},
                       {"corner_dims", pd.corner_dims},
                       {"corners_match", pd.corner_a_matches && pd.corner_b_matches && pd.corner_x_matches},
                       {"lower_corner_zero", pd.lower_corner_zero}};

    const ExactSequence es = ideal_and_quotient(t);
    r["exact_sequence"] = Json{{"ideal_dim", es.ideal_basis.size()},
                               {"quotient_dim", es.quotient->dim()},
                               {"ideal_square_zero", es.ideal_square_zero},
                               {"projection_multiplicative", es.projection_multiplicative},
                               {"kernel_is_ideal", es.kernel_is_ideal}};

    const ShearCohomology sc = shear_cohomology(t.x, t.twist);
    r["shear"] = Json{{"z1_dim", sc.z1}, {"b1_dim", sc.b1}, {"quotient_dim", sc.quotient()}};

    Json coh;
    const std::vector<std::pair<std::string, Bimodule>> modules{
        {"regular", regular_bimodule(t.carrier)},
        {"dual", dual_bimodule(regular_bimodule(t.carrier))},
        {"ideal-dual", dual_bimodule(ideal_bimodule(t))}};
    for (const auto& [name, m] : modules) {
      CochainComplex c(t.carrier, m, budget);
      Json rows = Json::array();
      for (std::size_t n = 0; n <= 1; ++n) {
        try {
          rows.push_back(Json{{"degree", n}, {"dim", c.cohomology_dim(n)}});
        } catch (const BudgetExceeded& e) {
          rows.push_back(Json{{"degree", n}, {"dim", nullptr}, {"budget_exceeded", e.what()}});
          break;
        }
      }
      coh[name] = rows;
    }
    r["cohomology"] = coh;

    const CdReport cd = cd_formula_check(t, opt.max_degree, budget);
    r["cd_formula"] = cd_json(cd, opt.max_degree);
    return {exit_ok, r, "report: dim " + std::to_string(t.blocks.total()) + ", cd " + cd_line(cd)};
  });
}

}  // namespace ttba
