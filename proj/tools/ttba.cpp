#include "ttba/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>

namespace {

std::uint64_t parse_entries(const std::string& text) {
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size() || !(v >= 1) || v != std::floor(v) || v > 1e18)
    throw CLI::ValidationError("--max-entries", "expected a positive integer, got " + text);
  return static_cast<std::uint64_t>(v);
}

int emit(const ttba::CommandResult& r) {
  std::cout << ttba::dump(r.report);
  if (!r.summary.empty()) std::cerr << r.summary << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ttba: twisted triangular algebra workbench over the rationals"};
  app.require_subcommand(1);

  ttba::CommandOptions opt;
  std::string entries;
  std::string out;
  std::string path;
  std::vector<std::string> paths;

  auto add_budget = [&](CLI::App* c) {
    c->add_option("--max-entries", entries, "matrix entries allowed per differential (or search bound)");
  };

  auto* validate = app.add_subcommand("validate", "check every invariant of an input file");
  validate->add_option("path", path)->required();

  auto* shear = app.add_subcommand("shear", "shear cocycles Z1, inner shears B1 and the quotient");
  shear->add_option("path", path)->required();

  auto* iso = app.add_subcommand("iso", "isomorphism data");
  iso->require_subcommand(1);
  auto* verify = iso->add_subcommand("verify", "verify an iso-data file");
  verify->add_option("path", path)->required();
  auto* search = iso->add_subcommand("search", "search a family for a witness");
  search->add_option("paths", paths)->required();
  search->add_option("--family", opt.family)->required()->check(CLI::IsMember({"group", "function"}));
  search->add_option("--out", out, "write the witness iso-data here");
  add_budget(search);

  auto* cohomology = app.add_subcommand("cohomology", "Hochschild cohomology dimensions");
  cohomology->add_option("path", path)->required();
  cohomology->add_option("--module", opt.module, "regular, dual, semisimple, ideal, ideal-dual or a bimodule file");
  cohomology->add_option("--degree", opt.degree);
  add_budget(cohomology);

  auto* bidim = app.add_subcommand("bidim", "Hochschild cohomological dimension");
  bidim->add_option("path", path)->required();
  bidim->add_option("--max-degree", opt.max_degree);
  add_budget(bidim);

  auto* cd = app.add_subcommand("cd-check", "check cd(T) = max{cd A, cd B, [X != 0]}");
  cd->add_option("path", path)->required();
  cd->add_option("--max-degree", opt.max_degree);
  add_budget(cd);

  auto* wa = app.add_subcommand("wa", "weak amenability table and probe");
  wa->add_option("path", path)->required();
  add_budget(wa);

  auto* classify = app.add_subcommand("classify-twists", "conjugacy classes in Aut(G)");
  classify->add_option("path", path)->required();

  auto* report = app.add_subcommand("report", "aggregated report for a triangular file");
  report->add_option("path", path)->required();
  report->add_option("--max-degree", opt.max_degree);
  add_budget(report);

  try {
    app.parse(argc, argv);
    if (!entries.empty()) opt.max_entries = parse_entries(entries);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return ttba::exit_parse;
  } catch (const std::exception& e) {
    std::cerr << "--max-entries: " << e.what() << "\n";
    return ttba::exit_parse;
  }
  if (!out.empty()) opt.out = out;

  if (validate->parsed()) return emit(ttba::cmd_validate(path, opt));
  if (shear->parsed()) return emit(ttba::cmd_shear(path, opt));
  if (verify->parsed()) return emit(ttba::cmd_iso_verify(path, opt));
  if (search->parsed()) {
    std::vector<std::filesystem::path> ps(paths.begin(), paths.end());
    return emit(ttba::cmd_iso_search(ps, opt));
  }
  if (cohomology->parsed()) return emit(ttba::cmd_cohomology(path, opt));
  if (bidim->parsed()) return emit(ttba::cmd_bidim(path, opt));
  if (cd->parsed()) return emit(ttba::cmd_cd_check(path, opt));
  if (wa->parsed()) return emit(ttba::cmd_wa(path, opt));
  if (classify->parsed()) return emit(ttba::cmd_classify_twists(path, opt));
  if (report->parsed()) return emit(ttba::cmd_report(path, opt));
  return ttba::exit_parse;
}
