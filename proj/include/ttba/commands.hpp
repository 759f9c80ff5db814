#pragma once

#include "ttba/hochschild.hpp"
#include "ttba/io.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ttba {

enum ExitCode : int { exit_ok = 0, exit_invalid = 1, exit_parse = 2, exit_budget = 3 };

struct CommandOptions {
  std::optional<std::uint64_t> max_entries;
  std::size_t degree = 1;
  std::size_t max_degree = 2;
  std::string module = "regular";
  std::string family;
  std::optional<std::filesystem::path> out;
};

struct CommandResult {
  int exit_code = exit_ok;
  Json report;          // stdout
  std::string summary;  // stderr
};

/// Runs body and maps ParseError/ValidationError/BudgetExceeded to exit
/// statuses 2/1/3 with an error report.
CommandResult run_command(const std::string& name, const std::function<CommandResult()>& body);

CommandResult cmd_validate(const std::filesystem::path& path, const CommandOptions& opt = {});
CommandResult cmd_shear(const std::filesystem::path& path, const CommandOptions& opt = {});
CommandResult cmd_iso_verify(const std::filesystem::path& path, const CommandOptions& opt = {});
CommandResult cmd_iso_search(const std::vector<std::filesystem::path>& paths, const CommandOptions& opt);
CommandResult cmd_cohomology(const std::filesystem::path& path, const CommandOptions& opt = {});
CommandResult cmd_bidim(const std::filesystem::path& path, const CommandOptions& opt = {});
CommandResult cmd_cd_check(const std::filesystem::path& path, const CommandOptions& opt = {});
CommandResult cmd_wa(const std::filesystem::path& path, const CommandOptions& opt = {});
CommandResult cmd_classify_twists(const std::filesystem::path& path, const CommandOptions& opt = {});
CommandResult cmd_report(const std::filesystem::path& path, const CommandOptions& opt = {});

}  // namespace ttba
