#pragma once

#include <filesystem>
#include <ostream>

#include "experiment.hpp"

namespace etcons::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 1,
  kExitZeno = 2,
  kExitNumerical = 3,
};

int exit_code_for(ErrorKind kind) noexcept;

struct CommandOptions {
  std::filesystem::path config;
  std::filesystem::path out_dir = ".";
  Overrides overrides;
};

/// Each command reports errors on `err` and returns an ExitCode; nothing
/// escapes as an exception.
int run_command(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int compare_command(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int check_command(const CommandOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace etcons::cli
