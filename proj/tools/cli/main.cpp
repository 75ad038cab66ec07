#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace etcons::cli;

  CLI::App app{"Event-triggered average consensus experiments"};
  app.require_subcommand(1);

  CommandOptions opt;
  std::string law;
  auto add_common = [&](CLI::App* cmd, bool with_out) {
    cmd->add_option("--config", opt.config, "Experiment file")->required()->check(CLI::ExistingFile);
    if (with_out) cmd->add_option("--out", opt.out_dir, "Output directory")->capture_default_str();
    cmd->add_option("--law", law, "Override the triggering law");
    cmd->add_option("--t-final", opt.overrides.t_final, "Override the horizon");
    cmd->add_option("--seed", opt.overrides.seed, "Redraw x0 with this seed");
  };
  auto* run = app.add_subcommand("run", "Simulate one law and write trajectory/event/metric files");
  auto* compare = app.add_subcommand("compare", "Run all four laws and write comparison.csv");
  auto* check = app.add_subcommand("check", "Validate an experiment file");
  add_common(run, true);
  add_common(compare, true);
  add_common(check, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  if (!law.empty()) {
    opt.overrides.law = etcons::parse_law(law);
    if (!opt.overrides.law) {
      std::cerr << "error: unknown law '" << law << "'\n";
      return kExitConfig;
    }
  }
  if (run->parsed()) return run_command(opt, std::cout, std::cerr);
  if (compare->parsed()) return compare_command(opt, std::cout, std::cerr);
  return check_command(opt, std::cout, std::cerr);
}
