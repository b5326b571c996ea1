// zitterlab check|simulate|sweep --config <path> [--svg] [--out <dir>] [--seed N]

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "zitterlab/app.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Homogeneous canonical formalism for the Bopp Lagrangian"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  bool svg = false;

  auto add_mode = [&](const std::string& name, const std::string& description) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("--config", config_path, "key = value config file")->required();
    sub->add_option("--out", out_dir, "output directory (overrides the config)");
    sub->add_option("--seed", seed, "random jet seed (overrides the config)");
    sub->add_flag("--svg", svg, "also write plot.svg (simulate)");
    return sub;
  };
  CLI::App* check = add_mode("check", "evaluate the identity suite on random jets");
  CLI::App* simulate = add_mode("simulate", "integrate one trajectory");
  CLI::App* sweep = add_mode("sweep", "scan helix solutions over a parameter grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? zitterlab::kExitOk : zitterlab::kExitUsage;
  }

  zitterlab::Mode mode = zitterlab::Mode::Check;
  if (simulate->parsed()) mode = zitterlab::Mode::Simulate;
  if (sweep->parsed()) mode = zitterlab::Mode::Sweep;
  (void)check;

  zitterlab::RunConfig cfg;
  try {
    cfg = zitterlab::load_config(config_path);
  } catch (const zitterlab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return zitterlab::kExitUsage;
  }
  if (out_dir) cfg.out_dir = *out_dir;
  if (seed) cfg.seed = *seed;
  if (svg) cfg.svg = true;
  return zitterlab::run_mode(mode, cfg, std::cerr);
}
