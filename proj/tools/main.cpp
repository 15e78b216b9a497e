// Command-line driver: verification runs over the half-space models,
// weight certificates, indicial data, and the radial series iteration.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "halfspace/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"half-space hyperbolic model verification toolkit"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  unsigned long long seed = 1;
  bool csv = false;
  std::vector<std::string> overrides;

  const std::vector<std::string> names = {"verify-metric", "curvature-report",
                                          "weight-scan",   "indicial",
                                          "monoid",        "phg-run"};
  for (const auto& name : names) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "key=value config file");
    sub->add_option("--seed", seed, "random sampling seed");
    sub->add_option("--out", out_path, "report output path (default stdout)");
    sub->add_flag("--csv", csv, "also write CSV grid dumps");
    sub->add_option("--set", overrides, "extra key=value overrides");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    hs::RunConfig cfg;
    if (!config_path.empty()) cfg = hs::parse_config_file(config_path);
    for (const auto& kv : overrides) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw std::runtime_error("--set expects key=value");
      cfg.kv[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    cfg.seed = seed;
    cfg.out_path = out_path;
    cfg.csv = csv;

    const std::string name = app.get_subcommands().front()->get_name();
    hs::Report rep = hs::run_command(name, cfg);
    std::string text = rep.to_json().dump(2);
    if (out_path.empty()) {
      std::cout << text << "\n";
    } else {
      std::ofstream out(out_path);
      out << text << "\n";
    }
    return rep.overall() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
