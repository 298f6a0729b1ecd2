// gamowlab: run, validate and generate commutator-decay scenarios.
//
//   gamowlab run <scenario.json> --out <dir>
//   gamowlab validate <scenario.json>
//   gamowlab demo --out <dir>

#include <CLI11.hpp>

#include <iostream>

#include "gamowlab/kernels.hpp"
#include "gamowlab/scenario.hpp"

int main(int argc, char** argv) {
  namespace cli = gamowlab::cli;

  CLI::App app{"Non-unitary observable dynamics on Gamow sectors and damping channels"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_dir;
  std::string kernel;
  app.add_option("--kernel", kernel, "Force a kernel set (scalar, avx2, neon)");

  auto* run = app.add_subcommand("run", "Run a scenario and write CSV + report files");
  run->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  run->add_option("--out", out_dir, "Output directory")->required();

  auto* validate = app.add_subcommand("validate", "Check a scenario without running it");
  validate->add_option("scenario", scenario_path, "Scenario JSON file")->required();

  auto* demo = app.add_subcommand("demo", "Write the three example scenarios");
  demo->add_option("--out", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kValidation;
  }

  if (!kernel.empty() && !gamowlab::kernels::select(kernel)) {
    std::cerr << "unknown or unsupported kernel set '" << kernel << "'\n";
    return cli::kValidation;
  }

  if (*run) return cli::run(scenario_path, out_dir, std::cout, std::cerr);

  if (*validate) {
    const auto diagnostics = cli::validate(scenario_path);
    for (const auto& d : diagnostics) std::cout << d << "\n";
    if (diagnostics.empty()) {
      std::cout << "ok\n";
      return cli::kOk;
    }
    return cli::kValidation;
  }

  if (*demo) {
    try {
      for (const auto& p : cli::write_demo(out_dir)) std::cout << p.string() << "\n";
    } catch (const std::exception& e) {
      std::cerr << "runtime: " << e.what() << "\n";
      return cli::kRuntime;
    }
  }
  return cli::kOk;
}
