// Command-line front end for the verification harness.
//
//   steklov run --config FILE --out DIR [--parallel]
//   steklov plot-data --reports DIR
//   steklov mu1 --profile JSON|FILE [--steps N]

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "steklov/harness.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Steklov eigenvalue bound checks"};
  app.require_subcommand(1);

  std::string config, out_dir, reports, profile;
  bool parallel = false;
  int steps = steklov::kDefaultRadialSteps;

  auto* run = app.add_subcommand("run", "run every scenario in a config and write reports");
  run->add_option("--config", config, "scenario config (JSON)")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "report directory")->required();
  run->add_flag("--parallel", parallel, "run scenarios concurrently");

  auto* plot = app.add_subcommand("plot-data", "collect sweep rows from a report directory");
  plot->add_option("--reports", reports, "report directory")->required();

  auto* mu1 = app.add_subcommand("mu1", "first Steklov eigenvalue of a rotationally symmetric ball");
  mu1->add_option("--profile", profile, "profile descriptor, inline JSON or a file path")->required();
  mu1->add_option("--steps", steps, "RK4 steps")->check(CLI::Range(100, 100000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run) return steklov::harness::run_scenarios(config, out_dir, parallel);
    if (*plot) {
      std::cout << steklov::harness::emit_plot_data(reports).string() << '\n';
      return 0;
    }
    std::cout << steklov::harness::mu1_command(profile, steps).dump(2) << '\n';
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
