#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "radwave/error.hpp"
#include "radwave/lab.hpp"

using namespace radwave;

int main(int argc, char** argv) {
  CLI::App app{"Radial damped wave laboratory"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  bool quiet = false;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "configuration file")->required();
    sub->add_option("--out", out_dir, "output directory (overrides [output] dir)");
    sub->add_flag("--quiet", quiet, "suppress console output");
  };

  auto* run_cmd = app.add_subcommand("run", "evolve one configuration, write monitors.csv and summary.json");
  common(run_cmd);

  int levels = 3;
  auto* conv_cmd = app.add_subcommand("converge", "refinement study, writes converge.csv");
  common(conv_cmd);
  conv_cmd->add_option("--levels", levels, "number of refinement levels (>= 3)");

  std::string axis = "p";
  std::vector<double> values;
  auto* sweep_cmd = app.add_subcommand("sweep", "independent runs over one parameter, writes sweep.csv");
  common(sweep_cmd);
  sweep_cmd->add_option("--axis", axis, "p | amplitude | n")->check(CLI::IsMember({"p", "amplitude", "n"}));
  sweep_cmd->add_option("--values", values, "axis values")->required()->delimiter(',');

  std::vector<double> lambdas{0.5, 2.0};
  std::vector<int> ks{1, 2, 3};
  auto* scaling_cmd = app.add_subcommand("scaling", "scaling law table, writes scaling.csv");
  common(scaling_cmd);
  scaling_cmd->add_option("--lambdas", lambdas, "scale factors")->delimiter(',');
  scaling_cmd->add_option("--ks", ks, "seminorm orders (1, 2 or 3)")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::Validation);
  }

  try {
    const RunConfig cfg = load_config(config_path);
    const std::string dir = out_dir.empty() ? cfg.out_dir : out_dir;
    ExitCode code = ExitCode::Ok;
    if (*run_cmd) code = cmd_run(cfg, dir, quiet, std::cout);
    else if (*conv_cmd) code = cmd_converge(cfg, levels, dir, quiet, std::cout);
    else if (*sweep_cmd) code = cmd_sweep(cfg, sweep_axis_from_string(axis), values, dir, quiet, std::cout);
    else code = cmd_scaling(cfg, lambdas, ks, dir, quiet, std::cout);
    return static_cast<int>(code);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Io);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Validation);
  } catch (const BlowUpDetected& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::BlowUp);
  } catch (const StiffnessCollapse& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Stiffness);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Validation);
  }
}
