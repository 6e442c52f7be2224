#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "casimir/runconfig.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw casimir::ConfigError("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int execute(casimir::RunConfig config) {
  const casimir::RunOutcome outcome = casimir::run(config);
  if (!outcome.report.empty()) std::cout << outcome.report;
  for (const std::string& f : outcome.files_written)
    std::cout << "wrote " << f << "\n";
  return outcome.exit_status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vacuum-field stress and force calculator for a metal slab "
               "in a planar cavity"};
  app.require_subcommand(0, 1);
  app.fallthrough();  // let global options appear after the subcommand

  std::string config_path;
  std::string out_path;
  double rel_tol = 0.0;
  int threads = 0;
  bool verify_flag = false;
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--out", out_path, "output CSV path (overrides config)");
  app.add_option("--rel-tol", rel_tol, "quadrature relative tolerance");
  app.add_option("--threads", threads,
                 "sweep worker threads (env CASIMIR_THREADS as fallback)");
  app.add_flag("--verify", verify_flag, "run oracle cross-checks and exit");

  double kP_ds = 0.1;
  double plasma_eV = 9.0;
  CLI::App* stress = app.add_subcommand("stress", "stress in the slab");
  CLI::App* force = app.add_subcommand("force", "net force on the slab");
  CLI::App* sweep = app.add_subcommand("sweep", "figure sweep to CSV");
  CLI::App* asym =
      app.add_subcommand("asymptote", "closed-form asymptotic values");
  asym->add_option("--kP-ds", kP_ds, "dimensionless slab thickness");
  asym->add_option("--plasma-eV", plasma_eV, "slab plasma energy in eV");
  CLI::App* verify = app.add_subcommand("verify", "oracle cross-checks");

  CLI11_PARSE(app, argc, argv);

  try {
    casimir::RunConfig config;
    if (!config_path.empty()) {
      config = casimir::parse_config(slurp(config_path));
    } else if (asym->parsed()) {
      config.scenario = "asymptote";
      config.sweep.kP_ds = kP_ds;
      config.slab_plasma_eV = plasma_eV;
      config.sweep.slab_plasma_eV = plasma_eV;
    } else if (verify->parsed() || verify_flag) {
      config.scenario = "verify";
    } else {
      std::cerr << "error: --config is required for this scenario\n";
      return 2;
    }

    if (stress->parsed()) config.scenario = "stress";
    if (force->parsed()) config.scenario = "force";
    if (sweep->parsed()) config.scenario = "sweep";
    if (verify->parsed() || verify_flag) config.scenario = "verify";

    if (!out_path.empty()) config.output_path = out_path;
    if (rel_tol > 0.0) {
      if (rel_tol > 1e-2) {
        std::cerr << "error: --rel-tol must be in (0, 1e-2]\n";
        return 2;
      }
      config.sweep.quad.rel_tol = rel_tol;
    }
    if (threads == 0) {
      if (const char* env = std::getenv("CASIMIR_THREADS"))
        threads = std::atoi(env);
    }
    if (threads > 0) config.sweep.threads = threads;

    return execute(std::move(config));
  } catch (const casimir::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
