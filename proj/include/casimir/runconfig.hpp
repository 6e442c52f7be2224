#ifndef CASIMIR_RUNCONFIG_HPP
#define CASIMIR_RUNCONFIG_HPP

#include <string>
#include <vector>

#include "casimir/scenarios.hpp"

namespace casimir {

/// A configuration file failed validation (maps to CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fully validated run description parsed from a JSON config document.
struct RunConfig {
  std::string scenario;  // stress | force | sweep | asymptote | verify

  double slab_plasma_eV = 9.0;  // gold default
  SweepSpec sweep;              // carries materials/geometry template + quad
  double z = 0.0;               // slab position for single-point runs
  bool contact = true;          // d1 = d2 = 0
  bool explicit_gaps = false;   // d1/d2 given directly (as multiples of d_s)
  double d1_over_ds = 0.0;
  double d2_over_ds = 0.0;

  // One output file per secondary value: mirror contrasts for thickness
  // sweeps, cavity widths for position sweeps.
  std::vector<double> secondary;

  std::string output_path = "casimir_out.csv";
  std::uint64_t verify_seed = 1;
  int verify_cases = 20;
  int verify_points = 1000;
  int verify_nodes = 2000;
};

RunConfig parse_config(const std::string& json_text);

/// Builds the concrete cavity for a single-point (stress/force) run.
CavityConfig single_point_config(const RunConfig& config);

struct RunOutcome {
  int exit_status = 0;  // 0 ok, 2 validation error, 3 unconverged points
  std::vector<std::string> files_written;
  std::string report;  // human-readable summary (asymptote/verify output)
};

/// Executes the run and writes CSV output.  Deterministic: identical config
/// and version give byte-identical files.
RunOutcome run(const RunConfig& config);

/// CSV emission for one curve; exposed for tests.
void write_csv(const std::string& path, const std::string& abscissa_name,
               const std::vector<SweepRow>& rows);

}  // namespace casimir

#endif  // CASIMIR_RUNCONFIG_HPP
