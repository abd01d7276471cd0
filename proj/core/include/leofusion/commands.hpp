#ifndef LEOFUSION_COMMANDS_HPP
#define LEOFUSION_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "leofusion/metrics.hpp"
#include "leofusion/oracle.hpp"

namespace leofusion {

// Stable per-task CSV. Component columns describe the critical (slowest)
// subtask so they sum to delay_s; failed tasks carry classification
// `none` and zero components.
std::string serialize_tasks_csv(const SimulationResult& result);

// `tasks=N wad_s=... success_rate=...`, or just `tasks=0`.
std::string summary_line(const SimulationResult& result);

struct RunOutput {
  SimulationResult result;
  std::string tasks_csv_path;
  std::string summary;
};

// Simulate and write <out_dir>/tasks.csv plus <out_dir>/summary.txt.
RunOutput run_command(const ScenarioConfig& config, const std::string& out_dir);

struct SweepRow {
  Scheme scheme = Scheme::fusion;
  std::string param;
  double value = 0.0;
  std::uint64_t seed = 0;
  double wad_s = 0.0;
  double success_rate = 0.0;
};

struct SweepRequest {
  ScenarioConfig base;
  std::string param;            // load | sat_gflops | sgl_gbps | subtask_gflo | subtask_gb
  std::vector<double> values;
  std::vector<Scheme> schemes;
  std::vector<std::uint64_t> seeds;
};

std::vector<SweepRow> sweep_command(const SweepRequest& request);

std::string serialize_sweep_csv(const std::vector<SweepRow>& rows);

// Sets `param` on a config copy; throws ConfigError for unknown params.
ScenarioConfig apply_sweep_param(const ScenarioConfig& base,
                                 const std::string& param, double value);

struct ValidateOutput {
  SuiteSummary dominance;
  SuiteSummary shortest_path;
  std::string report_lines;  // `instance_id,ok` per line, both suites
  bool ok = false;
};

ValidateOutput validate_command(int dominance_instances, int sp_graphs,
                                std::uint64_t seed);

}  // namespace leofusion

#endif  // LEOFUSION_COMMANDS_HPP
