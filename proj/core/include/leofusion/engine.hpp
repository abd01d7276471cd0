#ifndef LEOFUSION_ENGINE_HPP
#define LEOFUSION_ENGINE_HPP

#include <string>
#include <vector>

#include "leofusion/config.hpp"
#include "leofusion/metagraph.hpp"

namespace leofusion {

struct PathResult {
  bool found = false;
  std::vector<int> nodes;  // empty path for from == to is just {from}
  double length_s = 0.0;
};

// Label-setting search; equal-length ties resolved toward the
// lexicographically smallest node-id sequence.
PathResult shortest_path(const WeightedMetagraph& wg, int from, int to);

enum class PathClass { ground, visible_satellite, invisible_satellite };

const char* path_class_name(PathClass c);

struct ClassifiedPath {
  PathClass cls = PathClass::ground;
  ZoneId compute_zone;       // virtual-edge zone, or the destination zone
  bool computed_on_ground = true;
};

ClassifiedPath classify_path(const Metagraph& graph,
                             const std::vector<int>& path_nodes,
                             ZoneId dest_zone);

// Per-component slices of one subtask's overall delay.
struct DelayParts {
  double sgl_trans_s = 0.0;
  double isl_trans_s = 0.0;
  double prop_s = 0.0;
  double comp_s = 0.0;
  double wait_s = 0.0;
  double total() const {
    return sgl_trans_s + isl_trans_s + prop_s + comp_s + wait_s;
  }
};

struct SubtaskDecision {
  int subtask_index = 0;
  std::vector<int> path_nodes;
  double length_s = 0.0;
  PathClass classification = PathClass::ground;
  ZoneId compute_zone;
  bool computed_on_ground = false;
  DelayParts parts;
};

struct TaskRecord {
  long task_id = 0;
  ZoneId source_zone;
  ZoneId dest_zone;
  double gen_time_s = 0.0;
  double delay_s = 0.0;  // threshold on failure
  bool success = false;
  std::string failure_reason;
  std::vector<SubtaskDecision> decisions;  // rolled back (empty) on failure
};

struct SimulationResult {
  ScenarioConfig config;
  std::uint64_t seed = 0;
  std::vector<TaskRecord> tasks;
};

struct OffloadParams {
  ConstellationSpec spec;
  double source_altitude_m = 600e3;
  double result_volume_bits = 1e6;
  bool literal_raw_computed_tier = false;
};

// One task through Algorithm-style processing: per subtask build the
// scheme metagraph, weight it against the live ledger, search, check the
// threshold, and commit the path's reservations. All-or-nothing: a failed
// subtask rolls its siblings back and the task scores the threshold.
TaskRecord offload_task(const Task& task, Scheme scheme,
                        const Snapshot& snapshot, ResourceLedger& ledger,
                        const OffloadParams& params);

SimulationResult run_simulation(const ScenarioConfig& config,
                                std::uint64_t seed);

}  // namespace leofusion

#endif  // LEOFUSION_ENGINE_HPP
