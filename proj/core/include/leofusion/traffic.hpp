#ifndef LEOFUSION_TRAFFIC_HPP
#define LEOFUSION_TRAFFIC_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "leofusion/orbital.hpp"

namespace leofusion {

// Per-zone connection index eta, the traffic weight of each zone.
struct ZoneIndexMap {
  ZoneGrid grid;
  std::map<ZoneId, double> eta;

  double total() const;
};

struct Subtask {
  double flop_g = 0.0;    // computational requirement, GFLO
  double volume_gb = 0.0; // raw data volume, GB
};

struct Task {
  long id = 0;
  ZoneId source_zone;
  ZoneId dest_zone;
  int num_subtasks = 0;
  double gen_time_s = 0.0;
  double threshold_s = 0.0;
  std::vector<Subtask> subtasks;
};

// Homogeneous per-run subtask template.
struct TaskTemplate {
  int num_subtasks = 2;
  double flop_g = 100.0;
  double volume_gb = 0.1;
  double threshold_s = 300.0;
};

enum class DestSampler { eta_weighted, same_zone };

// CSV with header `row,col,eta`, one line per zone, all zones exactly once.
ZoneIndexMap load_connection_index(const std::string& path,
                                   const ZoneGrid& grid = ZoneGrid::standard());
ZoneIndexMap load_connection_index(std::istream& in, const ZoneGrid& grid,
                                   const std::string& name);

enum class SynthKind { uniform, hotspots };

struct HotspotParams {
  int zones = 4;          // k hotspot zones
  double mass = 0.8;      // fraction of total eta mass they carry
};

ZoneIndexMap synth_connection_index(SynthKind kind, const HotspotParams& params,
                                    std::uint64_t seed,
                                    const ZoneGrid& grid = ZoneGrid::standard());

// lambda_i = load * eta_i / sum(eta)
std::map<ZoneId, double> arrival_rates(double load_tasks_per_s,
                                       const ZoneIndexMap& eta);

std::vector<Task> generate_tasks(const std::map<ZoneId, double>& rates,
                                 double duration_s, std::uint64_t seed,
                                 const TaskTemplate& tmpl,
                                 DestSampler dest_sampler,
                                 const ZoneIndexMap& eta);

}  // namespace leofusion

#endif  // LEOFUSION_TRAFFIC_HPP
