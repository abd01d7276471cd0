#ifndef LEOFUSION_CONFIG_HPP
#define LEOFUSION_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "leofusion/metagraph.hpp"
#include "leofusion/traffic.hpp"

namespace leofusion {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class EtaSource { uniform, hotspots, file };

// One scenario: constellation, capacities, traffic template, scheme.
// Defaults are the standard simulation parameter set.
struct ScenarioConfig {
  // constellation
  int num_orbits = 8;
  int sats_per_orbit = 16;
  double altitude_km = 500.0;
  double inclination_deg = 90.0;
  double polar_mask_deg = 75.0;
  double elevation_min_deg = 5.0;
  double source_altitude_km = 600.0;
  double source_max_range_km = 2500.0;

  // capacities
  double sat_gflops = 100.0;
  double sgl_gbps = 0.2;
  double isl_gbps = 5.0;
  std::optional<double> uplink_gbps;  // defaults to the ISL rate
  int channels_per_isl = 1;

  // traffic
  double load = 200.0;  // tasks/s network-wide
  double duration_s = 10.0;
  int subtasks_per_task = 2;
  double subtask_gflo = 100.0;
  double subtask_gb = 0.1;
  double threshold_s = 300.0;

  // scenario
  Scheme scheme = Scheme::fusion;
  std::uint64_t seed = 1;
  double result_volume_bits = 1e6;
  bool literal_step16 = false;
  EtaSource eta_source = EtaSource::uniform;
  std::string eta_file;
  int hotspot_zones = 4;
  double hotspot_mass = 0.8;
  DestSampler dest_sampler = DestSampler::eta_weighted;

  double effective_uplink_gbps() const {
    return uplink_gbps ? *uplink_gbps : isl_gbps;
  }

  ConstellationSpec constellation() const;
  ResourceLedger::Rates rates() const;
  void validate() const;  // throws ConfigError
};

// Apply one `key=value` assignment. Unknown keys and malformed values
// throw ConfigError naming the key.
void apply_config_entry(ScenarioConfig& config, const std::string& key,
                        const std::string& value);

// Flat key=value file, `#` comments, blank lines allowed.
ScenarioConfig load_config_file(const std::string& path);

// Defaults, then the optional file, then override pairs in order.
ScenarioConfig parse_config(const std::string& file_path,
                            const std::vector<std::string>& overrides);

Scheme parse_scheme(const std::string& name);  // throws ConfigError

// `uniform`, `hotspots`, or `file:PATH`
void apply_eta_flag(ScenarioConfig& config, const std::string& flag);

ZoneIndexMap make_eta(const ScenarioConfig& config,
                      const ZoneGrid& grid = ZoneGrid::standard());

}  // namespace leofusion

#endif  // LEOFUSION_CONFIG_HPP
