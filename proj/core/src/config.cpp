#include "leofusion/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "leofusion/rng.hpp"

namespace leofusion {

ConstellationSpec ScenarioConfig::constellation() const {
  ConstellationSpec spec;
  spec.num_orbits = num_orbits;
  spec.sats_per_orbit = sats_per_orbit;
  spec.altitude_m = altitude_km * 1e3;
  spec.inclination_deg = inclination_deg;
  spec.polar_mask_deg = polar_mask_deg;
  spec.elevation_min_deg = elevation_min_deg;
  spec.source_max_range_m = source_max_range_km * 1e3;
  return spec;
}

ResourceLedger::Rates ScenarioConfig::rates() const {
  ResourceLedger::Rates r;
  r.compute_gflops = sat_gflops;
  r.isl_bps = isl_gbps * 1e9;
  r.sgl_bps = sgl_gbps * 1e9;
  r.uplink_bps = effective_uplink_gbps() * 1e9;
  return r;
}

void ScenarioConfig::validate() const {
  auto positive = [](double v, const char* key) {
    if (!(v > 0)) throw ConfigError(std::string(key) + " must be > 0");
  };
  if (num_orbits < 1) throw ConfigError("num_orbits must be >= 1");
  if (sats_per_orbit < 1) throw ConfigError("sats_per_orbit must be >= 1");
  positive(altitude_km, "altitude_km");
  positive(sat_gflops, "sat_gflops");
  positive(sgl_gbps, "sgl_gbps");
  positive(isl_gbps, "isl_gbps");
  if (uplink_gbps) positive(*uplink_gbps, "uplink_gbps");
  if (channels_per_isl != 1)
    throw ConfigError("channels_per_isl must be 1 (exclusive reservations)");
  if (load < 0) throw ConfigError("load must be >= 0");
  positive(duration_s, "duration_s");
  if (subtasks_per_task < 1)
    throw ConfigError("subtasks_per_task must be >= 1");
  positive(subtask_gflo, "subtask_gflo");
  positive(subtask_gb, "subtask_gb");
  positive(threshold_s, "threshold_s");
  positive(result_volume_bits, "result_volume_bits");
  positive(source_altitude_km, "source_altitude_km");
  positive(source_max_range_km, "source_max_range_km");
  if (polar_mask_deg < 0 || polar_mask_deg > 90)
    throw ConfigError("polar_mask_deg must be in [0, 90]");
  if (elevation_min_deg < 0 || elevation_min_deg > 90)
    throw ConfigError("elevation_min_deg must be in [0, 90]");
  if (eta_source == EtaSource::file && eta_file.empty())
    throw ConfigError("eta=file requires a path");
  if (hotspot_zones < 1) throw ConfigError("hotspot_zones must be >= 1");
  if (hotspot_mass <= 0 || hotspot_mass >= 1)
    throw ConfigError("hotspot_mass must be in (0, 1)");
}

Scheme parse_scheme(const std::string& name) {
  if (name == "fusion") return Scheme::fusion;
  if (name == "ground") return Scheme::ground;
  if (name == "visible") return Scheme::visible;
  throw ConfigError("unknown scheme `" + name + "`");
}

namespace {

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": non-numeric value `" + value + "`");
  }
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": non-numeric value `" + value + "`");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError(key + ": expected true/false, got `" + value + "`");
}

}  // namespace

void apply_config_entry(ScenarioConfig& c, const std::string& key,
                        const std::string& value) {
  using Setter = std::function<void(ScenarioConfig&, const std::string&)>;
  static const std::map<std::string, Setter> setters = {
      {"num_orbits", [](ScenarioConfig& c, const std::string& v) { c.num_orbits = parse_int("num_orbits", v); }},
      {"sats_per_orbit", [](ScenarioConfig& c, const std::string& v) { c.sats_per_orbit = parse_int("sats_per_orbit", v); }},
      {"altitude_km", [](ScenarioConfig& c, const std::string& v) { c.altitude_km = parse_double("altitude_km", v); }},
      {"inclination_deg", [](ScenarioConfig& c, const std::string& v) { c.inclination_deg = parse_double("inclination_deg", v); }},
      {"polar_mask_deg", [](ScenarioConfig& c, const std::string& v) { c.polar_mask_deg = parse_double("polar_mask_deg", v); }},
      {"elevation_min_deg", [](ScenarioConfig& c, const std::string& v) { c.elevation_min_deg = parse_double("elevation_min_deg", v); }},
      {"source_altitude_km", [](ScenarioConfig& c, const std::string& v) { c.source_altitude_km = parse_double("source_altitude_km", v); }},
      {"source_max_range_km", [](ScenarioConfig& c, const std::string& v) { c.source_max_range_km = parse_double("source_max_range_km", v); }},
      {"sat_gflops", [](ScenarioConfig& c, const std::string& v) { c.sat_gflops = parse_double("sat_gflops", v); }},
      {"sgl_gbps", [](ScenarioConfig& c, const std::string& v) { c.sgl_gbps = parse_double("sgl_gbps", v); }},
      {"isl_gbps", [](ScenarioConfig& c, const std::string& v) { c.isl_gbps = parse_double("isl_gbps", v); }},
      {"uplink_gbps", [](ScenarioConfig& c, const std::string& v) { c.uplink_gbps = parse_double("uplink_gbps", v); }},
      {"channels_per_isl", [](ScenarioConfig& c, const std::string& v) { c.channels_per_isl = parse_int("channels_per_isl", v); }},
      {"load", [](ScenarioConfig& c, const std::string& v) { c.load = parse_double("load", v); }},
      {"duration_s", [](ScenarioConfig& c, const std::string& v) { c.duration_s = parse_double("duration_s", v); }},
      {"subtasks_per_task", [](ScenarioConfig& c, const std::string& v) { c.subtasks_per_task = parse_int("subtasks_per_task", v); }},
      {"subtask_gflo", [](ScenarioConfig& c, const std::string& v) { c.subtask_gflo = parse_double("subtask_gflo", v); }},
      {"subtask_gb", [](ScenarioConfig& c, const std::string& v) { c.subtask_gb = parse_double("subtask_gb", v); }},
      {"threshold_s", [](ScenarioConfig& c, const std::string& v) { c.threshold_s = parse_double("threshold_s", v); }},
      {"scheme", [](ScenarioConfig& c, const std::string& v) { c.scheme = parse_scheme(v); }},
      {"seed", [](ScenarioConfig& c, const std::string& v) {
         try {
           c.seed = std::stoull(v);
         } catch (const std::exception&) {
           throw ConfigError("seed: non-numeric value `" + v + "`");
         }
       }},
      {"result_volume_bits", [](ScenarioConfig& c, const std::string& v) { c.result_volume_bits = parse_double("result_volume_bits", v); }},
      {"literal_step16", [](ScenarioConfig& c, const std::string& v) { c.literal_step16 = parse_bool("literal_step16", v); }},
      {"eta", [](ScenarioConfig& c, const std::string& v) { apply_eta_flag(c, v); }},
      {"hotspot_zones", [](ScenarioConfig& c, const std::string& v) { c.hotspot_zones = parse_int("hotspot_zones", v); }},
      {"hotspot_mass", [](ScenarioConfig& c, const std::string& v) { c.hotspot_mass = parse_double("hotspot_mass", v); }},
      {"dest_sampler", [](ScenarioConfig& c, const std::string& v) {
         if (v == "eta") c.dest_sampler = DestSampler::eta_weighted;
         else if (v == "same_zone") c.dest_sampler = DestSampler::same_zone;
         else throw ConfigError("dest_sampler: expected eta or same_zone, got `" + v + "`");
       }},
  };
  auto it = setters.find(key);
  if (it == setters.end()) throw ConfigError("unknown config key `" + key + "`");
  it->second(c, value);
}

void apply_eta_flag(ScenarioConfig& config, const std::string& flag) {
  if (flag == "uniform") {
    config.eta_source = EtaSource::uniform;
    config.eta_file.clear();
  } else if (flag == "hotspots") {
    config.eta_source = EtaSource::hotspots;
    config.eta_file.clear();
  } else if (flag.rfind("file:", 0) == 0) {
    config.eta_source = EtaSource::file;
    config.eta_file = flag.substr(5);
    if (config.eta_file.empty()) throw ConfigError("eta=file: missing path");
  } else {
    throw ConfigError("eta: expected uniform, hotspots or file:PATH, got `" +
                      flag + "`");
  }
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  ScenarioConfig config;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t");
    line = line.substr(first, last - first + 1);

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected key=value");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    const auto kend = key.find_last_not_of(" \t");
    key = key.substr(0, kend == std::string::npos ? 0 : kend + 1);
    const auto vstart = value.find_first_not_of(" \t");
    value = vstart == std::string::npos ? "" : value.substr(vstart);
    apply_config_entry(config, key, value);
  }
  return config;
}

ScenarioConfig parse_config(const std::string& file_path,
                            const std::vector<std::string>& overrides) {
  ScenarioConfig config =
      file_path.empty() ? ScenarioConfig{} : load_config_file(file_path);
  for (const std::string& entry : overrides) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos)
      throw ConfigError("override must be key=value, got `" + entry + "`");
    apply_config_entry(config, entry.substr(0, eq), entry.substr(eq + 1));
  }
  config.validate();
  return config;
}

ZoneIndexMap make_eta(const ScenarioConfig& config, const ZoneGrid& grid) {
  switch (config.eta_source) {
    case EtaSource::uniform:
      return synth_connection_index(SynthKind::uniform, {}, config.seed, grid);
    case EtaSource::hotspots:
      return synth_connection_index(
          SynthKind::hotspots,
          HotspotParams{config.hotspot_zones, config.hotspot_mass},
          derive_seed(config.seed, 0xE7A), grid);
    case EtaSource::file:
      return load_connection_index(config.eta_file, grid);
  }
  throw ConfigError("unknown eta source");
}

}  // namespace leofusion
