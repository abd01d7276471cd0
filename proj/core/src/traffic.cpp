#include "leofusion/traffic.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "leofusion/rng.hpp"

namespace leofusion {

double ZoneIndexMap::total() const {
  double sum = 0.0;
  for (const auto& [z, v] : eta) sum += v;
  return sum;
}

ZoneIndexMap load_connection_index(const std::string& path,
                                   const ZoneGrid& grid) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open connection index file: " + path);
  return load_connection_index(in, grid, path);
}

ZoneIndexMap load_connection_index(std::istream& in, const ZoneGrid& grid,
                                   const std::string& name) {
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error(name + ": empty connection index file");
  // tolerate trailing CR from foreign editors
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "row,col,eta")
    throw std::runtime_error(name + ": expected header `row,col,eta`, got `" +
                             line + "`");

  ZoneIndexMap map;
  map.grid = grid;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string f0, f1, f2;
    if (!std::getline(ls, f0, ',') || !std::getline(ls, f1, ',') ||
        !std::getline(ls, f2))
      throw std::runtime_error(name + ":" + std::to_string(lineno) +
                               ": malformed row");
    ZoneId z;
    double eta;
    try {
      z.row = std::stoi(f0);
      z.col = std::stoi(f1);
      eta = std::stod(f2);
    } catch (const std::exception&) {
      throw std::runtime_error(name + ":" + std::to_string(lineno) +
                               ": non-numeric field");
    }
    if (!grid.contains(z))
      throw std::runtime_error(name + ":" + std::to_string(lineno) +
                               ": zone out of range");
    if (eta < 0)
      throw std::runtime_error(name + ":" + std::to_string(lineno) +
                               ": negative eta");
    if (!map.eta.emplace(z, eta).second)
      throw std::runtime_error(name + ":" + std::to_string(lineno) +
                               ": duplicate zone (" + f0 + "," + f1 + ")");
  }
  if (static_cast<int>(map.eta.size()) != grid.zone_count())
    throw std::runtime_error(name + ": missing zone: expected " +
                             std::to_string(grid.zone_count()) + " rows, got " +
                             std::to_string(map.eta.size()));
  if (map.total() <= 0)
    throw std::runtime_error(name + ": connection index sums to zero");
  return map;
}

ZoneIndexMap synth_connection_index(SynthKind kind, const HotspotParams& params,
                                    std::uint64_t seed, const ZoneGrid& grid) {
  ZoneIndexMap map;
  map.grid = grid;

  if (kind == SynthKind::uniform) {
    for (ZoneId z : grid.zones()) map.eta.emplace(z, 1.0);
    return map;
  }

  const int n = grid.zone_count();
  if (params.mass <= 0.0 || params.mass >= 1.0)
    throw std::runtime_error("hotspot mass fraction must be in (0, 1)");
  if (params.zones < 1 || params.zones >= n)
    throw std::runtime_error("hotspot zone count must be in [1, zones)");

  // draw k distinct zones
  Rng rng(derive_seed(seed, 0x407));
  std::vector<int> indices(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) indices[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < params.zones; ++i) {
    const int j =
        i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - i)));
    std::swap(indices[static_cast<std::size_t>(i)],
              indices[static_cast<std::size_t>(j)]);
  }

  const double hot = params.mass / params.zones;
  const double cold = (1.0 - params.mass) / (n - params.zones);
  for (ZoneId z : grid.zones()) map.eta.emplace(z, cold);
  for (int i = 0; i < params.zones; ++i)
    map.eta[grid.zone_at(indices[static_cast<std::size_t>(i)])] = hot;
  return map;
}

std::map<ZoneId, double> arrival_rates(double load_tasks_per_s,
                                       const ZoneIndexMap& eta) {
  if (load_tasks_per_s < 0)
    throw std::runtime_error("network load must be >= 0");
  const double total = eta.total();
  if (total <= 0) throw std::runtime_error("connection index sums to zero");
  std::map<ZoneId, double> rates;
  for (const auto& [z, v] : eta.eta)
    rates.emplace(z, load_tasks_per_s * v / total);
  return rates;
}

std::vector<Task> generate_tasks(const std::map<ZoneId, double>& rates,
                                 double duration_s, std::uint64_t seed,
                                 const TaskTemplate& tmpl,
                                 DestSampler dest_sampler,
                                 const ZoneIndexMap& eta) {
  if (duration_s <= 0) throw std::runtime_error("duration must be > 0");

  // cumulative eta for destination draws
  std::vector<ZoneId> zones;
  std::vector<double> weights;
  zones.reserve(eta.eta.size());
  for (const auto& [z, v] : eta.eta) {
    zones.push_back(z);
    weights.push_back(v);
  }

  auto draw_dest = [&](ZoneId source, Rng& rng) -> ZoneId {
    if (dest_sampler == DestSampler::same_zone) return source;
    double total = 0.0;
    for (std::size_t i = 0; i < zones.size(); ++i)
      if (!(zones[i] == source)) total += weights[i];
    if (total > 0.0) {
      double x = rng.next_double() * total;
      for (std::size_t i = 0; i < zones.size(); ++i) {
        if (zones[i] == source) continue;
        x -= weights[i];
        if (x < 0.0) return zones[i];
      }
    } else {
      // all mass sits on the source zone; fall back to a uniform draw
      const std::size_t pick = rng.next_below(zones.size() - 1);
      std::size_t seen = 0;
      for (std::size_t i = 0; i < zones.size(); ++i) {
        if (zones[i] == source) continue;
        if (seen++ == pick) return zones[i];
      }
    }
    // numeric edge: last non-source zone
    for (std::size_t i = zones.size(); i-- > 0;)
      if (!(zones[i] == source)) return zones[i];
    return source;
  };

  struct Event {
    double t;
    ZoneId src;
    ZoneId dst;
  };
  std::vector<Event> events;

  const ZoneGrid& grid = eta.grid;
  for (const auto& [z, rate] : rates) {
    if (rate <= 0) continue;
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(grid.index_of(z)) + 1));
    double t = rng.exponential(rate);
    while (t < duration_s) {
      events.push_back(Event{t, z, draw_dest(z, rng)});
      t += rng.exponential(rate);
    }
  }

  std::sort(events.begin(), events.end(), [&](const Event& a, const Event& b) {
    if (a.t != b.t) return a.t < b.t;
    return a.src < b.src;
  });

  std::vector<Task> tasks;
  tasks.reserve(events.size());
  long id = 0;
  for (const Event& e : events) {
    Task task;
    task.id = id++;
    task.source_zone = e.src;
    task.dest_zone = e.dst;
    task.num_subtasks = tmpl.num_subtasks;
    task.gen_time_s = e.t;
    task.threshold_s = tmpl.threshold_s;
    task.subtasks.assign(static_cast<std::size_t>(tmpl.num_subtasks),
                         Subtask{tmpl.flop_g, tmpl.volume_gb});
    tasks.push_back(std::move(task));
  }
  return tasks;
}

}  // namespace leofusion
