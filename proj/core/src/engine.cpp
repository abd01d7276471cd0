#include "leofusion/engine.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace leofusion {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

PathResult shortest_path(const WeightedMetagraph& wg, int from, int to) {
  const Metagraph& g = *wg.graph;
  const int n = static_cast<int>(g.nodes.size());
  if (from < 0 || from >= n || to < 0 || to >= n)
    throw std::invalid_argument("shortest_path: node out of range");

  if (from == to) return PathResult{true, {from}, 0.0};

  // Distances to the target over reversed edges. Relaxation and the path
  // walk below evaluate `weight + dist[head]` identically, so equality
  // comparisons are exact.
  std::vector<double> dist(static_cast<std::size_t>(n), kInf);
  dist[static_cast<std::size_t>(to)] = 0.0;
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.emplace(0.0, to);
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  while (!heap.empty()) {
    const auto [d, y] = heap.top();
    heap.pop();
    if (done[static_cast<std::size_t>(y)]) continue;
    done[static_cast<std::size_t>(y)] = 1;
    for (int ei : g.in_edges[static_cast<std::size_t>(y)]) {
      const MetaEdge& e = g.edges[static_cast<std::size_t>(ei)];
      const double cand = wg.weights[static_cast<std::size_t>(ei)].total_s +
                          dist[static_cast<std::size_t>(y)];
      if (cand < dist[static_cast<std::size_t>(e.from)]) {
        dist[static_cast<std::size_t>(e.from)] = cand;
        heap.emplace(cand, e.from);
      }
    }
  }

  if (dist[static_cast<std::size_t>(from)] == kInf) return PathResult{};

  PathResult result;
  result.found = true;
  result.length_s = dist[static_cast<std::size_t>(from)];
  result.nodes.push_back(from);
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  visited[static_cast<std::size_t>(from)] = 1;
  int x = from;
  int steps = 0;
  while (x != to) {
    if (++steps > n)
      throw std::logic_error("shortest_path: zero-weight cycle in tie walk");
    int best = -1;
    for (int ei : g.out_edges[static_cast<std::size_t>(x)]) {
      const MetaEdge& e = g.edges[static_cast<std::size_t>(ei)];
      if (visited[static_cast<std::size_t>(e.to)]) continue;
      const double via = wg.weights[static_cast<std::size_t>(ei)].total_s +
                         dist[static_cast<std::size_t>(e.to)];
      if (via == dist[static_cast<std::size_t>(x)] &&
          (best == -1 || e.to < best))
        best = e.to;
    }
    if (best == -1)
      throw std::logic_error("shortest_path: tie walk lost the path");
    result.nodes.push_back(best);
    visited[static_cast<std::size_t>(best)] = 1;
    x = best;
  }
  return result;
}

const char* path_class_name(PathClass c) {
  switch (c) {
    case PathClass::ground: return "Ground";
    case PathClass::visible_satellite: return "VisibleSatellite";
    case PathClass::invisible_satellite: return "InvisibleSatellite";
  }
  return "?";
}

ClassifiedPath classify_path(const Metagraph& graph,
                             const std::vector<int>& path_nodes,
                             ZoneId dest_zone) {
  for (std::size_t i = 0; i + 1 < path_nodes.size(); ++i) {
    const MetaNode& a = graph.nodes[static_cast<std::size_t>(path_nodes[i])];
    const MetaNode& b = graph.nodes[static_cast<std::size_t>(path_nodes[i + 1])];
    if (a.kind == NodeKind::vn && b.kind == NodeKind::vn && a.zone == b.zone &&
        a.tier == Tier::uncomputed && b.tier == Tier::computed) {
      const bool vis = graph.u_visible.count(a.zone) > 0;
      return ClassifiedPath{vis ? PathClass::visible_satellite
                                : PathClass::invisible_satellite,
                            a.zone, false};
    }
  }
  return ClassifiedPath{PathClass::ground, dest_zone, true};
}

namespace {

// Find the weighted-graph edge for a path step. Parallel edges between a
// node pair do not occur in built metagraphs.
int edge_between(const Metagraph& g, int from, int to) {
  for (int ei : g.out_edges[static_cast<std::size_t>(from)])
    if (g.edges[static_cast<std::size_t>(ei)].to == to) return ei;
  throw std::logic_error("path step without an edge");
}

}  // namespace

TaskRecord offload_task(const Task& task, Scheme scheme,
                        const Snapshot& snapshot, ResourceLedger& ledger,
                        const OffloadParams& params) {
  TaskRecord record;
  record.task_id = task.id;
  record.source_zone = task.source_zone;
  record.dest_zone = task.dest_zone;
  record.gen_time_s = task.gen_time_s;

  std::vector<Reservation> committed;
  auto fail = [&](const std::string& why) {
    for (auto it = committed.rbegin(); it != committed.rend(); ++it)
      ledger.release(*it);
    record.success = false;
    record.failure_reason = why;
    record.delay_s = task.threshold_s;
    record.decisions.clear();
    return record;
  };

  const GeoPoint source_center = snapshot.grid.center(task.source_zone);
  const GeoPoint source_pos{source_center.latitude_deg,
                            source_center.longitude_deg,
                            params.source_altitude_m};
  const GeoPoint dest_pos = snapshot.grid.center(task.dest_zone);

  const std::set<ZoneId> u_vis = visible_nodes(source_pos, snapshot, params.spec);
  const std::set<ZoneId> v_vis = visible_nodes(dest_pos, snapshot, params.spec);
  if (u_vis.empty()) return fail("source sees no VN");
  if (v_vis.empty()) return fail("destination sees no VN");

  for (ZoneId z : u_vis) ledger.ensure_uplink(task.source_zone, z, task.id);
  for (ZoneId z : v_vis) ledger.ensure_sgl(z, task.dest_zone, task.id);

  const auto graph = std::make_shared<const Metagraph>(
      build_scheme(scheme, snapshot, u_vis, v_vis));

  WeightParams wp;
  wp.snapshot = &snapshot;
  wp.source_pos = source_pos;
  wp.dest_pos = dest_pos;
  wp.source_zone = task.source_zone;
  wp.dest_zone = task.dest_zone;
  wp.task_scope = task.id;
  wp.result_volume_bits = params.result_volume_bits;
  wp.literal_raw_computed_tier = params.literal_raw_computed_tier;
  wp.light_speed_m_s = params.spec.light_speed_m_s;
  wp.earth_radius_m = params.spec.earth_radius_m;

  const double t = task.gen_time_s;
  double max_length = 0.0;

  for (std::size_t l = 0; l < task.subtasks.size(); ++l) {
    const Subtask& subtask = task.subtasks[l];
    const WeightedMetagraph wg = assign_weights(graph, subtask, ledger, t, wp);
    const PathResult sp =
        shortest_path(wg, graph->source_node(), graph->dest_node());
    if (!sp.found) return fail("no offloading path");
    if (sp.length_s > task.threshold_s) return fail("threshold exceeded");

    SubtaskDecision decision;
    decision.subtask_index = static_cast<int>(l);
    decision.path_nodes = sp.nodes;
    decision.length_s = sp.length_s;
    const ClassifiedPath cls = classify_path(*graph, sp.nodes, task.dest_zone);
    decision.classification = cls.cls;
    decision.compute_zone = cls.compute_zone;
    decision.computed_on_ground = cls.computed_on_ground;

    // Components come from the decision-time weights so they sum to the
    // recorded length; the reservation is re-solved against the live
    // ledger, which only shifts it when the path reuses a resource.
    for (std::size_t i = 0; i + 1 < sp.nodes.size(); ++i) {
      const int ei = edge_between(*graph, sp.nodes[i], sp.nodes[i + 1]);
      const MetaEdge& e = graph->edges[static_cast<std::size_t>(ei)];
      const EdgeWeight& w = wg.weights[static_cast<std::size_t>(ei)];
      switch (e.kind) {
        case EdgeKind::virtual_compute:
          decision.parts.comp_s += w.service_s;
          break;
        case EdgeKind::dest_downlink:
          decision.parts.sgl_trans_s += w.service_s;
          break;
        case EdgeKind::intra_tier:
        case EdgeKind::source_uplink:
          decision.parts.isl_trans_s += w.service_s;
          break;
      }
      decision.parts.wait_s += w.wait_s;
      decision.parts.prop_s += w.prop_s;

      if (edge_carries_results(*graph, e, wp)) continue;  // nothing to reserve
      const ResourceKey key = edge_resource(*graph, e, wp);
      const double demand = edge_demand(*graph, e, subtask, wp);
      const DelayQuote q = e.kind == EdgeKind::virtual_compute
                               ? computation_delay(ledger, key.a, demand, t,
                                                   task.id)
                               : transmission_delay(ledger, key, demand, t,
                                                    task.id);
      ledger.commit(q.reservation);
      committed.push_back(q.reservation);
    }

    record.decisions.push_back(std::move(decision));
    max_length = std::max(max_length, sp.length_s);
  }

  record.success = true;
  record.delay_s = max_length;
  return record;
}

SimulationResult run_simulation(const ScenarioConfig& config,
                                std::uint64_t seed) {
  config.validate();

  const ZoneGrid grid = ZoneGrid::standard();
  const ConstellationSpec spec = config.constellation();
  spec.validate();

  ScenarioConfig echo = config;
  echo.seed = seed;

  SimulationResult result;
  result.config = echo;
  result.seed = seed;

  const ZoneIndexMap eta = make_eta(echo, grid);
  const auto rates = arrival_rates(config.load, eta);
  TaskTemplate tmpl{config.subtasks_per_task, config.subtask_gflo,
                    config.subtask_gb, config.threshold_s};
  const std::vector<Task> tasks = generate_tasks(
      rates, config.duration_s, seed, tmpl, config.dest_sampler, eta);

  ResourceLedger ledger(config.rates());

  OffloadParams params;
  params.spec = spec;
  params.source_altitude_m = config.source_altitude_km * 1e3;
  params.result_volume_bits = config.result_volume_bits;
  params.literal_raw_computed_tier = config.literal_step16;

  result.tasks.reserve(tasks.size());
  for (const Task& task : tasks) {
    const Snapshot snapshot = build_snapshot(spec, grid, task.gen_time_s);
    ledger.ensure_snapshot(snapshot);
    result.tasks.push_back(
        offload_task(task, config.scheme, snapshot, ledger, params));
  }
  return result;
}

}  // namespace leofusion
