#include "leofusion/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "leofusion/rng.hpp"

namespace leofusion {

namespace {

// Suffix-accumulated path length, matching the engine's backward
// relaxation order bit for bit.
double path_length(const WeightedMetagraph& wg, const std::vector<int>& nodes) {
  const Metagraph& g = *wg.graph;
  double len = 0.0;
  for (std::size_t i = nodes.size(); i-- > 1;) {
    const int from = nodes[i - 1];
    const int to = nodes[i];
    double w = -1.0;
    for (int ei : g.out_edges[static_cast<std::size_t>(from)])
      if (g.edges[static_cast<std::size_t>(ei)].to == to) {
        w = wg.weights[static_cast<std::size_t>(ei)].total_s;
        break;
      }
    if (w < 0) throw std::logic_error("path step without an edge");
    len = w + len;
  }
  return len;
}

}  // namespace

PathResult brute_force_shortest_path(const WeightedMetagraph& wg, int from,
                                     int to) {
  const Metagraph& g = *wg.graph;
  const int n = static_cast<int>(g.nodes.size());
  if (n > kBruteForceNodeLimit)
    throw std::invalid_argument("brute force bound exceeded");
  if (from < 0 || from >= n || to < 0 || to >= n)
    throw std::invalid_argument("node out of range");

  if (from == to) return PathResult{true, {from}, 0.0};

  PathResult best;
  std::vector<int> path{from};
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  on_path[static_cast<std::size_t>(from)] = 1;

  auto consider = [&]() {
    const double len = path_length(wg, path);
    if (!best.found || len < best.length_s ||
        (len == best.length_s && path < best.nodes)) {
      best.found = true;
      best.length_s = len;
      best.nodes = path;
    }
  };

  std::function<void(int)> dfs = [&](int x) {
    if (x == to) {
      consider();
      return;
    }
    for (int ei : g.out_edges[static_cast<std::size_t>(x)]) {
      const int y = g.edges[static_cast<std::size_t>(ei)].to;
      if (on_path[static_cast<std::size_t>(y)]) continue;
      on_path[static_cast<std::size_t>(y)] = 1;
      path.push_back(y);
      dfs(y);
      path.pop_back();
      on_path[static_cast<std::size_t>(y)] = 0;
    }
  };
  dfs(from);
  return best;
}

DominanceCheck check_scheme_dominance(const Snapshot& snapshot, const Subtask& subtask,
                            const ResourceLedger& ledger,
                            const std::set<ZoneId>& u_visible,
                            const std::set<ZoneId>& v_visible,
                            const WeightParams& params, double t_s) {
  WeightParams wp = params;
  wp.snapshot = &snapshot;

  DominanceCheck check;
  double lengths[3] = {0, 0, 0};
  const Scheme schemes[3] = {Scheme::fusion, Scheme::ground, Scheme::visible};
  for (int i = 0; i < 3; ++i) {
    const auto graph = std::make_shared<const Metagraph>(
        build_scheme(schemes[i], snapshot, u_visible, v_visible));
    const WeightedMetagraph wg =
        assign_weights(graph, subtask, ledger, t_s, wp);
    const PathResult sp =
        shortest_path(wg, graph->source_node(), graph->dest_node());
    if (!sp.found) return check;  // skipped
    lengths[i] = sp.length_s;
  }
  check.fusion_s = lengths[0];
  check.ground_s = lengths[1];
  check.visible_s = lengths[2];
  check.outcome = (check.fusion_s <= check.ground_s &&
                   check.fusion_s <= check.visible_s)
                      ? DominanceOutcome::holds
                      : DominanceOutcome::violated;
  return check;
}

namespace {

void random_backlog(ResourceLedger& ledger, const ResourceKey& key, Rng& rng,
                    long owner) {
  const int slots = static_cast<int>(rng.next_below(3));
  for (int i = 0; i < slots; ++i) {
    const double earliest = rng.uniform(0.0, 30.0);
    const double demand =
        rng.uniform(0.1, 5.0) * ledger.schedule(key).capacity;
    const SolvedSlot slot = solve_duration(ledger.schedule(key), demand, earliest);
    ledger.commit(Reservation{key, Interval{slot.start_s, slot.finish_s}, owner});
  }
}

std::set<ZoneId> random_zone_subset(const std::vector<ZoneId>& zones, Rng& rng,
                                    int max_size) {
  std::set<ZoneId> out;
  const int size = 1 + static_cast<int>(rng.next_below(
                           static_cast<std::uint64_t>(max_size)));
  while (static_cast<int>(out.size()) < size)
    out.insert(zones[rng.next_below(zones.size())]);
  return out;
}

}  // namespace

SuiteSummary run_dominance_suite(int instances, std::uint64_t seed) {
  SuiteSummary summary;

  ConstellationSpec spec;
  spec.num_orbits = 2;
  spec.sats_per_orbit = 8;
  const ZoneGrid grid{4, 4};
  const double period = orbital_period(spec);

  long attempt = 0;
  const long max_attempts = 4L * instances;
  while (summary.checked < instances && attempt < max_attempts) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt) + 0x7713));
    ++attempt;

    const double t = rng.uniform(0.0, period);
    const Snapshot snapshot = build_snapshot(spec, grid, t);

    ResourceLedger ledger;
    ledger.ensure_snapshot(snapshot);
    for (ZoneId z : snapshot.vn_nodes)
      random_backlog(ledger, ResourceKey::compute_node(z), rng, attempt);
    for (const ZonePair& e : snapshot.isl_edges)
      random_backlog(ledger, ResourceKey::isl(e.a, e.b), rng, attempt);

    const auto zones = grid.zones();
    const std::set<ZoneId> u_vis = random_zone_subset(zones, rng, 4);
    const std::set<ZoneId> v_vis = random_zone_subset(zones, rng, 4);

    const ZoneId source_zone = zones[rng.next_below(zones.size())];
    const ZoneId dest_zone = zones[rng.next_below(zones.size())];

    WeightParams wp;
    const GeoPoint sc = grid.center(source_zone);
    wp.source_pos = GeoPoint{sc.latitude_deg, sc.longitude_deg, 600e3};
    wp.dest_pos = grid.center(dest_zone);
    wp.source_zone = source_zone;
    wp.dest_zone = dest_zone;
    wp.earth_radius_m = spec.earth_radius_m;
    wp.light_speed_m_s = spec.light_speed_m_s;

    wp.task_scope = static_cast<long>(attempt);
    for (ZoneId z : u_vis) {
      ledger.ensure_uplink(source_zone, z, wp.task_scope);
      random_backlog(ledger, ResourceKey::uplink(source_zone, z, wp.task_scope),
                     rng, attempt);
    }
    for (ZoneId z : v_vis) {
      ledger.ensure_sgl(z, dest_zone, wp.task_scope);
      random_backlog(ledger, ResourceKey::sgl(z, dest_zone, wp.task_scope), rng,
                     attempt);
    }

    const Subtask subtask{rng.uniform(10.0, 500.0), rng.uniform(0.01, 0.5)};

    const DominanceCheck check = check_scheme_dominance(snapshot, subtask, ledger, u_vis,
                                              v_vis, wp, t + rng.uniform(0, 5));
    OracleReport report;
    report.instance_id = attempt - 1;
    if (check.outcome == DominanceOutcome::skipped) {
      ++summary.skipped;
      report.ok = true;
      report.note = "skipped: unreachable";
    } else {
      ++summary.checked;
      report.ok = check.outcome == DominanceOutcome::holds;
      if (!report.ok) {
        ++summary.violations;
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "violated: fusion=%.12g ground=%.12g visible=%.12g",
                      check.fusion_s, check.ground_s, check.visible_s);
        report.note = buf;
      }
    }
    summary.reports.push_back(std::move(report));
  }
  return summary;
}

WeightedMetagraph make_weighted_graph(
    int node_count, const std::vector<std::tuple<int, int, double>>& edges) {
  auto g = std::make_shared<Metagraph>();
  g->grid = ZoneGrid{1, node_count % 2 == 0 ? node_count : node_count + 1};
  g->nodes.resize(static_cast<std::size_t>(node_count));
  for (int i = 0; i < node_count; ++i)
    g->nodes[static_cast<std::size_t>(i)] =
        MetaNode{NodeKind::vn, ZoneId{0, i}, Tier::uncomputed};
  WeightedMetagraph wg;
  for (const auto& [from, to, w] : edges) {
    g->edges.push_back(MetaEdge{from, to, EdgeKind::intra_tier});
    wg.weights.push_back(EdgeWeight{w, 0.0, w, 0.0});
  }
  g->out_edges.assign(g->nodes.size(), {});
  g->in_edges.assign(g->nodes.size(), {});
  for (int i = 0; i < static_cast<int>(g->edges.size()); ++i) {
    g->out_edges[static_cast<std::size_t>(g->edges[static_cast<std::size_t>(i)].from)].push_back(i);
    g->in_edges[static_cast<std::size_t>(g->edges[static_cast<std::size_t>(i)].to)].push_back(i);
  }
  wg.graph = g;
  return wg;
}

SuiteSummary run_shortest_path_suite(int graphs, std::uint64_t seed) {
  SuiteSummary summary;
  for (int i = 0; i < graphs; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i) + 0x59E));
    const int n = 2 + static_cast<int>(rng.next_below(9));  // 2..10 nodes
    const bool quantized = rng.next_double() < 0.5;

    std::vector<std::tuple<int, int, double>> edges;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        if (rng.next_double() >= 0.35) continue;
        const double w =
            quantized ? 0.25 * (1 + static_cast<double>(rng.next_below(16)))
                      : rng.uniform(0.01, 10.0);
        edges.emplace_back(a, b, w);
      }
    const WeightedMetagraph wg = make_weighted_graph(n, edges);
    const int from = 0;
    const int to = n - 1;

    const PathResult engine = shortest_path(wg, from, to);
    const PathResult oracle = brute_force_shortest_path(wg, from, to);

    OracleReport report;
    report.instance_id = i;
    report.ok = engine.found == oracle.found;
    if (engine.found && oracle.found) {
      report.ok = report.ok &&
                  std::abs(engine.length_s - oracle.length_s) <= 1e-9 &&
                  engine.nodes == oracle.nodes;
    }
    if (report.ok) {
      ++summary.checked;
    } else {
      ++summary.violations;
      report.note = "engine/oracle mismatch";
    }
    summary.reports.push_back(std::move(report));
  }
  return summary;
}

}  // namespace leofusion
