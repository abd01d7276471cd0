#include "leofusion/metagraph.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace leofusion {

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::fusion: return "fusion";
    case Scheme::ground: return "ground";
    case Scheme::visible: return "visible";
  }
  return "?";
}

int Metagraph::node_of(Tier tier, ZoneId zone) const {
  const int z = grid.index_of(zone);
  if (z < 0 || z >= static_cast<int>(zone_ids.size()))
    throw std::invalid_argument("zone outside metagraph");
  if (tier == Tier::uncomputed) return 2 + z;
  if (!has_computed_tier)
    throw std::invalid_argument("metagraph has no computed tier");
  return 2 + static_cast<int>(zone_ids.size()) + z;
}

std::string Metagraph::node_label(int node) const {
  const MetaNode& n = nodes.at(static_cast<std::size_t>(node));
  switch (n.kind) {
    case NodeKind::source: return "u";
    case NodeKind::dest: return "v";
    case NodeKind::vn: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%s:%d,%d",
                    n.tier == Tier::uncomputed ? "uncomputed" : "computed",
                    n.zone.row, n.zone.col);
      return buf;
    }
  }
  return "?";
}

namespace {

struct Builder {
  Metagraph g;

  Builder(Scheme scheme, const Snapshot& snapshot,
          const std::set<ZoneId>& u_visible, const std::set<ZoneId>& v_visible,
          bool computed_tier) {
    if (u_visible.empty())
      throw std::runtime_error("unreachable endpoint: source sees no VN");
    if (v_visible.empty())
      throw std::runtime_error("unreachable endpoint: destination sees no VN");

    g.scheme = scheme;
    g.grid = snapshot.grid;
    g.zone_ids = snapshot.vn_nodes;
    g.has_computed_tier = computed_tier;
    g.u_visible = u_visible;
    g.v_visible = v_visible;

    g.nodes.push_back(MetaNode{NodeKind::source, {}, Tier::uncomputed});
    g.nodes.push_back(MetaNode{NodeKind::dest, {}, Tier::uncomputed});
    for (ZoneId z : g.zone_ids)
      g.nodes.push_back(MetaNode{NodeKind::vn, z, Tier::uncomputed});
    if (computed_tier)
      for (ZoneId z : g.zone_ids)
        g.nodes.push_back(MetaNode{NodeKind::vn, z, Tier::computed});
  }

  void edge(int from, int to, EdgeKind kind) {
    g.edges.push_back(MetaEdge{from, to, kind});
  }

  void intra_tier(const Snapshot& snapshot, Tier tier) {
    for (const ZonePair& e : snapshot.isl_edges) {
      const int a = g.node_of(tier, e.a);
      const int b = g.node_of(tier, e.b);
      edge(a, b, EdgeKind::intra_tier);
      edge(b, a, EdgeKind::intra_tier);
    }
  }

  void virtual_edges(const std::set<ZoneId>& zones) {
    for (ZoneId z : zones)
      edge(g.node_of(Tier::uncomputed, z), g.node_of(Tier::computed, z),
           EdgeKind::virtual_compute);
  }

  void uplinks() {
    for (ZoneId z : g.u_visible)
      edge(g.source_node(), g.node_of(Tier::uncomputed, z),
           EdgeKind::source_uplink);
  }

  void downlinks(Tier tier) {
    for (ZoneId z : g.v_visible)
      edge(g.node_of(tier, z), g.dest_node(), EdgeKind::dest_downlink);
  }

  Metagraph finish() {
    g.out_edges.assign(g.nodes.size(), {});
    g.in_edges.assign(g.nodes.size(), {});
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
      g.out_edges[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(i)].from)].push_back(i);
      g.in_edges[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(i)].to)].push_back(i);
    }
    return std::move(g);
  }
};

}  // namespace

Metagraph build_fusion(const Snapshot& snapshot,
                       const std::set<ZoneId>& u_visible,
                       const std::set<ZoneId>& v_visible) {
  Builder b(Scheme::fusion, snapshot, u_visible, v_visible, true);
  b.intra_tier(snapshot, Tier::uncomputed);
  b.intra_tier(snapshot, Tier::computed);
  std::set<ZoneId> all(b.g.zone_ids.begin(), b.g.zone_ids.end());
  b.virtual_edges(all);
  b.uplinks();
  b.downlinks(Tier::uncomputed);
  b.downlinks(Tier::computed);
  return b.finish();
}

Metagraph build_ground(const Snapshot& snapshot,
                       const std::set<ZoneId>& u_visible,
                       const std::set<ZoneId>& v_visible) {
  Builder b(Scheme::ground, snapshot, u_visible, v_visible, false);
  b.intra_tier(snapshot, Tier::uncomputed);
  b.uplinks();
  b.downlinks(Tier::uncomputed);
  return b.finish();
}

Metagraph build_visible(const Snapshot& snapshot,
                        const std::set<ZoneId>& u_visible,
                        const std::set<ZoneId>& v_visible) {
  // Canonical labeling: the uncomputed tier is the edgeless entry tier,
  // the computed tier carries the ISLs and reaches the destination.
  Builder b(Scheme::visible, snapshot, u_visible, v_visible, true);
  b.intra_tier(snapshot, Tier::computed);
  b.virtual_edges(u_visible);
  b.uplinks();
  b.downlinks(Tier::computed);
  return b.finish();
}

Metagraph build_scheme(Scheme scheme, const Snapshot& snapshot,
                       const std::set<ZoneId>& u_visible,
                       const std::set<ZoneId>& v_visible) {
  switch (scheme) {
    case Scheme::fusion: return build_fusion(snapshot, u_visible, v_visible);
    case Scheme::ground: return build_ground(snapshot, u_visible, v_visible);
    case Scheme::visible: return build_visible(snapshot, u_visible, v_visible);
  }
  throw std::invalid_argument("unknown scheme");
}

namespace {

struct NodeKey {
  int kind;
  int tier;
  ZoneId zone;
  auto operator<=>(const NodeKey&) const = default;
};

NodeKey key_of(const MetaNode& n) {
  if (n.kind != NodeKind::vn) return NodeKey{static_cast<int>(n.kind), 0, {}};
  return NodeKey{static_cast<int>(n.kind), static_cast<int>(n.tier), n.zone};
}

}  // namespace

bool is_subgraph(const Metagraph& a, const Metagraph& b) {
  std::set<NodeKey> nodes_b;
  for (const MetaNode& n : b.nodes) nodes_b.insert(key_of(n));
  for (const MetaNode& n : a.nodes)
    if (!nodes_b.count(key_of(n))) return false;

  std::set<std::pair<NodeKey, NodeKey>> edges_b;
  for (const MetaEdge& e : b.edges)
    edges_b.emplace(key_of(b.nodes[static_cast<std::size_t>(e.from)]),
                    key_of(b.nodes[static_cast<std::size_t>(e.to)]));
  for (const MetaEdge& e : a.edges)
    if (!edges_b.count({key_of(a.nodes[static_cast<std::size_t>(e.from)]),
                        key_of(a.nodes[static_cast<std::size_t>(e.to)])}))
      return false;
  return true;
}

ResourceKey edge_resource(const Metagraph& graph, const MetaEdge& edge,
                          const WeightParams& params) {
  const MetaNode& from = graph.nodes[static_cast<std::size_t>(edge.from)];
  const MetaNode& to = graph.nodes[static_cast<std::size_t>(edge.to)];
  switch (edge.kind) {
    case EdgeKind::intra_tier:
      return ResourceKey::isl(from.zone, to.zone);
    case EdgeKind::virtual_compute:
      return ResourceKey::compute_node(from.zone);
    case EdgeKind::source_uplink:
      return ResourceKey::uplink(params.source_zone, to.zone, params.task_scope);
    case EdgeKind::dest_downlink:
      return ResourceKey::sgl(from.zone, params.dest_zone, params.task_scope);
  }
  throw std::invalid_argument("edge has no resource");
}

double edge_demand(const Metagraph& graph, const MetaEdge& edge,
                   const Subtask& subtask, const WeightParams& params) {
  const double raw_bits = gb_to_bits(subtask.volume_gb);
  const MetaNode& from = graph.nodes[static_cast<std::size_t>(edge.from)];
  switch (edge.kind) {
    case EdgeKind::virtual_compute:
      return subtask.flop_g;
    case EdgeKind::source_uplink:
      return raw_bits;
    case EdgeKind::intra_tier:
    case EdgeKind::dest_downlink:
      if (from.tier == Tier::uncomputed || params.literal_raw_computed_tier)
        return raw_bits;
      return params.result_volume_bits;  // results only after computing
  }
  throw std::invalid_argument("edge has no demand");
}

bool edge_carries_results(const Metagraph& graph, const MetaEdge& edge,
                          const WeightParams& params) {
  if (params.literal_raw_computed_tier) return false;
  if (edge.kind != EdgeKind::intra_tier && edge.kind != EdgeKind::dest_downlink)
    return false;
  return graph.nodes[static_cast<std::size_t>(edge.from)].tier ==
         Tier::computed;
}

WeightedMetagraph assign_weights(std::shared_ptr<const Metagraph> graph,
                                 const Subtask& subtask,
                                 const ResourceLedger& ledger, double t_s,
                                 const WeightParams& params) {
  if (!params.snapshot) throw std::invalid_argument("weight params need a snapshot");
  const Snapshot& snap = *params.snapshot;

  WeightedMetagraph wg;
  wg.graph = std::move(graph);
  wg.weights.reserve(wg.graph->edges.size());

  for (const MetaEdge& e : wg.graph->edges) {
    const MetaNode& from = wg.graph->nodes[static_cast<std::size_t>(e.from)];
    const MetaNode& to = wg.graph->nodes[static_cast<std::size_t>(e.to)];

    EdgeWeight w;
    const ResourceKey key = edge_resource(*wg.graph, e, params);
    const double demand = edge_demand(*wg.graph, e, subtask, params);
    if (edge_carries_results(*wg.graph, e, params)) {
      w.wait_s = 0.0;
      w.service_s = demand / ledger.schedule(key).capacity;
    } else {
      const DelayQuote q =
          e.kind == EdgeKind::virtual_compute
              ? computation_delay(ledger, from.zone, demand, t_s)
              : transmission_delay(ledger, key, demand, t_s);
      w.wait_s = q.wait_s;
      w.service_s = q.service_s;
    }

    switch (e.kind) {
      case EdgeKind::virtual_compute:
        break;  // same physical node, no propagation
      case EdgeKind::intra_tier:
        w.prop_s = propagation_delay(
            distance_m(snap.sat_position_of(from.zone),
                       snap.sat_position_of(to.zone), params.earth_radius_m),
            params.light_speed_m_s);
        break;
      case EdgeKind::source_uplink:
        w.prop_s = propagation_delay(
            distance_m(params.source_pos, snap.sat_position_of(to.zone),
                       params.earth_radius_m),
            params.light_speed_m_s);
        break;
      case EdgeKind::dest_downlink:
        w.prop_s = propagation_delay(
            distance_m(snap.sat_position_of(from.zone), params.dest_pos,
                       params.earth_radius_m),
            params.light_speed_m_s);
        break;
    }
    w.total_s = w.wait_s + w.service_s + w.prop_s;
    wg.weights.push_back(w);
  }
  return wg;
}

std::string export_edge_list(const WeightedMetagraph& wg) {
  std::string out = "from,to,kind,weight\n";
  const Metagraph& g = *wg.graph;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const MetaEdge& e = g.edges[i];
    const char* kind = nullptr;
    switch (e.kind) {
      case EdgeKind::intra_tier: kind = "intra_tier"; break;
      case EdgeKind::virtual_compute: kind = "virtual"; break;
      case EdgeKind::source_uplink: kind = "source_uplink"; break;
      case EdgeKind::dest_downlink: kind = "dest_downlink"; break;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, ",%s,%.9g\n", kind, wg.weights[i].total_s);
    out += g.node_label(e.from) + "," + g.node_label(e.to) + buf;
  }
  return out;
}

}  // namespace leofusion
