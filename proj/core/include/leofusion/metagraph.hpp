#ifndef LEOFUSION_METAGRAPH_HPP
#define LEOFUSION_METAGRAPH_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "leofusion/orbital.hpp"
#include "leofusion/resources.hpp"
#include "leofusion/traffic.hpp"

namespace leofusion {

enum class Scheme { fusion, ground, visible };

const char* scheme_name(Scheme s);

// Computation state of a VN copy. Crossing the virtual edge from the
// uncomputed copy to the computed copy is the onboard computation.
enum class Tier { uncomputed, computed };

enum class NodeKind { source, dest, vn };

struct MetaNode {
  NodeKind kind = NodeKind::vn;
  ZoneId zone;           // valid for vn nodes
  Tier tier = Tier::uncomputed;  // valid for vn nodes
};

enum class EdgeKind { intra_tier, virtual_compute, source_uplink, dest_downlink };

struct MetaEdge {
  int from = 0;
  int to = 0;
  EdgeKind kind = EdgeKind::intra_tier;
};

// Offloading-scheme graph over one snapshot: up to two VN tiers, the
// virtual edges between them, and the endpoint attachment edges.
// Node ids: 0 = source, 1 = dest, then the uncomputed tier in zone order,
// then (when present) the computed tier.
struct Metagraph {
  Scheme scheme = Scheme::fusion;
  ZoneGrid grid;
  std::vector<ZoneId> zone_ids;  // tier node order
  bool has_computed_tier = false;

  std::vector<MetaNode> nodes;
  std::vector<MetaEdge> edges;
  std::vector<std::vector<int>> out_edges;  // node -> edge indices
  std::vector<std::vector<int>> in_edges;

  std::set<ZoneId> u_visible;
  std::set<ZoneId> v_visible;

  int source_node() const { return 0; }
  int dest_node() const { return 1; }
  int node_of(Tier tier, ZoneId zone) const;
  std::string node_label(int node) const;
};

Metagraph build_fusion(const Snapshot& snapshot,
                       const std::set<ZoneId>& u_visible,
                       const std::set<ZoneId>& v_visible);
Metagraph build_ground(const Snapshot& snapshot,
                       const std::set<ZoneId>& u_visible,
                       const std::set<ZoneId>& v_visible);
Metagraph build_visible(const Snapshot& snapshot,
                        const std::set<ZoneId>& u_visible,
                        const std::set<ZoneId>& v_visible);
Metagraph build_scheme(Scheme scheme, const Snapshot& snapshot,
                       const std::set<ZoneId>& u_visible,
                       const std::set<ZoneId>& v_visible);

// True iff nodes(a) and edges(a) are contained in b under the canonical
// tier labeling (uncomputed = pre-compute copy, computed = post-compute).
bool is_subgraph(const Metagraph& a, const Metagraph& b);

// Delay weight of one edge, decomposed for reporting.
struct EdgeWeight {
  double total_s = 0.0;
  double wait_s = 0.0;
  double service_s = 0.0;
  double prop_s = 0.0;
};

struct WeightedMetagraph {
  std::shared_ptr<const Metagraph> graph;
  std::vector<EdgeWeight> weights;  // parallel to graph->edges
};

// Everything weight assignment needs besides the ledger and the subtask.
struct WeightParams {
  const Snapshot* snapshot = nullptr;
  GeoPoint source_pos;
  GeoPoint dest_pos;
  ZoneId source_zone;
  ZoneId dest_zone;
  long task_scope = -1;  // owner task id for per-task SGL links
  double result_volume_bits = 1e6;
  // reproduce the literal reading that keeps raw-volume weights on the
  // computed tier instead of result-volume weights
  bool literal_raw_computed_tier = false;
  double light_speed_m_s = 299792458.0;
  double earth_radius_m = kDefaultEarthRadiusM;
};

// Static weights: every edge is priced as if the subtask reached it at
// time t_s against the given ledger view.
WeightedMetagraph assign_weights(std::shared_ptr<const Metagraph> graph,
                                 const Subtask& subtask,
                                 const ResourceLedger& ledger, double t_s,
                                 const WeightParams& params);

// Resource behind a transmission/computation edge (virtual edges map to
// the zone's compute node). Throws for edges with no resource.
ResourceKey edge_resource(const Metagraph& graph, const MetaEdge& edge,
                          const WeightParams& params);

// Demand on that resource: bits for links, GFLO for virtual edges.
double edge_demand(const Metagraph& graph, const MetaEdge& edge,
                   const Subtask& subtask, const WeightParams& params);

// Computed-tier transfers move computing results, a negligible load:
// they are priced at service + propagation and reserve nothing.
bool edge_carries_results(const Metagraph& graph, const MetaEdge& edge,
                          const WeightParams& params);

// Debug export, one `from,to,kind,weight` line per edge.
std::string export_edge_list(const WeightedMetagraph& wg);

}  // namespace leofusion

#endif  // LEOFUSION_METAGRAPH_HPP
