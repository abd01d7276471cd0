#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <functional>

#include "leofusion/metagraph.hpp"
#include "leofusion/rng.hpp"

using namespace leofusion;

namespace {

// 2x2 grid whose four zones form a 4-cycle
Snapshot four_cycle_snapshot() {
  Snapshot snap;
  snap.grid = ZoneGrid{2, 2};
  snap.vn_nodes = snap.grid.zones();
  int slot = 0;
  for (ZoneId z : snap.vn_nodes) {
    const SatelliteId sat{0, slot++};
    snap.vn_to_sat[z] = sat;
    const GeoPoint c = snap.grid.center(z);
    snap.sat_positions[sat] = GeoPoint{c.latitude_deg, c.longitude_deg, 500e3};
  }
  snap.isl_edges.insert(ZonePair({0, 0}, {0, 1}));
  snap.isl_edges.insert(ZonePair({0, 1}, {1, 1}));
  snap.isl_edges.insert(ZonePair({1, 1}, {1, 0}));
  snap.isl_edges.insert(ZonePair({1, 0}, {0, 0}));
  return snap;
}

WeightParams params_for(const Snapshot& snap, ZoneId src, ZoneId dst,
                        long scope = 1) {
  WeightParams wp;
  wp.snapshot = &snap;
  const GeoPoint sc = snap.grid.center(src);
  wp.source_pos = GeoPoint{sc.latitude_deg, sc.longitude_deg, 600e3};
  wp.dest_pos = snap.grid.center(dst);
  wp.source_zone = src;
  wp.dest_zone = dst;
  wp.task_scope = scope;
  return wp;
}

ResourceLedger ledger_for(const Snapshot& snap, const WeightParams& wp,
                          const std::set<ZoneId>& u_vis,
                          const std::set<ZoneId>& v_vis) {
  ResourceLedger ledger;
  ledger.ensure_snapshot(snap);
  for (ZoneId z : u_vis) ledger.ensure_uplink(wp.source_zone, z, wp.task_scope);
  for (ZoneId z : v_vis) ledger.ensure_sgl(z, wp.dest_zone, wp.task_scope);
  return ledger;
}

int count_kind(const Metagraph& g, EdgeKind kind) {
  int n = 0;
  for (const MetaEdge& e : g.edges) n += e.kind == kind ? 1 : 0;
  return n;
}

// all simple source->dest paths, returning virtual-edge counts
std::vector<int> virtual_counts_over_all_paths(const Metagraph& g) {
  std::vector<int> counts;
  std::vector<char> seen(g.nodes.size(), 0);
  std::function<void(int, int)> dfs = [&](int x, int virtuals) {
    if (x == g.dest_node()) {
      counts.push_back(virtuals);
      return;
    }
    seen[static_cast<std::size_t>(x)] = 1;
    for (int ei : g.out_edges[static_cast<std::size_t>(x)]) {
      const MetaEdge& e = g.edges[static_cast<std::size_t>(ei)];
      if (seen[static_cast<std::size_t>(e.to)]) continue;
      dfs(e.to, virtuals + (e.kind == EdgeKind::virtual_compute ? 1 : 0));
    }
    seen[static_cast<std::size_t>(x)] = 0;
  };
  dfs(g.source_node(), 0);
  return counts;
}

}  // namespace

TEST_SUITE_BEGIN("metagraph");

TEST_CASE("fusion metagraph on the 4-cycle") {
  const Snapshot snap = four_cycle_snapshot();
  const std::set<ZoneId> u_vis{{0, 0}};
  const std::set<ZoneId> v_vis{{1, 0}, {1, 1}};

  const Metagraph g = build_fusion(snap, u_vis, v_vis);
  CHECK(g.nodes.size() == 10);  // 2*4 + source + dest
  CHECK(g.edges.size() == 25);  // 16 intra + 4 virtual + 1 up + 4 down
  CHECK(count_kind(g, EdgeKind::intra_tier) == 16);
  CHECK(count_kind(g, EdgeKind::virtual_compute) == 4);
  CHECK(count_kind(g, EdgeKind::source_uplink) == 1);
  CHECK(count_kind(g, EdgeKind::dest_downlink) == 4);
}

TEST_CASE("fusion node and edge count formulas") {
  ConstellationSpec spec;
  spec.num_orbits = 2;
  spec.sats_per_orbit = 8;
  const ZoneGrid grid{4, 4};
  Rng rng(5);
  for (int i = 0; i < 10; ++i) {
    const Snapshot snap =
        build_snapshot(spec, grid, rng.uniform(0.0, orbital_period(spec)));
    std::set<ZoneId> u_vis, v_vis;
    while (u_vis.size() < 1 + rng.next_below(3))
      u_vis.insert(grid.zone_at(static_cast<int>(rng.next_below(16))));
    while (v_vis.size() < 1 + rng.next_below(3))
      v_vis.insert(grid.zone_at(static_cast<int>(rng.next_below(16))));

    const Metagraph g = build_fusion(snap, u_vis, v_vis);
    const std::size_t zones = 16;
    CHECK(g.nodes.size() == 2 * zones + 2);
    CHECK(g.edges.size() == 4 * snap.isl_edges.size() + zones + u_vis.size() +
                                2 * v_vis.size());
  }
}

TEST_CASE("standard snapshot fusion graph has 258 nodes") {
  ConstellationSpec spec;
  const Snapshot snap = build_snapshot(spec, ZoneGrid::standard(), 0.0);
  const Metagraph g =
      build_fusion(snap, {ZoneId{4, 8}}, {ZoneId{4, 9}, ZoneId{4, 10}});
  CHECK(g.nodes.size() == 258);
}

TEST_CASE("minimal instance has a u->z->zhat->v path") {
  Snapshot snap;
  snap.grid = ZoneGrid{1, 2};
  snap.vn_nodes = {{0, 0}};  // single zone, no edges
  snap.vn_to_sat[{0, 0}] = {0, 0};
  snap.sat_positions[{0, 0}] = GeoPoint{0, 0, 500e3};

  const Metagraph g = build_fusion(snap, {{0, 0}}, {{0, 0}});
  const auto counts = virtual_counts_over_all_paths(g);
  CHECK(!counts.empty());
}

TEST_CASE("ground metagraph on the 4-cycle") {
  const Snapshot snap = four_cycle_snapshot();
  const Metagraph g =
      build_ground(snap, {{0, 0}}, {{1, 0}, {1, 1}});
  CHECK(g.nodes.size() == 6);
  CHECK(g.edges.size() == 11);  // 8 intra + 1 up + 2 down
  CHECK(count_kind(g, EdgeKind::virtual_compute) == 0);

  const Metagraph fusion = build_fusion(snap, {{0, 0}}, {{1, 0}, {1, 1}});
  CHECK(is_subgraph(g, fusion));
}

TEST_CASE("visible metagraph on the 4-cycle") {
  const Snapshot snap = four_cycle_snapshot();
  const std::set<ZoneId> u_vis{{0, 0}};
  const std::set<ZoneId> v_vis{{1, 0}, {1, 1}};
  const Metagraph g = build_visible(snap, u_vis, v_vis);
  CHECK(g.nodes.size() == 10);
  CHECK(g.edges.size() == 12);  // 8 computed intra + 1 virtual + 1 up + 2 down
  CHECK(count_kind(g, EdgeKind::intra_tier) == 8);
  CHECK(count_kind(g, EdgeKind::virtual_compute) == 1);

  // the uncomputed tier carries no intra-tier edges
  for (const MetaEdge& e : g.edges) {
    if (e.kind != EdgeKind::intra_tier) continue;
    CHECK(g.nodes[static_cast<std::size_t>(e.from)].tier == Tier::computed);
  }

  // every path computes at a u-visible zone
  const auto counts = virtual_counts_over_all_paths(g);
  for (int c : counts) CHECK(c == 1);

  const Metagraph fusion = build_fusion(snap, u_vis, v_vis);
  CHECK(is_subgraph(g, fusion));
  CHECK_FALSE(is_subgraph(fusion, g));
  CHECK(is_subgraph(g, g));
}

TEST_CASE("empty visibility is an unreachable-endpoint error") {
  const Snapshot snap = four_cycle_snapshot();
  CHECK_THROWS_WITH_AS(build_fusion(snap, {}, {{1, 0}}),
                       doctest::Contains("unreachable endpoint"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(build_ground(snap, {{0, 0}}, {}),
                       doctest::Contains("unreachable endpoint"),
                       std::runtime_error);
}

TEST_CASE("paths traverse at most one virtual edge") {
  const Snapshot snap = four_cycle_snapshot();
  for (Scheme scheme : {Scheme::fusion, Scheme::ground, Scheme::visible}) {
    const Metagraph g =
        build_scheme(scheme, snap, {{0, 0}, {0, 1}}, {{1, 0}, {1, 1}});
    const auto counts = virtual_counts_over_all_paths(g);
    CHECK(!counts.empty());
    for (int c : counts) CHECK(c <= 1);
  }
}

TEST_CASE("subgraph dominance holds on random instances") {
  ConstellationSpec spec;
  spec.num_orbits = 2;
  spec.sats_per_orbit = 8;
  const ZoneGrid grid{4, 4};
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const Snapshot snap =
        build_snapshot(spec, grid, rng.uniform(0.0, orbital_period(spec)));
    std::set<ZoneId> u_vis, v_vis;
    while (u_vis.size() < 1 + rng.next_below(4))
      u_vis.insert(grid.zone_at(static_cast<int>(rng.next_below(16))));
    while (v_vis.size() < 1 + rng.next_below(4))
      v_vis.insert(grid.zone_at(static_cast<int>(rng.next_below(16))));
    const Metagraph fusion = build_fusion(snap, u_vis, v_vis);
    CHECK(is_subgraph(build_ground(snap, u_vis, v_vis), fusion));
    CHECK(is_subgraph(build_visible(snap, u_vis, v_vis), fusion));
  }
}

TEST_CASE("weight assignment") {
  Snapshot snap = four_cycle_snapshot();
  const ZoneId src{0, 0};
  const ZoneId dst{1, 1};
  // place the two equatorial satellites 1000 km apart vertically so the
  // (0,0)-(0,1) chord distance is exactly 1e6 m
  snap.sat_positions[snap.vn_to_sat[{0, 0}]] = GeoPoint{0, -90, 500e3};
  snap.sat_positions[snap.vn_to_sat[{0, 1}]] = GeoPoint{0, -90, 1500e3};

  WeightParams wp = params_for(snap, src, dst);
  const std::set<ZoneId> u_vis{{0, 0}};
  const std::set<ZoneId> v_vis{{1, 0}, {1, 1}};
  ResourceLedger ledger = ledger_for(snap, wp, u_vis, v_vis);

  const auto graph =
      std::make_shared<const Metagraph>(build_fusion(snap, u_vis, v_vis));
  const Subtask subtask{100.0, 0.1};
  const WeightedMetagraph wg = assign_weights(graph, subtask, ledger, 0.0, wp);

  double virtual_w = -1, uncomputed_isl_w = -1, computed_isl_w = -1;
  for (std::size_t i = 0; i < graph->edges.size(); ++i) {
    const MetaEdge& e = graph->edges[i];
    const MetaNode& from = graph->nodes[static_cast<std::size_t>(e.from)];
    const MetaNode& to = graph->nodes[static_cast<std::size_t>(e.to)];
    if (e.kind == EdgeKind::virtual_compute && from.zone == ZoneId{0, 0})
      virtual_w = wg.weights[i].total_s;
    if (e.kind == EdgeKind::intra_tier && from.zone == ZoneId{0, 0} &&
        to.zone == ZoneId{0, 1}) {
      if (from.tier == Tier::uncomputed) uncomputed_isl_w = wg.weights[i].total_s;
      else computed_isl_w = wg.weights[i].total_s;
    }
  }

  // computation: 100 GFLO / 100 GFLOPS
  CHECK(virtual_w == doctest::Approx(1.0).epsilon(1e-12));
  // raw tier: 0.8 Gbit / 5 Gbps + 1000 km propagation
  CHECK(uncomputed_isl_w ==
        doctest::Approx(0.16 + 0.0033356409519815205).epsilon(1e-12));
  // result tier: 1 Mbit / 5 Gbps + same propagation
  CHECK(computed_isl_w ==
        doctest::Approx(2e-4 + 0.0033356409519815205).epsilon(1e-12));

  SUBCASE("weights are nonnegative and finite") {
    for (const EdgeWeight& w : wg.weights) {
      CHECK(w.total_s >= 0.0);
      CHECK(std::isfinite(w.total_s));
    }
  }

  SUBCASE("literal mode keeps raw volume on the computed tier") {
    WeightParams literal = wp;
    literal.literal_raw_computed_tier = true;
    const WeightedMetagraph lw =
        assign_weights(graph, subtask, ledger, 0.0, literal);
    for (std::size_t i = 0; i < graph->edges.size(); ++i) {
      const MetaEdge& e = graph->edges[i];
      if (e.kind == EdgeKind::intra_tier &&
          graph->nodes[static_cast<std::size_t>(e.from)].tier == Tier::computed &&
          graph->nodes[static_cast<std::size_t>(e.from)].zone == ZoneId{0, 0} &&
          graph->nodes[static_cast<std::size_t>(e.to)].zone == ZoneId{0, 1})
        CHECK(lw.weights[i].total_s ==
              doctest::Approx(0.16 + 0.0033356409519815205).epsilon(1e-12));
    }
  }

  SUBCASE("edge list export") {
    const std::string text = export_edge_list(wg);
    CHECK(text.rfind("from,to,kind,weight\n", 0) == 0);
    CHECK(text.find("virtual") != std::string::npos);
    CHECK(text.find("uncomputed:0,0") != std::string::npos);
  }
}

TEST_SUITE_END();
