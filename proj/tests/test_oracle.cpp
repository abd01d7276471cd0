#include <doctest.h>

#include <stdexcept>

#include "leofusion/oracle.hpp"

using namespace leofusion;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("brute force on tiny graphs") {
  SUBCASE("single edge") {
    const auto wg = make_weighted_graph(2, {{0, 1, 5.0}});
    const PathResult r = brute_force_shortest_path(wg, 0, 1);
    REQUIRE(r.found);
    CHECK(r.length_s == doctest::Approx(5.0));
    CHECK(r.nodes == std::vector<int>{0, 1});
  }

  SUBCASE("triangle prefers the two-hop route") {
    const auto wg =
        make_weighted_graph(3, {{0, 2, 3.0}, {0, 1, 1.0}, {1, 2, 1.0}});
    const PathResult r = brute_force_shortest_path(wg, 0, 2);
    REQUIRE(r.found);
    CHECK(r.length_s == doctest::Approx(2.0));
    CHECK(r.nodes == std::vector<int>{0, 1, 2});
  }

  SUBCASE("no path") {
    const auto wg = make_weighted_graph(3, {{1, 0, 1.0}});
    CHECK_FALSE(brute_force_shortest_path(wg, 0, 2).found);
  }

  SUBCASE("enumeration bound") {
    std::vector<std::tuple<int, int, double>> edges;
    for (int i = 0; i + 1 < 13; ++i) edges.emplace_back(i, i + 1, 1.0);
    const auto wg = make_weighted_graph(13, edges);
    CHECK_THROWS_AS(brute_force_shortest_path(wg, 0, 12),
                    std::invalid_argument);
  }

  SUBCASE("oracle path length equals the sum of its weights") {
    const auto wg = make_weighted_graph(
        4, {{0, 1, 0.25}, {1, 2, 0.5}, {2, 3, 0.75}, {0, 3, 2.0}});
    const PathResult r = brute_force_shortest_path(wg, 0, 3);
    REQUIRE(r.found);
    CHECK(r.length_s == doctest::Approx(1.5).epsilon(1e-15));
  }
}

TEST_CASE("engine and oracle agree on random graphs") {
  const SuiteSummary s = run_shortest_path_suite(120, 7);
  CHECK(s.checked == 120);
  CHECK(s.violations == 0);
}

TEST_CASE("dominance holds on random small instances") {
  const SuiteSummary s = run_dominance_suite(30, 17);
  CHECK(s.checked == 30);
  CHECK(s.violations == 0);
  CHECK(s.all_ok());
}

TEST_CASE("degenerate single-zone instance holds") {
  Snapshot snap;
  snap.grid = ZoneGrid{1, 2};
  snap.vn_nodes = {{0, 0}};
  snap.vn_to_sat[{0, 0}] = {0, 0};
  snap.sat_positions[{0, 0}] = GeoPoint{0, 0, 500e3};

  ResourceLedger ledger;
  ledger.ensure_snapshot(snap);

  WeightParams wp;
  wp.source_pos = GeoPoint{0, 5, 600e3};
  wp.dest_pos = GeoPoint{0, -5, 0};
  wp.source_zone = {0, 0};
  wp.dest_zone = {0, 1};
  wp.task_scope = 3;
  ledger.ensure_uplink(wp.source_zone, {0, 0}, wp.task_scope);
  ledger.ensure_sgl({0, 0}, wp.dest_zone, wp.task_scope);

  const DominanceCheck check = check_scheme_dominance(snap, Subtask{50.0, 0.05}, ledger,
                                            {{0, 0}}, {{0, 0}}, wp, 0.0);
  REQUIRE(check.outcome == DominanceOutcome::holds);
  CHECK(check.fusion_s <= check.ground_s);
  CHECK(check.fusion_s <= check.visible_s);
}

TEST_SUITE_END();
