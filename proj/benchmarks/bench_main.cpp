#include <benchmark/benchmark.h>

#include "leofusion/engine.hpp"
#include "leofusion/metagraph.hpp"

namespace {

using namespace leofusion;

const ConstellationSpec kSpec{};
const ZoneGrid kGrid = ZoneGrid::standard();

Snapshot baseline_snapshot() { return build_snapshot(kSpec, kGrid, 0.0); }

std::set<ZoneId> around(ZoneId center, int radius) {
  std::set<ZoneId> out;
  for (int r = center.row - radius; r <= center.row + radius; ++r)
    for (int c = center.col - radius; c <= center.col + radius; ++c)
      if (r >= 0 && r < kGrid.rows)
        out.insert(ZoneId{r, ((c % kGrid.cols) + kGrid.cols) % kGrid.cols});
  return out;
}

void BM_BuildSnapshot(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_snapshot(kSpec, kGrid, t));
    t += 0.01;
  }
}
BENCHMARK(BM_BuildSnapshot);

void BM_BuildFusionMetagraph(benchmark::State& state) {
  const Snapshot snap = baseline_snapshot();
  const auto u_vis = around({4, 8}, 1);
  const auto v_vis = around({3, 4}, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_fusion(snap, u_vis, v_vis));
}
BENCHMARK(BM_BuildFusionMetagraph);

void BM_AssignWeights(benchmark::State& state) {
  const Snapshot snap = baseline_snapshot();
  const auto u_vis = around({4, 8}, 1);
  const auto v_vis = around({3, 4}, 1);
  const auto graph =
      std::make_shared<const Metagraph>(build_fusion(snap, u_vis, v_vis));

  WeightParams wp;
  wp.snapshot = &snap;
  const GeoPoint sc = kGrid.center({4, 8});
  wp.source_pos = GeoPoint{sc.latitude_deg, sc.longitude_deg, 600e3};
  wp.dest_pos = kGrid.center({3, 4});
  wp.source_zone = {4, 8};
  wp.dest_zone = {3, 4};
  wp.task_scope = 1;

  ResourceLedger ledger;
  ledger.ensure_snapshot(snap);
  for (ZoneId z : u_vis) ledger.ensure_uplink(wp.source_zone, z, 1);
  for (ZoneId z : v_vis) ledger.ensure_sgl(z, wp.dest_zone, 1);

  const Subtask subtask{100.0, 0.1};
  for (auto _ : state)
    benchmark::DoNotOptimize(assign_weights(graph, subtask, ledger, 0.0, wp));
}
BENCHMARK(BM_AssignWeights);

void BM_ShortestPath(benchmark::State& state) {
  const Snapshot snap = baseline_snapshot();
  const auto u_vis = around({4, 8}, 1);
  const auto v_vis = around({3, 4}, 1);
  const auto graph =
      std::make_shared<const Metagraph>(build_fusion(snap, u_vis, v_vis));

  WeightParams wp;
  wp.snapshot = &snap;
  const GeoPoint sc = kGrid.center({4, 8});
  wp.source_pos = GeoPoint{sc.latitude_deg, sc.longitude_deg, 600e3};
  wp.dest_pos = kGrid.center({3, 4});
  wp.source_zone = {4, 8};
  wp.dest_zone = {3, 4};
  wp.task_scope = 1;

  ResourceLedger ledger;
  ledger.ensure_snapshot(snap);
  for (ZoneId z : u_vis) ledger.ensure_uplink(wp.source_zone, z, 1);
  for (ZoneId z : v_vis) ledger.ensure_sgl(z, wp.dest_zone, 1);

  const WeightedMetagraph wg =
      assign_weights(graph, Subtask{100.0, 0.1}, ledger, 0.0, wp);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        shortest_path(wg, graph->source_node(), graph->dest_node()));
}
BENCHMARK(BM_ShortestPath);

void BM_RunSimulationSmall(benchmark::State& state) {
  ScenarioConfig config;
  config.load = 20.0;
  config.duration_s = 2.0;
  config.eta_source = EtaSource::hotspots;
  for (auto _ : state) benchmark::DoNotOptimize(run_simulation(config, 1));
}
BENCHMARK(BM_RunSimulationSmall)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
