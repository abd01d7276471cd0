#include "leofusion/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <stdexcept>

namespace leofusion {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

const SubtaskDecision* critical_subtask(const TaskRecord& t) {
  const SubtaskDecision* best = nullptr;
  for (const SubtaskDecision& d : t.decisions)
    if (!best || d.length_s > best->length_s) best = &d;
  return best;
}

}  // namespace

std::string serialize_tasks_csv(const SimulationResult& result) {
  std::string out =
      "task_id,src_row,src_col,dst_row,dst_col,gen_time_s,scheme,"
      "classification,delay_s,success,t_trans_s,t_prop_s,t_comp_s,t_wait_s\n";
  const char* scheme = scheme_name(result.config.scheme);
  for (const TaskRecord& t : result.tasks) {
    const SubtaskDecision* d = t.success ? critical_subtask(t) : nullptr;
    out += std::to_string(t.task_id) + ',' +
           std::to_string(t.source_zone.row) + ',' +
           std::to_string(t.source_zone.col) + ',' +
           std::to_string(t.dest_zone.row) + ',' +
           std::to_string(t.dest_zone.col) + ',' + fmt(t.gen_time_s) + ',' +
           scheme + ',';
    out += d ? path_class_name(d->classification) : "none";
    out += ',' + fmt(t.delay_s) + ',' + (t.success ? "1" : "0") + ',';
    if (d) {
      out += fmt(d->parts.sgl_trans_s + d->parts.isl_trans_s) + ',' +
             fmt(d->parts.prop_s) + ',' + fmt(d->parts.comp_s) + ',' +
             fmt(d->parts.wait_s);
    } else {
      out += "0,0,0,0";
    }
    out += '\n';
  }
  return out;
}

std::string summary_line(const SimulationResult& result) {
  if (result.tasks.empty()) return "tasks=0\n";
  const MetricsReport report = summarize(result);
  return "tasks=" + std::to_string(result.tasks.size()) +
         " wad_s=" + fmt(report.weighted_average_delay_s) +
         " success_rate=" + fmt(report.success_rate) + '\n';
}

RunOutput run_command(const ScenarioConfig& config, const std::string& out_dir) {
  RunOutput out;
  out.result = run_simulation(config, config.seed);
  out.summary = summary_line(out.result);

  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create output dir: " + out_dir);

  out.tasks_csv_path = (fs::path(out_dir) / "tasks.csv").string();
  {
    std::ofstream f(out.tasks_csv_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out.tasks_csv_path);
    f << serialize_tasks_csv(out.result);
  }
  {
    const std::string path = (fs::path(out_dir) / "summary.txt").string();
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << out.summary;
  }
  return out;
}

ScenarioConfig apply_sweep_param(const ScenarioConfig& base,
                                 const std::string& param, double value) {
  ScenarioConfig config = base;
  if (param == "load") config.load = value;
  else if (param == "sat_gflops") config.sat_gflops = value;
  else if (param == "sgl_gbps") config.sgl_gbps = value;
  else if (param == "subtask_gflo") config.subtask_gflo = value;
  else if (param == "subtask_gb") config.subtask_gb = value;
  else throw ConfigError("unknown sweep param `" + param + "`");
  config.validate();
  return config;
}

std::vector<SweepRow> sweep_command(const SweepRequest& request) {
  if (request.values.empty()) throw ConfigError("sweep needs values");
  if (request.schemes.empty()) throw ConfigError("sweep needs schemes");
  if (request.seeds.empty()) throw ConfigError("sweep needs seeds");

  struct Point {
    SweepRow row;
    ScenarioConfig config;
  };
  std::vector<Point> points;
  for (Scheme scheme : request.schemes)
    for (double value : request.values)
      for (std::uint64_t seed : request.seeds) {
        Point p;
        p.config = apply_sweep_param(request.base, request.param, value);
        p.config.scheme = scheme;
        p.config.seed = seed;
        p.row = SweepRow{scheme, request.param, value, seed, 0.0, 0.0};
        points.push_back(std::move(p));
      }

  // independent simulations; rows keep request order regardless of
  // completion order
  std::vector<std::future<SweepRow>> futures;
  futures.reserve(points.size());
  for (const Point& p : points)
    futures.push_back(std::async(std::launch::async, [&p]() {
      SweepRow row = p.row;
      const SimulationResult result = run_simulation(p.config, p.config.seed);
      if (!result.tasks.empty()) {
        const MetricsReport report = summarize(result);
        row.wad_s = report.weighted_average_delay_s;
        row.success_rate = report.success_rate;
      }
      return row;
    }));

  std::vector<SweepRow> rows;
  rows.reserve(futures.size());
  for (auto& f : futures) rows.push_back(f.get());
  return rows;
}

std::string serialize_sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "scheme,param,value,seed,wad_s,success_rate\n";
  for (const SweepRow& r : rows) {
    out += std::string(scheme_name(r.scheme)) + ',' + r.param + ',' +
           fmt(r.value) + ',' + std::to_string(r.seed) + ',' + fmt(r.wad_s) +
           ',' + fmt(r.success_rate) + '\n';
  }
  return out;
}

ValidateOutput validate_command(int dominance_instances, int sp_graphs,
                                std::uint64_t seed) {
  ValidateOutput out;
  out.dominance = run_dominance_suite(dominance_instances, seed);
  out.shortest_path = run_shortest_path_suite(sp_graphs, seed);

  for (const OracleReport& r : out.dominance.reports) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "dominance-%03ld,%d\n", r.instance_id,
                  r.ok ? 1 : 0);
    out.report_lines += buf;
  }
  for (const OracleReport& r : out.shortest_path.reports) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "sp-%03ld,%d\n", r.instance_id, r.ok ? 1 : 0);
    out.report_lines += buf;
  }
  out.ok = out.dominance.all_ok() && out.shortest_path.all_ok() &&
           out.dominance.checked >= dominance_instances &&
           out.shortest_path.checked == sp_graphs;
  return out;
}

}  // namespace leofusion
