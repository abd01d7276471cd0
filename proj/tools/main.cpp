// Command-line front end: `run` simulates one scenario, `sweep` repeats it
// over a parameter range, `validate` runs the built-in oracle suites.
// Exit codes: 0 ok, 1 validation failure, 2 configuration error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "leofusion/commands.hpp"

namespace {

using namespace leofusion;

struct CommonFlags {
  std::string config_path;
  std::vector<std::string> sets;
  std::string scheme;
  std::string eta;
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool literal_step16 = false;
  std::string out_dir = "out";
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "scenario config file");
  cmd->add_option("--set", flags.sets,
                  "override a config key, e.g. --set load=300")
      ->type_name("KEY=VALUE");
  cmd->add_option("--scheme", flags.scheme, "fusion|ground|visible");
  cmd->add_option("--eta", flags.eta, "uniform|hotspots|file:PATH");
  cmd->add_option("--seed", flags.seed, "simulation seed")
      ->each([&flags](const std::string&) { flags.seed_given = true; });
  cmd->add_flag("--literal-step16", flags.literal_step16,
                "raw-volume weights on the computed tier");
  cmd->add_option("--out", flags.out_dir, "output directory");
}

ScenarioConfig build_config(const CommonFlags& flags) {
  ScenarioConfig config = parse_config(flags.config_path, flags.sets);
  if (!flags.scheme.empty()) config.scheme = parse_scheme(flags.scheme);
  if (!flags.eta.empty()) apply_eta_flag(config, flags.eta);
  if (flags.seed_given) config.seed = flags.seed;
  if (flags.literal_step16) config.literal_step16 = true;
  config.validate();
  return config;
}

std::vector<double> parse_values(const std::string& csv) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = csv.find(',', pos);
    const std::string tok =
        csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (tok.empty()) throw ConfigError("empty entry in values list");
    try {
      values.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw ConfigError("non-numeric value `" + tok + "` in values list");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return values;
}

void write_file(const std::string& dir, const std::string& name,
                const std::string& content) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output dir: " + dir);
  const std::string path = (fs::path(dir) / name).string();
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LEO task-offloading simulator (metagraph fusion scheme)"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "simulate one scenario");
  add_common(run, run_flags);

  CommonFlags sweep_flags;
  std::string param;
  std::string values_csv;
  std::string schemes_csv = "fusion,ground,visible";
  std::string seeds_csv;
  CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep");
  add_common(sweep, sweep_flags);
  sweep->add_option("--param", param,
                    "load|sat_gflops|sgl_gbps|subtask_gflo|subtask_gb")
      ->required();
  sweep->add_option("--values", values_csv, "comma-separated values")
      ->required();
  sweep->add_option("--schemes", schemes_csv, "comma-separated schemes");
  sweep->add_option("--seeds", seeds_csv,
                    "comma-separated seeds (default: the --seed value)");

  CLI::App* validate = app.add_subcommand("validate", "run oracle suites");
  int dominance_instances = 200;
  int sp_graphs = 500;
  std::uint64_t validate_seed = 1;
  std::string validate_out;
  validate->add_option("--instances", dominance_instances,
                       "dominance-check instances");
  validate->add_option("--graphs", sp_graphs, "shortest-path check graphs");
  validate->add_option("--seed", validate_seed, "suite seed");
  validate->add_option("--out", validate_out, "write per-instance report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      const ScenarioConfig config = build_config(run_flags);
      const RunOutput out = run_command(config, run_flags.out_dir);
      std::cout << out.summary;
      return 0;
    }

    if (sweep->parsed()) {
      SweepRequest request;
      request.base = build_config(sweep_flags);
      request.param = param;
      request.values = parse_values(values_csv);
      for (std::size_t pos = 0, next; pos != std::string::npos; pos = next) {
        next = schemes_csv.find(',', pos);
        const std::string tok = schemes_csv.substr(
            pos, next == std::string::npos ? next : next - pos);
        request.schemes.push_back(parse_scheme(tok));
        if (next != std::string::npos) ++next;
      }
      if (seeds_csv.empty()) {
        request.seeds.push_back(request.base.seed);
      } else {
        for (double v : parse_values(seeds_csv))
          request.seeds.push_back(static_cast<std::uint64_t>(v));
      }
      const std::vector<SweepRow> rows = sweep_command(request);
      write_file(sweep_flags.out_dir, "sweep.csv", serialize_sweep_csv(rows));
      std::cout << "points=" << rows.size() << '\n';
      return 0;
    }

    if (validate->parsed()) {
      const ValidateOutput out =
          validate_command(dominance_instances, sp_graphs, validate_seed);
      std::cout << out.report_lines;
      std::cout << "dominance: checked=" << out.dominance.checked
                << " skipped=" << out.dominance.skipped
                << " violations=" << out.dominance.violations << '\n';
      std::cout << "shortest_path: checked=" << out.shortest_path.checked
                << " violations=" << out.shortest_path.violations << '\n';
      if (!validate_out.empty())
        write_file(validate_out, "validate.csv", out.report_lines);
      return out.ok ? 0 : 1;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
