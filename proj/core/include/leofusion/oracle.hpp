#ifndef LEOFUSION_ORACLE_HPP
#define LEOFUSION_ORACLE_HPP

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "leofusion/engine.hpp"

namespace leofusion {

// Exhaustive simple-path search sharing the engine's tie rule. Only for
// small instances; throws above the enumeration bound.
inline constexpr int kBruteForceNodeLimit = 12;

PathResult brute_force_shortest_path(const WeightedMetagraph& wg, int from,
                                     int to);

enum class DominanceOutcome { holds, violated, skipped };

struct DominanceCheck {
  DominanceOutcome outcome = DominanceOutcome::skipped;
  double fusion_s = 0.0;
  double ground_s = 0.0;
  double visible_s = 0.0;
};

// Builds the three scheme metagraphs on one frozen ledger view with the
// same weight conventions and compares optimal path lengths. The ledger
// must already carry the uplink/SGL keys the endpoints need.
DominanceCheck check_scheme_dominance(const Snapshot& snapshot, const Subtask& subtask,
                            const ResourceLedger& ledger,
                            const std::set<ZoneId>& u_visible,
                            const std::set<ZoneId>& v_visible,
                            const WeightParams& params, double t_s);

struct OracleReport {
  long instance_id = 0;
  bool ok = false;
  std::string note;
};

struct SuiteSummary {
  int checked = 0;
  int skipped = 0;
  int violations = 0;
  std::vector<OracleReport> reports;
  bool all_ok() const { return violations == 0; }
};

// Seeded random small-constellation instances with random backlogs and
// visibility; every checked instance must satisfy the dominance property.
SuiteSummary run_dominance_suite(int instances, std::uint64_t seed);

// Seeded random weighted graphs; the engine search must match the
// brute-force path and length exactly.
SuiteSummary run_shortest_path_suite(int graphs, std::uint64_t seed);

// Ad-hoc weighted graph for oracle and unit testing.
WeightedMetagraph make_weighted_graph(
    int node_count, const std::vector<std::tuple<int, int, double>>& edges);

}  // namespace leofusion

#endif  // LEOFUSION_ORACLE_HPP
