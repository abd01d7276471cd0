#ifndef LEOFUSION_RESOURCES_HPP
#define LEOFUSION_RESOURCES_HPP

#include <compare>
#include <map>
#include <vector>

#include "leofusion/orbital.hpp"

namespace leofusion {

// Half-open busy interval [start_s, end_s).
struct Interval {
  double start_s = 0.0;
  double end_s = 0.0;
  auto operator<=>(const Interval&) const = default;
};

// One exclusive-use resource: links carry bits/s, compute nodes carry
// GFLOPS. Busy intervals are pairwise disjoint (one channel).
struct CapacitySchedule {
  double capacity = 0.0;
  std::vector<Interval> busy;  // sorted by start, disjoint
};

// (start, finish) of the earliest FIFO slot that fits demand at full rate.
struct SolvedSlot {
  double start_s = 0.0;
  double finish_s = 0.0;
};

SolvedSlot solve_duration(const CapacitySchedule& schedule, double demand,
                          double earliest_start_s);

enum class ResourceType { compute, isl, sgl, uplink };

// Identity of a reservable resource. `a`/`b` meaning depends on type:
// compute uses a; isl uses the unordered pair; sgl is (serving zone a ->
// destination zone b); uplink is (source zone a -> entry zone b).
// Endpoint links carry a task scope: each task has its own source radio
// and ground station, so uplinks and SGLs queue per task while ISLs and
// compute nodes are shared network-wide.
struct ResourceKey {
  ResourceType type = ResourceType::compute;
  ZoneId a;
  ZoneId b;
  long scope = -1;

  static ResourceKey compute_node(ZoneId z) {
    return ResourceKey{ResourceType::compute, z, ZoneId{}, -1};
  }
  static ResourceKey isl(ZoneId x, ZoneId y) {
    ZonePair p(x, y);
    return ResourceKey{ResourceType::isl, p.a, p.b, -1};
  }
  static ResourceKey sgl(ZoneId zone, ZoneId dest, long task_scope) {
    return ResourceKey{ResourceType::sgl, zone, dest, task_scope};
  }
  static ResourceKey uplink(ZoneId source, ZoneId zone, long task_scope) {
    return ResourceKey{ResourceType::uplink, source, zone, task_scope};
  }
  auto operator<=>(const ResourceKey&) const = default;
};

struct Reservation {
  ResourceKey key;
  Interval interval;
  long owner = -1;  // task id
};

// Result of a what-if delay query; the reservation is tentative until
// committed through the ledger.
struct DelayQuote {
  double delay_s = 0.0;  // waiting + service, relative to earliest_start
  double wait_s = 0.0;
  double service_s = 0.0;
  Reservation reservation;
};

// Time-indexed capacities for every reservable resource. Single-writer:
// weight queries read it, only the decision loop commits.
class ResourceLedger {
 public:
  struct Rates {
    double compute_gflops = 100.0;
    double isl_bps = 5e9;
    double sgl_bps = 0.2e9;
    double uplink_bps = 5e9;
  };

  ResourceLedger() = default;
  explicit ResourceLedger(Rates rates) : rates_(rates) {}

  const Rates& rates() const { return rates_; }

  // Registration. Weight queries require the key to exist already.
  void ensure_snapshot(const Snapshot& snapshot);  // compute + isl schedules
  void ensure_uplink(ZoneId source_zone, ZoneId entry_zone, long task_scope);
  void ensure_sgl(ZoneId serving_zone, ZoneId dest_zone, long task_scope);
  bool has(const ResourceKey& key) const { return schedules_.count(key) > 0; }
  const CapacitySchedule& schedule(const ResourceKey& key) const;

  void commit(const Reservation& r);
  void release(const Reservation& r);

  std::size_t reservation_count() const;

 private:
  Rates rates_;
  std::map<ResourceKey, CapacitySchedule> schedules_;
};

// Waiting-inclusive delay of moving volume_bits over a registered link.
DelayQuote transmission_delay(const ResourceLedger& ledger,
                              const ResourceKey& link, double volume_bits,
                              double earliest_start_s, long owner = -1);

// Waiting-inclusive delay of computing flop_g at a zone's satellite.
DelayQuote computation_delay(const ResourceLedger& ledger, ZoneId node,
                             double flop_g, double earliest_start_s,
                             long owner = -1);

// Ground servers compute for free.
inline DelayQuote ground_computation_delay() { return DelayQuote{}; }

double propagation_delay(double distance_m, double light_speed_m_s);

inline double gb_to_bits(double gb) { return gb * 8e9; }

}  // namespace leofusion

#endif  // LEOFUSION_RESOURCES_HPP
