#include "leofusion/resources.hpp"

#include <algorithm>
#include <stdexcept>

namespace leofusion {

SolvedSlot solve_duration(const CapacitySchedule& schedule, double demand,
                          double earliest_start_s) {
  if (demand <= 0) throw std::invalid_argument("demand must be > 0");
  if (schedule.capacity <= 0)
    throw std::invalid_argument("capacity must be > 0");

  const double duration = demand / schedule.capacity;
  double candidate = earliest_start_s;
  // busy intervals are disjoint and sorted; skip those ending before us
  auto it = std::upper_bound(
      schedule.busy.begin(), schedule.busy.end(), candidate,
      [](double t, const Interval& iv) { return t < iv.end_s; });
  for (; it != schedule.busy.end(); ++it) {
    if (candidate + duration <= it->start_s) break;
    candidate = std::max(candidate, it->end_s);
  }
  return SolvedSlot{candidate, candidate + duration};
}

void ResourceLedger::ensure_snapshot(const Snapshot& snapshot) {
  for (ZoneId z : snapshot.vn_nodes)
    schedules_.try_emplace(ResourceKey::compute_node(z),
                           CapacitySchedule{rates_.compute_gflops, {}});
  for (const ZonePair& e : snapshot.isl_edges)
    schedules_.try_emplace(ResourceKey::isl(e.a, e.b),
                           CapacitySchedule{rates_.isl_bps, {}});
}

void ResourceLedger::ensure_uplink(ZoneId source_zone, ZoneId entry_zone,
                                   long task_scope) {
  schedules_.try_emplace(
      ResourceKey::uplink(source_zone, entry_zone, task_scope),
      CapacitySchedule{rates_.uplink_bps, {}});
}

void ResourceLedger::ensure_sgl(ZoneId serving_zone, ZoneId dest_zone,
                                long task_scope) {
  schedules_.try_emplace(ResourceKey::sgl(serving_zone, dest_zone, task_scope),
                         CapacitySchedule{rates_.sgl_bps, {}});
}

const CapacitySchedule& ResourceLedger::schedule(const ResourceKey& key) const {
  auto it = schedules_.find(key);
  if (it == schedules_.end())
    throw std::invalid_argument("unknown resource in ledger");
  return it->second;
}

void ResourceLedger::commit(const Reservation& r) {
  if (!(r.interval.end_s > r.interval.start_s))
    throw std::invalid_argument("reservation interval must have end > start");
  auto it = schedules_.find(r.key);
  if (it == schedules_.end())
    throw std::invalid_argument("unknown resource in ledger");
  auto& busy = it->second.busy;
  auto pos = std::lower_bound(busy.begin(), busy.end(), r.interval,
                              [](const Interval& a, const Interval& b) {
                                return a.start_s < b.start_s;
                              });
  if (pos != busy.begin()) {
    auto prev = std::prev(pos);
    if (prev->end_s > r.interval.start_s)
      throw std::runtime_error("reservation overlaps an existing one");
  }
  if (pos != busy.end() && r.interval.end_s > pos->start_s)
    throw std::runtime_error("reservation overlaps an existing one");
  busy.insert(pos, r.interval);
}

void ResourceLedger::release(const Reservation& r) {
  auto it = schedules_.find(r.key);
  if (it == schedules_.end())
    throw std::invalid_argument("unknown resource in ledger");
  auto& busy = it->second.busy;
  auto pos = std::find(busy.begin(), busy.end(), r.interval);
  if (pos == busy.end())
    throw std::runtime_error("release of unknown reservation");
  busy.erase(pos);
}

std::size_t ResourceLedger::reservation_count() const {
  std::size_t n = 0;
  for (const auto& [key, sched] : schedules_) n += sched.busy.size();
  return n;
}

namespace {

DelayQuote quote(const ResourceKey& key, const CapacitySchedule& sched,
                 double demand, double earliest_start_s, long owner) {
  const SolvedSlot slot = solve_duration(sched, demand, earliest_start_s);
  DelayQuote q;
  q.wait_s = slot.start_s - earliest_start_s;
  q.service_s = slot.finish_s - slot.start_s;
  q.delay_s = slot.finish_s - earliest_start_s;
  q.reservation = Reservation{key, Interval{slot.start_s, slot.finish_s}, owner};
  return q;
}

}  // namespace

DelayQuote transmission_delay(const ResourceLedger& ledger,
                              const ResourceKey& link, double volume_bits,
                              double earliest_start_s, long owner) {
  return quote(link, ledger.schedule(link), volume_bits, earliest_start_s,
               owner);
}

DelayQuote computation_delay(const ResourceLedger& ledger, ZoneId node,
                             double flop_g, double earliest_start_s,
                             long owner) {
  const ResourceKey key = ResourceKey::compute_node(node);
  return quote(key, ledger.schedule(key), flop_g, earliest_start_s, owner);
}

double propagation_delay(double distance_m, double light_speed_m_s) {
  if (distance_m < 0) throw std::invalid_argument("distance must be >= 0");
  return distance_m / light_speed_m_s;
}

}  // namespace leofusion
