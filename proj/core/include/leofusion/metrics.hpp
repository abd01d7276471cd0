#ifndef LEOFUSION_METRICS_HPP
#define LEOFUSION_METRICS_HPP

#include <map>
#include <set>

#include "leofusion/engine.hpp"

namespace leofusion {

// Mean delay components over successful subtasks.
struct DelayBreakdown {
  double sgl_transmission_s = 0.0;
  double isl_transmission_s = 0.0;
  double propagation_s = 0.0;
  double computation_s = 0.0;
  double waiting_s = 0.0;
  std::size_t subtask_count = 0;
};

struct TargetKey {
  ZoneId zone;
  PathClass classification = PathClass::ground;
  auto operator<=>(const TargetKey&) const = default;
};

struct MetricsReport {
  double weighted_average_delay_s = 0.0;
  double success_rate = 0.0;
  DelayBreakdown breakdown;
  std::map<TargetKey, long> target_distribution;
  std::size_t task_count = 0;
};

// Mean per-task delay with failed tasks scored at the threshold.
double weighted_average_delay(const SimulationResult& result,
                              double threshold_s);

// task_filter restricts to the listed task ids (the cross-scheme fairness
// filter); nullptr means every successful task.
DelayBreakdown delay_breakdown(const SimulationResult& result,
                               const std::set<long>* task_filter = nullptr);

// Compute-zone counts per classification over decided subtasks.
std::map<TargetKey, long> target_distribution(const SimulationResult& result);

MetricsReport summarize(const SimulationResult& result);

// Tasks whose fusion decision used an invisible satellite; feeds the
// breakdown comparison filter.
std::set<long> invisible_target_task_ids(const SimulationResult& result);

}  // namespace leofusion

#endif  // LEOFUSION_METRICS_HPP
