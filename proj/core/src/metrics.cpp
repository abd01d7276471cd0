#include "leofusion/metrics.hpp"

#include <stdexcept>

namespace leofusion {

double weighted_average_delay(const SimulationResult& result,
                              double threshold_s) {
  if (result.tasks.empty())
    throw std::runtime_error("weighted average delay of an empty result");
  double sum = 0.0;
  for (const TaskRecord& t : result.tasks)
    sum += t.success ? t.delay_s : threshold_s;
  return sum / static_cast<double>(result.tasks.size());
}

DelayBreakdown delay_breakdown(const SimulationResult& result,
                               const std::set<long>* task_filter) {
  DelayBreakdown b;
  for (const TaskRecord& t : result.tasks) {
    if (!t.success) continue;
    if (task_filter && !task_filter->count(t.task_id)) continue;
    for (const SubtaskDecision& d : t.decisions) {
      b.sgl_transmission_s += d.parts.sgl_trans_s;
      b.isl_transmission_s += d.parts.isl_trans_s;
      b.propagation_s += d.parts.prop_s;
      b.computation_s += d.parts.comp_s;
      b.waiting_s += d.parts.wait_s;
      ++b.subtask_count;
    }
  }
  if (b.subtask_count > 0) {
    const double n = static_cast<double>(b.subtask_count);
    b.sgl_transmission_s /= n;
    b.isl_transmission_s /= n;
    b.propagation_s /= n;
    b.computation_s /= n;
    b.waiting_s /= n;
  }
  return b;
}

std::map<TargetKey, long> target_distribution(const SimulationResult& result) {
  std::map<TargetKey, long> counts;
  for (const TaskRecord& t : result.tasks) {
    if (!t.success) continue;
    for (const SubtaskDecision& d : t.decisions)
      ++counts[TargetKey{d.compute_zone, d.classification}];
  }
  return counts;
}

MetricsReport summarize(const SimulationResult& result) {
  MetricsReport report;
  report.task_count = result.tasks.size();
  if (!result.tasks.empty()) {
    report.weighted_average_delay_s =
        weighted_average_delay(result, result.config.threshold_s);
    std::size_t ok = 0;
    for (const TaskRecord& t : result.tasks) ok += t.success ? 1 : 0;
    report.success_rate =
        static_cast<double>(ok) / static_cast<double>(result.tasks.size());
  }
  report.breakdown = delay_breakdown(result);
  report.target_distribution = target_distribution(result);
  return report;
}

std::set<long> invisible_target_task_ids(const SimulationResult& result) {
  std::set<long> ids;
  for (const TaskRecord& t : result.tasks) {
    if (!t.success) continue;
    for (const SubtaskDecision& d : t.decisions)
      if (d.classification == PathClass::invisible_satellite) {
        ids.insert(t.task_id);
        break;
      }
  }
  return ids;
}

}  // namespace leofusion
