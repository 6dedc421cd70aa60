#include "etpc/simkit/sweep.hpp"

#include <future>

namespace etpc {

namespace {

SweepEntry run_one(const Plant& plant, const Controller& controller, double x0,
                   const SimulationOptions& options) {
  SweepEntry entry;
  entry.x0 = x0;
  entry.reach = controller.analytic_reach(x0);
  try {
    entry.trajectory = simulate(plant, controller, x0, options);
    entry.settling = empirical_settling_time(*entry.trajectory, controller.params().x_s());
  } catch (const DivergenceError& e) {
    entry.error = e.what();
    entry.diverged_at_step = e.step();
  }
  return entry;
}

}  // namespace

std::vector<SweepEntry> sweep_initial_conditions(const Plant& plant, const Controller& controller,
                                                 std::span<const double> x0_list,
                                                 const SimulationOptions& options,
                                                 SweepExecution execution) {
  std::vector<SweepEntry> entries;
  entries.reserve(x0_list.size());
  if (execution == SweepExecution::Sequential) {
    for (const double x0 : x0_list) {
      entries.push_back(run_one(plant, controller, x0, options));
    }
    return entries;
  }
  std::vector<std::future<SweepEntry>> pending;
  pending.reserve(x0_list.size());
  for (const double x0 : x0_list) {
    pending.push_back(std::async(std::launch::async, run_one, std::cref(plant), std::cref(controller),
                                 x0, std::cref(options)));
  }
  for (auto& f : pending) {
    entries.push_back(f.get());
  }
  return entries;
}

}  // namespace etpc
