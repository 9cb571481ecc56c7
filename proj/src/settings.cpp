#include "llab/settings.hpp"

#include <atomic>

namespace llab {

namespace {
std::atomic<std::uint64_t> g_budget{Limits{}.step_budget};
std::atomic<std::int64_t> g_degree_cap{Limits{}.degree_cap};
std::atomic<int> g_r_max{Limits{}.r_max};
}  // namespace

Limits limits() {
  return Limits{g_budget.load(std::memory_order_relaxed), g_degree_cap.load(std::memory_order_relaxed),
                g_r_max.load(std::memory_order_relaxed)};
}

void set_limits(const Limits& l) {
  g_budget.store(l.step_budget);
  g_degree_cap.store(l.degree_cap);
  g_r_max.store(l.r_max);
}

}  // namespace llab
