#pragma once

#include <cstdint>

namespace llab {

// Process-wide computation limits. Set once before running a session; read
// concurrently by every operation.
struct Limits {
  std::uint64_t step_budget = 1'000'000;  // pair reductions per Buchberger run
  std::int64_t degree_cap = 30;           // weighted degree cap for length enumeration
  int r_max = 10;                         // reduction-number search bound
};

Limits limits();
void set_limits(const Limits& l);

}  // namespace llab
