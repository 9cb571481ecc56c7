#pragma once

#include <cstdint>
#include <vector>

#include "llab/ideal.hpp"

namespace llab {

// U/B inside R^rank, both given by preimage generators (Q*S^rank is
// implicit in each).
struct SubquotientSpec {
  std::size_t rank = 0;
  std::vector<ModuleVector> u;
  std::vector<ModuleVector> b;
};

// λ(U/B) via the presentation R^s/N, N = {a : sum a_i u_i in B}.
std::uint64_t subquotient_length(const SubquotientSpec& spec, const RingPtr& ring);

enum class LengthRoute { Auto, Difference, Presentation };
// λ((A+K)/K). `Difference` uses λ(R/K) - λ(R/(A+K)) and needs R/K Artinian.
std::uint64_t ideal_subquotient_length(const Ideal& a, const Ideal& k, LengthRoute route = LengthRoute::Auto);

// g_i e_j - g_j e_i for i < j.
std::vector<ModuleVector> koszul_boundaries(const std::vector<Polynomial>& gens, const RingPtr& ring);

// Intersection of submodules of R^rank (auxiliary-variable elimination).
Submodule module_intersection(const Submodule& a, const Submodule& b);

// I * R^rank.
Submodule ideal_times_free(const Ideal& i, std::size_t rank);

std::uint64_t h1_length(const std::vector<Polynomial>& gens, const RingPtr& ring);
// λ(δ(I)) = λ(((Z ∩ I F) + B) / B). `gens` must generate I minimally.
std::uint64_t delta_length(const std::vector<Polynomial>& gens, const RingPtr& ring);

}  // namespace llab
