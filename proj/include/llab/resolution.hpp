#pragma once

#include <cstdint>
#include <vector>

#include "llab/ideal.hpp"

namespace llab {

// Minimal graded free resolution of S/(A+Q) over the ambient ring S.
// matrices[i] is the differential F_{i+1} -> F_i; shifts[i] lists the
// degrees of the basis of F_i.
struct ResolutionData {
  std::vector<std::size_t> betti;
  std::vector<PolyMatrix> matrices;
  std::vector<std::vector<std::int64_t>> shifts;
  long pd = 0;
  long depth = 0;
  long dim = 0;
  bool is_cm = false;
  std::size_t cm_type = 0;
  std::size_t ambient_vars = 0;
};

ResolutionData minimal_free_resolution(const Ideal& a);
// Resolution plus depth (Auslander-Buchsbaum), dim, CM flag and type.
ResolutionData homological_profile(const Ideal& a);
bool is_perfect(const Ideal& a);

// d_i * d_{i+1} = 0 for every consecutive pair.
bool composes_to_zero(const ResolutionData& res);
// No differential has an entry with a nonzero constant term.
bool is_minimal(const ResolutionData& res);
// The graded Euler characteristic over prod(1 - t^w_i) reproduces the
// Hilbert function of S/(A+Q) in degrees 0..max_degree.
bool euler_characteristic_matches(const ResolutionData& res, const Ideal& a, std::int64_t max_degree);

}  // namespace llab
