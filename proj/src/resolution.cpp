#include "llab/resolution.hpp"

#include <algorithm>
#include <map>

#include "llab/error.hpp"

namespace llab {

namespace {

// The ideal (A + Q) of the ambient ring.
Ideal ambient_ideal(const Ideal& a) {
  RingPtr s = a.ring()->ambient();
  std::vector<Polynomial> g;
  for (const auto& p : a.generators()) g.push_back(p.in_ring(s));
  for (const auto& q : a.ring()->relations()) g.push_back(q.in_ring(s));
  return Ideal(s, std::move(g));
}

void require_homogeneous(const Ideal& amb) {
  if (amb.is_homogeneous()) return;
  for (const auto& g : amb.generators())
    if (!g.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, "generator " + g.str() + " is not homogeneous");
  throw Error(ErrorCode::NotHomogeneous, amb.str() + " is not homogeneous");
}

PolyMatrix columns_to_matrix(const RingPtr& s, std::size_t rows, const std::vector<ModuleVector>& cols) {
  PolyMatrix m(s, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto comps = cols[j].components();
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = comps[i];
  }
  return m;
}

}  // namespace

ResolutionData minimal_free_resolution(const Ideal& a) {
  Ideal amb = ambient_ideal(a);
  const RingPtr& s = amb.ring();
  if (amb.is_unit()) throw Error(ErrorCode::UnitIdeal, "S/(1) is the zero module");
  require_homogeneous(amb);

  ResolutionData res;
  res.ambient_vars = s->nvars();
  res.betti.push_back(1);
  res.shifts.push_back({0});
  res.depth = static_cast<long>(res.ambient_vars);
  std::vector<Polynomial> gens = minimal_generators(amb);
  if (gens.empty()) return res;

  std::vector<ModuleVector> cols;
  std::vector<std::int64_t> col_shifts;
  for (const auto& g : gens) {
    cols.emplace_back(s, std::vector<Polynomial>{g});
    col_shifts.push_back(*g.homogeneous_degree());
  }
  std::size_t rows = 1;
  while (!cols.empty()) {
    res.matrices.push_back(columns_to_matrix(s, rows, cols));
    res.betti.push_back(cols.size());
    res.shifts.push_back(col_shifts);
    Submodule z = syzygies(cols, s);
    std::vector<ModuleVector> next = minimal_module_generators(z.generators(), s, col_shifts);
    std::vector<std::int64_t> next_shifts;
    for (const auto& v : next) next_shifts.push_back(v.degree(col_shifts));
    rows = cols.size();
    cols = std::move(next);
    col_shifts = std::move(next_shifts);
  }
  res.pd = static_cast<long>(res.betti.size()) - 1;
  res.depth = static_cast<long>(res.ambient_vars) - res.pd;
  return res;
}

ResolutionData homological_profile(const Ideal& a) {
  ResolutionData res = minimal_free_resolution(a);
  res.dim = dimension(a);
  res.is_cm = res.depth == res.dim;
  res.cm_type = res.is_cm ? res.betti.back() : 0;
  return res;
}

bool is_perfect(const Ideal& a) {
  Ideal amb = ambient_ideal(a);
  if (amb.is_unit()) throw Error(ErrorCode::UnitIdeal, "perfection of the unit ideal");
  ResolutionData res = minimal_free_resolution(a);
  return codimension(amb) == res.pd;
}

bool composes_to_zero(const ResolutionData& res) {
  for (std::size_t i = 0; i + 1 < res.matrices.size(); ++i)
    if (!(res.matrices[i] * res.matrices[i + 1]).is_zero()) return false;
  return true;
}

bool is_minimal(const ResolutionData& res) {
  for (const auto& m : res.matrices)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m.at(i, j).constant_term() != 0) return false;
  return true;
}

bool euler_characteristic_matches(const ResolutionData& res, const Ideal& a, std::int64_t max_degree) {
  Ideal amb = ambient_ideal(a);
  const Ring& s = *amb.ring();
  // Numerator K(t) truncated at max_degree, then multiplied by 1/(1-t^w).
  std::vector<std::int64_t> series(static_cast<std::size_t>(max_degree + 1), 0);
  for (std::size_t i = 0; i < res.shifts.size(); ++i) {
    const std::int64_t sign = i % 2 == 0 ? 1 : -1;
    for (auto d : res.shifts[i])
      if (d <= max_degree) series[static_cast<std::size_t>(d)] += sign;
  }
  for (auto w : s.weights())
    for (std::size_t d = static_cast<std::size_t>(w); d < series.size(); ++d)
      series[d] += series[d - static_cast<std::size_t>(w)];
  for (std::int64_t d = 0; d <= max_degree; ++d)
    if (series[static_cast<std::size_t>(d)] != static_cast<std::int64_t>(hilbert_function(amb, d))) return false;
  return true;
}

}  // namespace llab
