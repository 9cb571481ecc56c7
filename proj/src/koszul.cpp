#include "llab/koszul.hpp"

#include <algorithm>

#include "llab/error.hpp"
#include "llab/settings.hpp"

namespace llab {

namespace {

std::vector<ModuleVector> with_relations(std::vector<ModuleVector> gens, const RingPtr& ring, std::size_t rank) {
  for (const auto& q : ring->relations())
    for (std::size_t a = 0; a < rank; ++a) {
      std::vector<Polynomial> coords(rank, ring->zero());
      coords[a] = q;
      gens.emplace_back(ring, coords);
    }
  return gens;
}

std::uint64_t count_module_standard(const ModuleBasis& basis, std::size_t rank, const RingPtr& ring) {
  const std::int64_t cap = limits().degree_cap;
  std::uint64_t total = 0;
  for (std::size_t pos = 0; pos < rank; ++pos) {
    std::vector<Monomial> lts;
    for (const auto& v : basis.elements())
      if (v.leading().pos == pos) lts.push_back(v.leading().mono);
    auto n = standard_monomial_count(lts, ring->nvars(), cap, ring.get());
    if (!n)
      throw Error(ErrorCode::NotFiniteLength, "coordinate " + std::to_string(pos) +
                                                  " of the presentation has standard monomials beyond degree " +
                                                  std::to_string(cap));
    total += *n;
  }
  return total;
}

void require_m_primary(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  if (gens.empty()) throw Error(ErrorCode::EmptyInput, "no generators");
  if (!is_m_primary(Ideal(ring, gens)))
    throw Error(ErrorCode::NotArtinianIdeal, Ideal(ring, gens).str() + " is not m-primary");
}

}  // namespace

std::uint64_t subquotient_length(const SubquotientSpec& spec, const RingPtr& ring) {
  for (const auto& v : spec.u)
    if (v.rank() != spec.rank) throw Error(ErrorCode::RankMismatch, "U generator rank");
  for (const auto& v : spec.b)
    if (v.rank() != spec.rank) throw Error(ErrorCode::RankMismatch, "B generator rank");
  Submodule u(ring, spec.rank, spec.u);
  for (const auto& v : spec.b)
    if (!u.contains(v)) throw Error(ErrorCode::NotContained, "B generator " + v.str() + " is not in U");
  const std::size_t s = u.generators().size();
  if (s == 0) return 0;
  std::vector<ModuleVector> all = u.generators();
  for (const auto& v : spec.b)
    if (!v.is_zero()) all.push_back(v.in_ring(ring));
  // Kernel of R^s -> U/B: syzygies of (u, b, Q e_a), first s coordinates.
  std::vector<ModuleVector> lifted = with_relations(all, ring, spec.rank);
  BuchbergerResult res = buchberger(ring->ambient(), spec.rank, [&] {
    std::vector<ModuleVector> amb;
    for (const auto& v : lifted) amb.push_back(v.in_ring(ring->ambient()));
    return amb;
  }(), true);
  std::vector<ModuleVector> kernel;
  for (const auto& z : res.syzygies) {
    ModuleVector p = z.slice(0, s);
    if (!p.is_zero()) kernel.push_back(p.in_ring(ring));
  }
  ModuleBasis nb = module_gb(kernel, ring, s);
  return count_module_standard(nb, s, ring);
}

std::uint64_t ideal_subquotient_length(const Ideal& a, const Ideal& k, LengthRoute route) {
  require_same_ring(a.ring(), k.ring(), "ideal_subquotient_length");
  Ideal sum = ideal_sum(a, k);
  if (route == LengthRoute::Auto) route = is_artinian(k) ? LengthRoute::Difference : LengthRoute::Presentation;
  if (route == LengthRoute::Difference) {
    if (!is_artinian(k)) throw Error(ErrorCode::NotArtinian, "R/" + k.str() + " has positive dimension");
    return artinian_length(k) - artinian_length(sum);
  }
  const RingPtr& r = a.ring();
  SubquotientSpec spec;
  spec.rank = 1;
  for (const auto& g : sum.generators()) spec.u.emplace_back(r, std::vector<Polynomial>{g});
  for (const auto& g : k.generators()) spec.b.emplace_back(r, std::vector<Polynomial>{g.in_ring(r)});
  return subquotient_length(spec, r);
}

std::vector<ModuleVector> koszul_boundaries(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  const std::size_t k = gens.size();
  std::vector<ModuleVector> out;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      std::vector<Polynomial> c(k, ring->zero());
      c[j] = gens[i].in_ring(ring);
      c[i] = -gens[j].in_ring(ring);
      out.emplace_back(ring, c);
    }
  return out;
}

Submodule module_intersection(const Submodule& a, const Submodule& b) {
  require_same_ring(a.ring(), b.ring(), "module_intersection");
  if (a.rank() != b.rank()) throw Error(ErrorCode::RankMismatch, "module_intersection");
  const RingPtr& r = a.ring();
  const std::size_t rank = a.rank();
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;
  RingExtension ext = adjoin_variables(r->ambient(), {"t"}, {1}, true, false);
  const RingPtr& big = ext.ring;
  Polynomial t = big->variable(ext.extra[0]);
  Polynomial one_minus_t = big->one() - t;
  std::vector<ModuleVector> gens;
  for (const auto& v : with_relations(a.generators(), r, rank))
    gens.push_back(v.map_variables(big, ext.base_map).times(t));
  for (const auto& v : with_relations(b.generators(), r, rank))
    gens.push_back(v.map_variables(big, ext.base_map).times(one_minus_t));
  ModuleBasis mb = module_gb(gens, big, rank);
  std::vector<std::size_t> inv(big->nvars(), 0);
  for (std::size_t i = 0; i < ext.base_map.size(); ++i) inv[ext.base_map[i]] = i;
  const std::size_t tv = ext.extra[0];
  std::vector<ModuleVector> out;
  for (const auto& v : mb.elements()) {
    bool has_t = std::any_of(v.terms().begin(), v.terms().end(), [&](const VTerm& x) { return x.mono[tv] != 0; });
    if (!has_t) out.push_back(v.map_variables(r, inv));
  }
  return Submodule(r, rank, std::move(out));
}

Submodule ideal_times_free(const Ideal& i, std::size_t rank) {
  const RingPtr& r = i.ring();
  std::vector<ModuleVector> gens;
  for (const auto& g : i.generators())
    for (std::size_t a = 0; a < rank; ++a) {
      std::vector<Polynomial> c(rank, r->zero());
      c[a] = g;
      gens.emplace_back(r, c);
    }
  return Submodule(r, rank, std::move(gens));
}

std::uint64_t h1_length(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  require_m_primary(gens, ring);
  Submodule z = syzygies(gens, ring);
  std::vector<ModuleVector> b = koszul_boundaries(gens, ring);
  for (const auto& v : b)
    if (!z.contains(v)) throw Error(ErrorCode::NotContained, "Koszul boundary outside the cycles");
  return subquotient_length({gens.size(), z.generators(), b}, ring);
}

std::uint64_t delta_length(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  require_m_primary(gens, ring);
  Ideal i(ring, gens);
  if (min_num_gens(i) != gens.size())
    throw Error(ErrorCode::NonMinimalGenerators,
                std::to_string(gens.size()) + " generators given, " + std::to_string(min_num_gens(i)) + " needed");
  const std::size_t k = gens.size();
  Submodule z = syzygies(gens, ring);
  std::vector<ModuleVector> b = koszul_boundaries(gens, ring);
  Submodule zi = module_intersection(z, ideal_times_free(i, k));
  std::vector<ModuleVector> u = zi.generators();
  for (const auto& v : b) u.push_back(v);
  return subquotient_length({k, std::move(u), std::move(b)}, ring);
}

}  // namespace llab
