#include "llab/rees.hpp"

#include "llab/error.hpp"
#include "llab/resolution.hpp"

namespace llab {

namespace {

std::vector<Polynomial> map_all(const std::vector<Polynomial>& v, const RingPtr& target,
                                const std::vector<std::size_t>& var_map) {
  std::vector<Polynomial> out;
  for (const auto& p : v) out.push_back(p.map_variables(target, var_map));
  return out;
}

RingPtr make_ring(const RingPtr& base, std::vector<std::string> names, std::vector<std::int64_t> weights,
                  MonomialOrder order, const std::vector<std::size_t>& base_map) {
  RingPtr r = Ring::create(base->field(), std::move(names), std::move(weights), std::move(order));
  if (!base->has_relations()) return r;
  return r->with_relations(map_all(base->relations(), r, base_map));
}

std::string profile_detail(const ResolutionData& rd) {
  std::string b;
  for (std::size_t i = 0; i < rd.betti.size(); ++i) b += (i ? "," : "") + std::to_string(rd.betti[i]);
  return "betti (" + b + "), depth " + std::to_string(rd.depth) + ", dim " + std::to_string(rd.dim);
}

}  // namespace

ReesPresentation rees_defining_ideal(const Ideal& i) {
  const RingPtr& base = i.ring();
  const std::size_t n = base->nvars();
  ReesPresentation rp;
  rp.base = base;

  const bool homogeneous = i.is_homogeneous();
  if (homogeneous) {
    rp.generators = minimal_generators(i);
    Ideal q = Ideal::zero(base);
    std::size_t given = 0;
    for (const auto& g : i.generators())
      if (!q.contains(g)) ++given;
    if (given != rp.generators.size()) rp.notes.push_back("generators of I replaced by a minimal set");
  } else {
    Ideal q = Ideal::zero(base);
    for (const auto& g : i.generators())
      if (!q.contains(g)) rp.generators.push_back(g);
  }
  if (rp.generators.empty()) throw Error(ErrorCode::InvalidArgument, "the Rees algebra of the zero ideal is R");
  const std::size_t k = rp.generators.size();

  // Elimination ring: t, T_1..T_k, base variables; t in its own block.
  // Giving T_j weight deg f_j + 1 keeps T_j - t f_j homogeneous.
  std::vector<std::string> names;
  std::vector<std::int64_t> weights;
  std::vector<std::string> tnames;
  names.push_back(fresh_name(*base, "t"));
  weights.push_back(1);
  for (std::size_t j = 0; j < k; ++j) {
    std::string tn = fresh_name(*base, "T" + std::to_string(j + 1));
    tnames.push_back(tn);
    names.push_back(tn);
    weights.push_back(homogeneous ? *rp.generators[j].homogeneous_degree() + 1 : 1);
  }
  std::vector<std::size_t> emap;
  for (std::size_t v = 0; v < n; ++v) {
    names.push_back(base->names()[v]);
    weights.push_back(base->weights()[v]);
    emap.push_back(1 + k + v);
  }
  std::vector<bool> mask(names.size(), false);
  mask[0] = true;
  RingPtr elim = make_ring(base, names, weights, MonomialOrder::block(mask), emap);

  std::vector<Polynomial> gens;
  Polynomial t = elim->variable(0);
  for (std::size_t j = 0; j < k; ++j)
    gens.push_back(elim->variable(1 + j) - t * rp.generators[j].map_variables(elim, emap));
  GroebnerBasis g = reduced_gb(gens, elim);

  // Target S[T]: base variables first, T_j of weight deg f_j.
  std::vector<std::string> snames = base->names();
  std::vector<std::int64_t> sweights = base->weights();
  for (std::size_t j = 0; j < k; ++j) {
    snames.push_back(tnames[j]);
    sweights.push_back(homogeneous ? *rp.generators[j].homogeneous_degree() : 1);
  }
  for (std::size_t v = 0; v < n; ++v) rp.base_map.push_back(v);
  for (std::size_t j = 0; j < k; ++j) rp.fiber.push_back(n + j);
  rp.ring = make_ring(base, snames, sweights, MonomialOrder::degrevlex(), rp.base_map);

  std::vector<std::size_t> back(1 + k + n, 0);
  for (std::size_t j = 0; j < k; ++j) back[1 + j] = n + j;
  for (std::size_t v = 0; v < n; ++v) back[1 + k + v] = v;
  std::vector<Polynomial> l;
  for (const auto& p : g.elements())
    if (!p.involves(0)) l.push_back(p.map_variables(rp.ring, back).monic());
  rp.rees = Ideal(rp.ring, std::move(l));
  return rp;
}

Ideal assoc_graded_presentation(const ReesPresentation& rp) {
  std::vector<Polynomial> gens = rp.rees.generators();
  for (const auto& f : rp.generators) gens.push_back(f.map_variables(rp.ring, rp.base_map));
  return Ideal(rp.ring, std::move(gens));
}

Ideal assoc_graded_presentation(const Ideal& i) { return assoc_graded_presentation(rees_defining_ideal(i)); }

bool specialization_holds(const ReesPresentation& rp) {
  RingExtension ext = adjoin_variables(rp.base, {"t"}, {1}, false, true);
  Polynomial t = ext.ring->variable(ext.extra[0]);
  std::vector<Polynomial> images(rp.ring->nvars(), ext.ring->zero());
  for (std::size_t v = 0; v < rp.base_map.size(); ++v) images[rp.base_map[v]] = ext.ring->variable(ext.base_map[v]);
  for (std::size_t j = 0; j < rp.fiber.size(); ++j)
    images[rp.fiber[j]] = rp.generators[j].map_variables(ext.ring, ext.base_map) * t;
  Ideal q = Ideal::zero(ext.ring);
  for (const auto& l : rp.rees.generators())
    if (!q.contains(l.substitute(images))) return false;
  return true;
}

VerificationReport verify_cm_section3(const Ideal& p, const PolySequence& z, const Declarations& decl) {
  VerificationReport rep;
  rep.task = "verify-cm3";
  const RingPtr& r = p.ring();
  for (const auto& q : r->relations())
    if (!q.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, "relation " + q.str() + " is not homogeneous");
  if (!p.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, "p = " + p.str() + " is not homogeneous");
  if (!Ideal(r, z.elements).is_homogeneous())
    throw Error(ErrorCode::NotHomogeneous, "(z) = " + Ideal(r, z.elements).str() + " is not homogeneous");
  Ideal j = check_prime_link_hypotheses(p, z, decl, rep);
  Assessment gor = assess_localization_gorenstein(Ideal::maximal(r), decl.localization_gorenstein);
  rep.hypotheses.push_back(Check{"R is Gorenstein", gor.mode, gor.value, gor.detail});
  ResolutionData pprof = homological_profile(p);
  rep.hypotheses.push_back(
      Check{"p is a Cohen-Macaulay ideal", CheckMode::Computed, pprof.is_cm, profile_detail(pprof)});

  Ideal colon_ideal = colon(j, p);
  Ideal i(r, minimal_generators(colon_ideal));
  rep.notes.push_back("I = J : p = " + i.str());
  ReesPresentation rp = rees_defining_ideal(i);
  for (const auto& note : rp.notes) rep.notes.push_back(note);
  rep.notes.push_back("L = " + Ideal(rp.ring, rp.rees.tidy_generators()).str());

  Ideal gr = assoc_graded_presentation(rp);
  ResolutionData grp = homological_profile(gr);
  rep.conclusions.push_back(
      Check{"gr_I(R) is Cohen-Macaulay", CheckMode::Computed, grp.is_cm, profile_detail(grp)});
  const long d = ring_dimension(r);
  if (d >= 2) {
    ResolutionData rr = homological_profile(rp.rees);
    rep.conclusions.push_back(
        Check{"R[It] is Cohen-Macaulay", CheckMode::Computed, rr.is_cm, profile_detail(rr)});
  } else {
    rep.notes.push_back("dim R < 2: Rees algebra check skipped");
  }
  rep.finalize();
  return rep;
}

}  // namespace llab
