#include "llab/ideal.hpp"

#include <algorithm>
#include <functional>

#include "llab/error.hpp"

namespace llab {

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    require_same_ring(g.ring(), ring_, "ideal");
    if (!g.is_zero()) gens_.push_back(g.in_ring(ring_));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = ring->one();
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::maximal(RingPtr ring) {
  auto vars = ring->variables();
  return Ideal(std::move(ring), std::move(vars));
}

const GroebnerBasis& Ideal::gb() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->gb) return *cache_->gb;
  }
  GroebnerBasis b = reduced_gb(gens_, ring_);
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->gb) cache_->gb = std::move(b);
  return *cache_->gb;
}

bool Ideal::is_zero() const {
  if (!ring_->has_relations()) return gens_.empty();
  Ideal q = Ideal::zero(ring_);
  return std::all_of(gens_.begin(), gens_.end(), [&](const Polynomial& g) { return q.contains(g); });
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(ring_, other.ring_, "ideal containment");
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::is_homogeneous() const {
  const auto& el = gb().elements();
  return std::all_of(el.begin(), el.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

bool Ideal::is_proper_local() const {
  Ideal m = Ideal::maximal(ring_);
  return m.contains(*this);
}

Ideal Ideal::in_ring(const RingPtr& target) const {
  std::vector<Polynomial> g;
  for (const auto& p : gens_) g.push_back(p.in_ring(target));
  return Ideal(target, std::move(g));
}

std::vector<Polynomial> Ideal::tidy_generators() const {
  if (is_unit()) return {ring_->one()};
  if (is_homogeneous()) return minimal_generators(*this);
  std::vector<Polynomial> out;
  Ideal q = Ideal::zero(ring_);
  for (const auto& g : gb().elements())
    if (!q.contains(g)) out.push_back(g);
  return out;
}

bool Ideal::operator==(const Ideal& other) const {
  if (!same_ambient(ring_, other.ring_)) return false;
  return gb().elements() == other.gb().elements();
}

std::string Ideal::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].str();
  return s + ")";
}

// ---------------------------------------------------------------------------
// Arithmetic

namespace {

void push_unique(std::vector<Polynomial>& out, Polynomial p) {
  if (p.is_zero()) return;
  p = p.monic();
  if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
}

// Generator list of the same ideal with no element of Q, preferring the
// shorter of the given list and the GB.
std::vector<Polynomial> compact(const Ideal& a) {
  Ideal q = Ideal::zero(a.ring());
  std::vector<Polynomial> from_gb;
  for (const auto& g : a.gb().elements())
    if (!q.contains(g)) from_gb.push_back(g);
  if (from_gb.size() < a.generators().size()) return from_gb;
  return a.generators();
}

}  // namespace

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal sum");
  std::vector<Polynomial> g;
  for (const auto& p : a.generators()) push_unique(g, p);
  for (const auto& p : b.generators()) push_unique(g, p.in_ring(a.ring()));
  return Ideal(a.ring(), std::move(g));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal product");
  std::vector<Polynomial> g;
  for (const auto& p : a.generators())
    for (const auto& q : b.generators()) push_unique(g, p * q.in_ring(a.ring()));
  return Ideal(a.ring(), std::move(g));
}

Ideal ideal_power(const Ideal& a, long k) {
  if (k < 0) throw Error(ErrorCode::NegativeExponent, "ideal power " + std::to_string(k));
  Ideal acc = Ideal::unit(a.ring());
  Ideal base(a.ring(), compact(a));
  for (long i = 0; i < k; ++i) {
    acc = i == 0 ? base : ideal_product(acc, base);
    acc = Ideal(a.ring(), compact(acc));
  }
  return acc;
}

Ideal ideal_arith(const Ideal& a, const Ideal& b, IdealOp kind) {
  switch (kind) {
    case IdealOp::Sum: return ideal_sum(a, b);
    case IdealOp::Product: return ideal_product(a, b);
    case IdealOp::Power: break;
  }
  throw Error(ErrorCode::InvalidArgument, "power takes an exponent, not an ideal");
}

bool equals(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "equals");
  return a.gb().elements() == b.in_ring(a.ring()).gb().elements();
}

// ---------------------------------------------------------------------------
// Auxiliary rings

std::string fresh_name(const Ring& ring, const std::string& stem) {
  if (!ring.index_of(stem)) return stem;
  for (int i = 1;; ++i) {
    std::string c = stem + "_" + std::to_string(i);
    if (!ring.index_of(c)) return c;
  }
}

RingExtension adjoin_variables(const RingPtr& base, const std::vector<std::string>& stems,
                               const std::vector<std::int64_t>& weights, bool eliminate, bool keep_relations) {
  const std::size_t k = stems.size();
  std::vector<std::string> names;
  std::vector<std::int64_t> w;
  for (std::size_t i = 0; i < k; ++i) {
    std::string n = fresh_name(*base, stems[i]);
    while (std::find(names.begin(), names.end(), n) != names.end()) n += "_";
    names.push_back(n);
    w.push_back(weights.empty() ? 1 : weights[i]);
  }
  for (std::size_t i = 0; i < base->nvars(); ++i) {
    names.push_back(base->names()[i]);
    w.push_back(base->weights()[i]);
  }
  MonomialOrder order = MonomialOrder::degrevlex();
  if (eliminate) {
    std::vector<bool> mask(names.size(), false);
    for (std::size_t i = 0; i < k; ++i) mask[i] = true;
    order = MonomialOrder::block(std::move(mask));
  }
  RingExtension ext;
  ext.ring = Ring::create(base->field(), std::move(names), std::move(w), std::move(order));
  for (std::size_t i = 0; i < k; ++i) ext.extra.push_back(i);
  for (std::size_t i = 0; i < base->nvars(); ++i) ext.base_map.push_back(k + i);
  if (keep_relations && base->has_relations()) {
    std::vector<Polynomial> rel;
    for (const auto& q : base->relations()) rel.push_back(q.map_variables(ext.ring, ext.base_map));
    ext.ring = ext.ring->with_relations(rel);
  }
  return ext;
}

namespace {

// Inverse of a variable embedding, defined on the image.
std::vector<std::size_t> pullback_map(const RingExtension& ext, std::size_t nvars_big) {
  std::vector<std::size_t> inv(nvars_big, 0);
  for (std::size_t i = 0; i < ext.base_map.size(); ++i) inv[ext.base_map[i]] = i;
  return inv;
}

bool involves_any(const Polynomial& f, const std::vector<std::size_t>& vars) {
  return std::any_of(vars.begin(), vars.end(), [&](std::size_t v) { return f.involves(v); });
}

// (A + Q) as generators of the ambient ring.
std::vector<Polynomial> preimage_generators(const Ideal& a) {
  RingPtr s = a.ring()->ambient();
  std::vector<Polynomial> g;
  for (const auto& p : a.generators()) g.push_back(p.in_ring(s));
  for (const auto& q : a.ring()->relations()) g.push_back(q.in_ring(s));
  return g;
}

// Intersection of two ideals of the ambient ring given by generators.
std::vector<Polynomial> ambient_intersection(const RingPtr& s, const std::vector<Polynomial>& a,
                                             const std::vector<Polynomial>& b) {
  RingExtension ext = adjoin_variables(s, {"t"}, {1}, true, false);
  const RingPtr& big = ext.ring;
  Polynomial t = big->variable(ext.extra[0]);
  Polynomial one_minus_t = big->one() - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a) gens.push_back(t * f.map_variables(big, ext.base_map));
  for (const auto& f : b) gens.push_back(one_minus_t * f.map_variables(big, ext.base_map));
  GroebnerBasis g = reduced_gb(gens, big);
  auto inv = pullback_map(ext, big->nvars());
  std::vector<Polynomial> out;
  for (const auto& p : g.elements())
    if (!involves_any(p, ext.extra)) out.push_back(p.map_variables(s, inv));
  return out;
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "intersect");
  Ideal bb = b.in_ring(a.ring());
  if (a.contains(bb)) return bb;
  if (bb.contains(a)) return a;
  RingPtr s = a.ring()->ambient();
  auto gens = ambient_intersection(s, preimage_generators(a), preimage_generators(bb));
  std::vector<Polynomial> in_r;
  for (const auto& g : gens) in_r.push_back(g.in_ring(a.ring()));
  return Ideal(a.ring(), std::move(in_r));
}

Ideal colon(const Ideal& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring(), "colon");
  if (a.contains(b)) return Ideal::unit(a.ring());
  RingPtr s = a.ring()->ambient();
  Polynomial bs = b.in_ring(s);
  auto inter = ambient_intersection(s, preimage_generators(a), {bs});
  std::vector<Polynomial> q;
  for (const auto& f : inter) q.push_back(divide_exact(f, bs).in_ring(a.ring()));
  return Ideal(a.ring(), std::move(q));
}

Ideal colon(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "colon");
  std::optional<Ideal> acc;
  for (const auto& g : b.generators()) {
    Ideal c = colon(a, g.in_ring(a.ring()));
    if (c.is_unit()) continue;
    acc = acc ? intersect(*acc, c) : c;
  }
  if (!acc) return Ideal::unit(a.ring());
  return *acc;
}

Ideal eliminate(const Ideal& a, const std::vector<std::size_t>& vars) {
  const RingPtr& r = a.ring();
  RingPtr s = r->ambient();
  std::vector<bool> mask(r->nvars(), false);
  for (auto v : vars) {
    if (v >= r->nvars()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    mask[v] = true;
  }
  if (std::all_of(mask.begin(), mask.end(), [](bool m) { return m; }))
    throw Error(ErrorCode::EliminateAll, "cannot eliminate every variable");
  RingPtr blk = s->with_order(MonomialOrder::block(mask));
  std::vector<Polynomial> gens;
  for (const auto& g : preimage_generators(a)) gens.push_back(g.in_ring(blk));
  GroebnerBasis g = reduced_gb(gens, blk);
  std::vector<Polynomial> out;
  for (const auto& p : g.elements())
    if (!involves_any(p, vars)) out.push_back(p.in_ring(s));
  return Ideal(s, std::move(out));
}

// ---------------------------------------------------------------------------
// Monomial combinatorics

std::optional<std::uint64_t> standard_monomial_count(std::span<const Monomial> leading, std::size_t nvars,
                                                     std::optional<std::int64_t> degree_cap, const Ring* ring) {
  for (const auto& m : leading)
    if (m.is_one()) return 0;
  std::vector<std::int32_t> bound(nvars, -1);
  for (const auto& m : leading) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i]) {
        ++support;
        var = i;
      }
    if (support == 1 && (bound[var] < 0 || m[var] < bound[var])) bound[var] = m[var];
  }
  for (auto b : bound)
    if (b < 0) return std::nullopt;

  std::uint64_t count = 0;
  bool over_cap = false;
  Monomial cur(nvars);
  auto divisible = [&](const Monomial& x) {
    return std::any_of(leading.begin(), leading.end(), [&](const Monomial& l) { return l.divides(x); });
  };
  std::function<void(std::size_t)> walk = [&](std::size_t var) {
    if (var == nvars) {
      ++count;
      if (degree_cap && ring && ring->degree(cur) > *degree_cap) over_cap = true;
      return;
    }
    for (std::int32_t e = 0; e < bound[var]; ++e) {
      cur.set(var, e);
      if (divisible(cur)) break;
      walk(var + 1);
      if (over_cap) break;
    }
    cur.set(var, 0);
  };
  walk(0);
  if (over_cap) return std::nullopt;
  return count;
}

long independent_set_dimension(std::span<const Monomial> leading, std::size_t nvars) {
  if (nvars > 24) throw Error(ErrorCode::NotComputable, "too many variables for the dimension search");
  std::vector<std::uint32_t> supports;
  for (const auto& m : leading) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i]) s |= 1u << i;
    supports.push_back(s);
  }
  long best = 0;
  for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
    long size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool ok = std::none_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & ~mask) == 0; });
    if (ok) best = size;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Dimension and length

long dimension(const Ideal& a) {
  const GroebnerBasis& g = a.gb();
  if (g.is_unit()) throw Error(ErrorCode::UnitIdeal, "dimension of R/(1)");
  auto lts = g.leading_monomials();
  return independent_set_dimension(lts, a.ring()->nvars());
}

long ring_dimension(const RingPtr& ring) { return dimension(Ideal::zero(ring)); }

long codimension(const Ideal& a) { return ring_dimension(a.ring()) - dimension(a); }

bool is_artinian(const Ideal& a) {
  auto lts = a.gb().leading_monomials();
  return standard_monomial_count(lts, a.ring()->nvars()).has_value();
}

std::uint64_t artinian_length(const Ideal& a) {
  auto lts = a.gb().leading_monomials();
  auto n = standard_monomial_count(lts, a.ring()->nvars());
  if (!n) throw Error(ErrorCode::NotArtinian, "R/" + a.str() + " has positive dimension");
  return *n;
}

bool is_m_primary(const Ideal& a) {
  if (a.is_unit() || !is_artinian(a)) return false;
  const std::uint64_t len = artinian_length(a);
  for (const auto& x : a.ring()->variables())
    if (!a.contains(x.pow(static_cast<unsigned>(len)))) return false;
  return true;
}

std::uint64_t hilbert_function(const Ideal& a, std::int64_t d) {
  if (d < 0) return 0;
  const Ring& r = *a.ring();
  auto lts = a.gb().leading_monomials();
  const std::size_t n = r.nvars();
  std::uint64_t count = 0;
  Monomial cur(n);
  auto divisible = [&](const Monomial& x) {
    return std::any_of(lts.begin(), lts.end(), [&](const Monomial& l) { return l.divides(x); });
  };
  std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t var, std::int64_t rest) {
    if (var + 1 == n) {
      if (rest % r.weights()[var] != 0) return;
      cur.set(var, static_cast<std::int32_t>(rest / r.weights()[var]));
      if (!divisible(cur)) ++count;
      cur.set(var, 0);
      return;
    }
    for (std::int64_t e = 0; e * r.weights()[var] <= rest; ++e) {
      cur.set(var, static_cast<std::int32_t>(e));
      if (divisible(cur)) break;
      walk(var + 1, rest - e * r.weights()[var]);
    }
    cur.set(var, 0);
  };
  walk(0, d);
  return count;
}

// ---------------------------------------------------------------------------
// Minimal generators

std::vector<Polynomial> minimal_generators(const Ideal& a) {
  const RingPtr& r = a.ring();
  if (a.is_unit()) return {r->one()};
  if (a.is_homogeneous()) {
    bool gens_homogeneous = std::all_of(a.generators().begin(), a.generators().end(),
                                        [](const Polynomial& g) { return g.is_homogeneous(); });
    std::vector<Polynomial> cand = gens_homogeneous ? a.generators() : a.gb().elements();
    std::stable_sort(cand.begin(), cand.end(),
                     [](const Polynomial& x, const Polynomial& y) { return x.degree() < y.degree(); });
    std::vector<Polynomial> kept;
    for (const auto& g : cand) {
      if (Ideal(r, kept).contains(g)) continue;
      kept.push_back(g);
    }
    return kept;
  }
  if (is_m_primary(a)) {
    Ideal ma = ideal_product(Ideal::maximal(r), a);
    std::vector<Polynomial> kept;
    for (const auto& g : a.generators()) {
      Ideal test = ideal_sum(Ideal(r, kept), ma);
      if (test.contains(g)) continue;
      kept.push_back(g);
    }
    return kept;
  }
  throw Error(ErrorCode::NotComputable, a.str() + " is neither m-primary nor homogeneous");
}

std::size_t min_num_gens(const Ideal& a) {
  if (a.is_unit()) throw Error(ErrorCode::UnitIdeal, "minimal generators of the unit ideal");
  const RingPtr& r = a.ring();
  if (!a.is_homogeneous() && is_m_primary(a)) {
    Ideal ma = ideal_product(Ideal::maximal(r), a);
    return artinian_length(ma) - artinian_length(a);
  }
  return minimal_generators(a).size();
}

// ---------------------------------------------------------------------------
// Regularity tests

bool is_regular_sequence(const PolySequence& z, const RingPtr& ring, bool ambient_cm) {
  for (const auto& f : z.elements) {
    require_same_ring(f.ring(), ring, "is_regular_sequence");
    if (f.constant_term() != 0) throw Error(ErrorCode::NotProper, f.str() + " is a unit in the local ring");
  }
  Ideal zi(ring, z.elements);
  if (zi.is_unit()) throw Error(ErrorCode::NotProper, "(z) is the unit ideal");
  if (!ambient_cm && ring->has_relations())
    throw Error(ErrorCode::UndeclaredCM, "R has relations and is neither verified nor declared Cohen-Macaulay");
  return ring_dimension(ring) - dimension(zi) == static_cast<long>(z.size());
}

bool symbolic_square_contains(const Polynomial& z, const Ideal& p) {
  require_same_ring(z.ring(), p.ring(), "symbolic_square_contains");
  if (!p.contains(z)) throw Error(ErrorCode::NotInPrime, z.str() + " is not in " + p.str());
  Ideal p2 = ideal_power(p, 2);
  if (p2.contains(z)) return true;
  Ideal c = colon(p2, z.in_ring(p.ring()));
  const auto& el = c.gb().elements();
  return std::any_of(el.begin(), el.end(), [&](const Polynomial& g) { return !p.contains(g); });
}

bool regular_at(const Ideal& q, const Ideal& p) {
  require_same_ring(q.ring(), p.ring(), "regular_at");
  if (!q.ring()->field().is_rationals())
    throw Error(ErrorCode::PositiveCharUnsupported, "the Jacobian criterion needs characteristic 0");
  std::vector<Polynomial> rel;
  for (const auto& g : q.generators()) rel.push_back(g.in_ring(p.ring()));
  for (const auto& g : rel)
    if (!p.contains(g)) throw Error(ErrorCode::NotContaining, g.str() + " is not in " + p.str());
  if (rel.empty()) return true;
  const RingPtr& s = q.ring();
  const std::size_t n = s->nvars();
  const long c = static_cast<long>(n) - dimension(Ideal(s->ambient(), q.generators()));
  if (c <= 0) return true;
  std::vector<std::vector<Polynomial>> jac;
  for (const auto& g : rel) {
    std::vector<Polynomial> row;
    for (std::size_t v = 0; v < n; ++v) row.push_back(g.derivative(v));
    jac.push_back(std::move(row));
  }
  PolyMatrix j(p.ring(), std::move(jac));
  // Walk all c-subsets of rows and columns.
  auto subsets = [](std::size_t total, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (cur.size() == k) {
        out.push_back(cur);
        return;
      }
      for (std::size_t i = start; i < total; ++i) {
        cur.push_back(i);
        rec(i + 1);
        cur.pop_back();
      }
    };
    rec(0);
    return out;
  };
  const auto k = static_cast<std::size_t>(c);
  if (k > rel.size()) return false;
  for (const auto& rows : subsets(rel.size(), k))
    for (const auto& cols : subsets(n, k))
      if (!p.contains(j.submatrix(rows, cols).determinant())) return true;
  return false;
}

bool regular_at(const Ideal& p) {
  return regular_at(Ideal(p.ring(), p.ring()->relations()), p);
}

}  // namespace llab
