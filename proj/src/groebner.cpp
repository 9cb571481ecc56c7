#include "llab/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "llab/error.hpp"
#include "llab/settings.hpp"

namespace llab {

int compare_terms(const Ring& ring, const Monomial& a, std::uint32_t pa, const Monomial& b, std::uint32_t pb) {
  int c = ring.compare(a, b);
  if (c != 0) return c;
  if (pa == pb) return 0;
  return pa < pb ? 1 : -1;
}

namespace {

// Uniform access to polynomial terms (position 0) and module terms.
inline std::uint32_t pos_of(const Term&) { return 0; }
inline std::uint32_t pos_of(const VTerm& t) { return t.pos; }
inline Term make_term(Monomial m, std::uint32_t, Coeff c) { return Term{std::move(m), std::move(c)}; }
inline VTerm make_vterm(Monomial m, std::uint32_t p, Coeff c) { return VTerm{std::move(m), p, std::move(c)}; }

template <class T>
T build(Monomial m, std::uint32_t p, Coeff c) {
  if constexpr (std::is_same_v<T, Term>)
    return make_term(std::move(m), p, std::move(c));
  else
    return make_vterm(std::move(m), p, std::move(c));
}

// Returns f[start..] - c * m * g as a fresh sorted list.
template <class T>
std::vector<T> sub_mul(const Ring& ring, const std::vector<T>& f, std::size_t start, const Coeff& c,
                       const Monomial& m, const std::vector<T>& g) {
  const Field& k = ring.field();
  std::vector<T> out;
  out.reserve(f.size() - start + g.size());
  std::size_t i = start, j = 0;
  Monomial gm;
  bool have_gm = false;
  while (i < f.size() || j < g.size()) {
    if (j < g.size() && !have_gm) {
      gm = g[j].mono * m;
      have_gm = true;
    }
    int cmp;
    if (i == f.size()) cmp = -1;
    else if (j == g.size()) cmp = 1;
    else cmp = compare_terms(ring, f[i].mono, pos_of(f[i]), gm, pos_of(g[j]));
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back(build<T>(std::move(gm), pos_of(g[j]), k.neg(k.mul(c, g[j].coeff))));
      ++j;
      have_gm = false;
    } else {
      Coeff s = k.sub(f[i].coeff, k.mul(c, g[j].coeff));
      if (s != 0) out.push_back(build<T>(std::move(gm), pos_of(g[j]), std::move(s)));
      ++i;
      ++j;
      have_gm = false;
    }
  }
  return out;
}

template <class T>
std::vector<T> add_lists(const Ring& ring, const std::vector<T>& a, const std::vector<T>& b, bool subtract) {
  const Field& k = ring.field();
  std::vector<T> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size()) cmp = -1;
    else if (j == b.size()) cmp = 1;
    else cmp = compare_terms(ring, a[i].mono, pos_of(a[i]), b[j].mono, pos_of(b[j]));
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      T t = b[j++];
      if (subtract) t.coeff = k.neg(t.coeff);
      out.push_back(std::move(t));
    } else {
      Coeff s = subtract ? k.sub(a[i].coeff, b[j].coeff) : k.add(a[i].coeff, b[j].coeff);
      if (s != 0) {
        T t = a[i];
        t.coeff = std::move(s);
        out.push_back(std::move(t));
      }
      ++i;
      ++j;
    }
  }
  return out;
}

// Full reduction of f by monic basis elements; the remainder has no term
// divisible by a leading term of the basis.
template <class T>
std::vector<T> full_reduce(const Ring& ring, std::vector<T> f, const std::vector<const std::vector<T>*>& basis) {
  std::vector<T> rem;
  std::size_t off = 0;
  while (off < f.size()) {
    const T& lt = f[off];
    const std::vector<T>* red = nullptr;
    for (const auto* g : basis) {
      const T& gl = g->front();
      if (pos_of(gl) == pos_of(lt) && gl.mono.divides(lt.mono)) {
        red = g;
        break;
      }
    }
    if (!red) {
      rem.push_back(f[off++]);
      continue;
    }
    const T& gl = red->front();
    Coeff c = ring.field().div(lt.coeff, gl.coeff);
    Monomial m = lt.mono / gl.mono;
    f = sub_mul(ring, f, off, c, m, *red);
    off = 0;
  }
  return rem;
}

std::vector<VTerm> scale_terms(const Ring& ring, const std::vector<VTerm>& v, const Coeff& c) {
  std::vector<VTerm> out = v;
  for (auto& t : out) t.coeff = ring.field().mul(t.coeff, c);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ModuleVector

ModuleVector::ModuleVector(RingPtr ring, const std::vector<Polynomial>& coords)
    : ring_(std::move(ring)), rank_(coords.size()) {
  std::vector<VTerm> all;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    require_same_ring(ring_, coords[i].ring() ? coords[i].ring() : ring_, "module vector");
    for (const auto& t : coords[i].terms()) all.push_back({t.mono, static_cast<std::uint32_t>(i), t.coeff});
  }
  const Ring& r = *ring_;
  std::sort(all.begin(), all.end(), [&](const VTerm& a, const VTerm& b) {
    return compare_terms(r, a.mono, a.pos, b.mono, b.pos) > 0;
  });
  terms_ = std::move(all);
}

ModuleVector::ModuleVector(RingPtr ring, std::size_t rank, std::vector<VTerm> terms)
    : ring_(std::move(ring)), rank_(rank) {
  const Ring& r = *ring_;
  const Field& k = r.field();
  for (auto& t : terms) {
    if (t.pos >= rank) throw Error(ErrorCode::RankMismatch, "term position outside the module rank");
    t.coeff = k.from_rational(t.coeff);
  }
  std::sort(terms.begin(), terms.end(), [&](const VTerm& a, const VTerm& b) {
    return compare_terms(r, a.mono, a.pos, b.mono, b.pos) > 0;
  });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().pos == t.pos && terms_.back().mono == t.mono) {
      terms_.back().coeff = k.add(terms_.back().coeff, t.coeff);
    } else {
      if (!terms_.empty() && terms_.back().coeff == 0) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && terms_.back().coeff == 0) terms_.pop_back();
}

ModuleVector ModuleVector::unit(RingPtr ring, std::size_t rank, std::size_t i) {
  std::size_t n = ring->nvars();
  ModuleVector v(std::move(ring), rank);
  v.terms_.push_back({Monomial(n), static_cast<std::uint32_t>(i), Coeff(1)});
  return v;
}

const VTerm& ModuleVector::leading() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading term of the zero vector");
  return terms_.front();
}

Polynomial ModuleVector::component(std::size_t i) const {
  std::vector<Term> t;
  for (const auto& vt : terms_)
    if (vt.pos == i) t.push_back({vt.mono, vt.coeff});
  return Polynomial(ring_, std::move(t));
}

std::vector<Polynomial> ModuleVector::components() const {
  std::vector<std::vector<Term>> parts(rank_);
  for (const auto& vt : terms_) parts[vt.pos].push_back({vt.mono, vt.coeff});
  std::vector<Polynomial> out;
  out.reserve(rank_);
  for (auto& p : parts) out.emplace_back(ring_, std::move(p));
  return out;
}

bool ModuleVector::is_homogeneous(std::span<const std::int64_t> shifts) const {
  if (terms_.empty()) return true;
  std::int64_t d = degree(shifts);
  for (const auto& t : terms_)
    if (ring_->degree(t.mono) + shifts[t.pos] != d) return false;
  return true;
}

std::int64_t ModuleVector::degree(std::span<const std::int64_t> shifts) const {
  const VTerm& t = leading();
  return ring_->degree(t.mono) + shifts[t.pos];
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
  require_same_ring(ring_, o.ring_, "module add");
  if (rank_ != o.rank_) throw Error(ErrorCode::RankMismatch, "module add");
  ModuleVector r(ring_, rank_);
  r.terms_ = add_lists(*ring_, terms_, o.terms_, false);
  return r;
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const {
  require_same_ring(ring_, o.ring_, "module sub");
  if (rank_ != o.rank_) throw Error(ErrorCode::RankMismatch, "module sub");
  ModuleVector r(ring_, rank_);
  r.terms_ = add_lists(*ring_, terms_, o.terms_, true);
  return r;
}

ModuleVector ModuleVector::scaled(const Coeff& c) const {
  if (c == 0) return ModuleVector(ring_, rank_);
  ModuleVector r(ring_, rank_);
  r.terms_ = scale_terms(*ring_, terms_, c);
  return r;
}

ModuleVector ModuleVector::mul_term(const Monomial& m, const Coeff& c) const {
  ModuleVector r(ring_, rank_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.pos, ring_->field().mul(t.coeff, c)});
  return r;
}

ModuleVector ModuleVector::times(const Polynomial& f) const {
  ModuleVector acc(ring_, rank_);
  for (const auto& t : f.terms()) acc = acc + mul_term(t.mono, t.coeff);
  return acc;
}

ModuleVector ModuleVector::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(terms_.front().coeff));
}

ModuleVector ModuleVector::slice(std::size_t first, std::size_t count) const {
  ModuleVector r(ring_, count);
  for (const auto& t : terms_)
    if (t.pos >= first && t.pos < first + count)
      r.terms_.push_back({t.mono, static_cast<std::uint32_t>(t.pos - first), t.coeff});
  return r;
}

ModuleVector ModuleVector::embedded(std::size_t new_rank, std::size_t offset) const {
  std::vector<VTerm> t = terms_;
  for (auto& vt : t) vt.pos += static_cast<std::uint32_t>(offset);
  return ModuleVector(ring_, new_rank, std::move(t));
}

ModuleVector ModuleVector::map_variables(const RingPtr& target, std::span<const std::size_t> var_map) const {
  std::vector<VTerm> out;
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i]) m.set(var_map[i], m[var_map[i]] + t.mono[i]);
    out.push_back({std::move(m), t.pos, t.coeff});
  }
  return ModuleVector(target, rank_, std::move(out));
}

ModuleVector ModuleVector::in_ring(const RingPtr& target) const {
  if (target->same_ambient(*ring_)) {
    ModuleVector r = *this;
    r.ring_ = target;
    return r;
  }
  return ModuleVector(target, rank_, terms_);
}

bool ModuleVector::operator==(const ModuleVector& o) const {
  if (rank_ != o.rank_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].pos != o.terms_[i].pos || !(terms_[i].mono == o.terms_[i].mono) ||
        terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

std::string ModuleVector::str() const {
  std::string s = "(";
  auto comps = components();
  for (std::size_t i = 0; i < comps.size(); ++i) s += (i ? ", " : "") + comps[i].str();
  return s + ")";
}

// ---------------------------------------------------------------------------
// Bases and normal forms

bool GroebnerBasis::is_unit() const {
  return std::any_of(elements_.begin(), elements_.end(), [](const Polynomial& p) { return p.is_constant() && !p.is_zero(); });
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  require_same_ring(f.ring(), ring_, "normal_form");
  std::vector<const std::vector<Term>*> basis;
  for (const auto& g : elements_) basis.push_back(&g.terms());
  return Polynomial(f.ring(), full_reduce(*ring_, f.terms(), basis));
}

ModuleVector ModuleBasis::normal_form(const ModuleVector& f) const {
  require_same_ring(f.ring(), ring_, "normal_form");
  if (f.rank() != rank_) throw Error(ErrorCode::RankMismatch, "normal_form: rank " + std::to_string(f.rank()) +
                                                                   " against rank " + std::to_string(rank_));
  std::vector<const std::vector<VTerm>*> basis;
  for (const auto& g : elements_) basis.push_back(&g.terms());
  return ModuleVector(f.ring(), rank_, full_reduce(*ring_, f.terms(), basis));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) { return g.normal_form(f); }
ModuleVector normal_form(const ModuleVector& f, const ModuleBasis& g) { return g.normal_form(f); }

// ---------------------------------------------------------------------------
// Buchberger

namespace {

enum PairState : std::uint8_t { kNone = 0, kPending = 1, kDone = 2 };

struct Pair {
  std::uint32_t i, j;  // i < j
  Monomial lcm;
  std::uint32_t pos;
  std::int64_t deg;
};

class Engine {
 public:
  Engine(const RingPtr& ring, std::size_t rank, std::size_t ngens, bool track)
      : ring_(ring), r_(*ring), rank_(rank), ngens_(ngens), track_(track),
        pairs_(PairCmp{&r_}), budget_(limits().step_budget) {}

  BuchbergerResult run(const std::vector<ModuleVector>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::vector<VTerm> cof;
      if (track_) cof.push_back({Monomial(r_.nvars()), static_cast<std::uint32_t>(i), Coeff(1)});
      if (gens[i].is_zero()) {
        if (track_) result_.syzygies.emplace_back(ring_, ngens_, std::move(cof));
        continue;
      }
      insert(gens[i].terms(), std::move(cof));
    }
    while (!pairs_.empty()) {
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      state(p.i, p.j) = kDone;
      if (chain_criterion(p)) continue;
      if (++result_.reductions > budget_)
        throw Error(ErrorCode::StepBudgetExceeded,
                    "more than " + std::to_string(budget_) + " pair reductions");
      process(p);
    }
    finish();
    return std::move(result_);
  }

 private:
  struct PairCmp {
    const Ring* r;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.deg != b.deg) return a.deg < b.deg;
      int c = r->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.pos != b.pos) return a.pos < b.pos;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  std::uint8_t& state(std::uint32_t i, std::uint32_t j) {
    if (i > j) std::swap(i, j);
    return state_[j][i];
  }

  const VTerm& lead(std::size_t i) const { return elems_[i].front(); }

  void insert(std::vector<VTerm> v, std::vector<VTerm> cof) {
    Coeff inv = r_.field().inv(v.front().coeff);
    if (inv != 1) {
      for (auto& t : v) t.coeff = r_.field().mul(t.coeff, inv);
      for (auto& t : cof) t.coeff = r_.field().mul(t.coeff, inv);
    }
    const auto n = static_cast<std::uint32_t>(elems_.size());
    elems_.push_back(std::move(v));
    cofs_.push_back(std::move(cof));
    state_.emplace_back(n, kNone);
    const VTerm& ln = lead(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      const VTerm& li = lead(i);
      if (li.pos != ln.pos) continue;
      if (rank_ == 1 && li.mono.coprime(ln.mono)) {
        state(i, n) = kDone;
        if (track_) record_koszul(i, n);
        continue;
      }
      Monomial l = Monomial::lcm(li.mono, ln.mono);
      std::int64_t d = r_.degree(l);
      state(i, n) = kPending;
      pairs_.insert(Pair{i, n, std::move(l), ln.pos, d});
    }
  }

  // Buchberger's chain criterion: some k with lm_k | lcm(i,j) whose pairs
  // with i and j are already treated.
  bool chain_criterion(const Pair& p) {
    for (std::uint32_t k = 0; k < elems_.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      const VTerm& lk = lead(k);
      if (lk.pos != p.pos || !lk.mono.divides(p.lcm)) continue;
      if (state(p.i, k) == kDone && state(p.j, k) == kDone) return true;
    }
    return false;
  }

  void record_koszul(std::uint32_t i, std::uint32_t j) {
    // g_j * cof_i - g_i * cof_j, with g_i, g_j polynomials (rank 1).
    ModuleVector gi(ring_, 1, elems_[i]), gj(ring_, 1, elems_[j]);
    ModuleVector ci(ring_, ngens_, cofs_[i]), cj(ring_, ngens_, cofs_[j]);
    ModuleVector s = ci.times(gj.component(0)) - cj.times(gi.component(0));
    if (!s.is_zero()) result_.syzygies.push_back(std::move(s));
  }

  void process(const Pair& p) {
    const VTerm& li = lead(p.i);
    const VTerm& lj = lead(p.j);
    Monomial mi = p.lcm / li.mono, mj = p.lcm / lj.mono;
    // leading coefficients are 1
    std::vector<VTerm> s = sub_mul(r_, mul(elems_[p.i], mi), 0, Coeff(1), mj, elems_[p.j]);
    std::vector<VTerm> cof;
    if (track_) cof = sub_mul(r_, mul(cofs_[p.i], mi), 0, Coeff(1), mj, cofs_[p.j]);
    reduce(s, cof);
    if (s.empty()) {
      if (track_ && !cof.empty()) result_.syzygies.emplace_back(ring_, ngens_, std::move(cof));
      return;
    }
    insert(std::move(s), std::move(cof));
  }

  std::vector<VTerm> mul(const std::vector<VTerm>& v, const Monomial& m) const {
    std::vector<VTerm> out = v;
    for (auto& t : out) t.mono = t.mono * m;
    return out;
  }

  // Full reduction, carrying the cofactor along.
  void reduce(std::vector<VTerm>& f, std::vector<VTerm>& cof) {
    std::vector<VTerm> rem;
    std::size_t off = 0;
    while (off < f.size()) {
      const VTerm& lt = f[off];
      std::size_t k = 0;
      for (; k < elems_.size(); ++k) {
        const VTerm& lk = lead(k);
        if (lk.pos == lt.pos && lk.mono.divides(lt.mono)) break;
      }
      if (k == elems_.size()) {
        rem.push_back(f[off++]);
        continue;
      }
      Coeff c = lt.coeff;
      Monomial m = lt.mono / lead(k).mono;
      f = sub_mul(r_, f, off, c, m, elems_[k]);
      off = 0;
      if (track_) cof = sub_mul(r_, cof, 0, c, m, cofs_[k]);
    }
    f = std::move(rem);
  }

  void finish() {
    const std::size_t n = elems_.size();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < n && !redundant; ++j) {
        if (j == i || lead(j).pos != lead(i).pos || !lead(j).mono.divides(lead(i).mono)) continue;
        redundant = !(lead(j).mono == lead(i).mono) || j < i;
      }
      if (!redundant) keep.push_back(i);
    }
    for (std::size_t a = 0; a < keep.size(); ++a) {
      std::vector<const std::vector<VTerm>*> others;
      for (std::size_t b = 0; b < keep.size(); ++b)
        if (b != a) others.push_back(&elems_[keep[b]]);
      std::vector<VTerm> tail(elems_[keep[a]].begin() + 1, elems_[keep[a]].end());
      std::vector<VTerm> red = full_reduce(r_, std::move(tail), others);
      std::vector<VTerm> full;
      full.reserve(red.size() + 1);
      full.push_back(elems_[keep[a]].front());
      for (auto& t : red) full.push_back(std::move(t));
      result_.basis.emplace_back(ring_, rank_, std::move(full));
    }
    std::sort(result_.basis.begin(), result_.basis.end(), [&](const ModuleVector& a, const ModuleVector& b) {
      const VTerm& x = a.leading();
      const VTerm& y = b.leading();
      return compare_terms(r_, x.mono, x.pos, y.mono, y.pos) > 0;
    });
  }

  RingPtr ring_;
  const Ring& r_;
  std::size_t rank_;
  std::size_t ngens_;
  bool track_;
  std::vector<std::vector<VTerm>> elems_;
  std::vector<std::vector<VTerm>> cofs_;
  std::vector<std::vector<std::uint8_t>> state_;
  std::set<Pair, PairCmp> pairs_;
  std::uint64_t budget_;
  BuchbergerResult result_;
};

std::vector<ModuleVector> as_vectors(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  std::vector<ModuleVector> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.emplace_back(ring, std::vector<Polynomial>{g.ring() ? g : ring->zero()});
  return out;
}

}  // namespace

BuchbergerResult buchberger(const RingPtr& ring, std::size_t rank, const std::vector<ModuleVector>& gens,
                            bool track_syzygies) {
  for (const auto& g : gens) {
    require_same_ring(g.ring(), ring, "buchberger");
    if (g.rank() != rank) throw Error(ErrorCode::RankMismatch, "generator rank differs from ambient rank");
  }
  Engine engine(ring, rank, gens.size(), track_syzygies);
  return engine.run(gens);
}

GroebnerBasis reduced_gb(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  std::vector<Polynomial> all;
  for (const auto& g : gens) {
    require_same_ring(g.ring(), ring, "reduced_gb");
    if (!g.is_zero()) all.push_back(g);
  }
  for (auto& q : ring->relations()) all.push_back(std::move(q));
  BuchbergerResult res = buchberger(ring, 1, as_vectors(all, ring), false);
  std::vector<Polynomial> elems;
  elems.reserve(res.basis.size());
  for (const auto& v : res.basis) elems.push_back(v.component(0));
  return GroebnerBasis(ring, std::move(elems));
}

ModuleBasis module_gb(const std::vector<ModuleVector>& gens, const RingPtr& ring, std::size_t rank) {
  std::vector<ModuleVector> all;
  for (const auto& g : gens)
    if (!g.is_zero()) all.push_back(g.in_ring(ring));
  for (const auto& q : ring->relations())
    for (std::size_t a = 0; a < rank; ++a) {
      std::vector<Polynomial> coords(rank, ring->zero());
      coords[a] = q;
      all.emplace_back(ring, coords);
    }
  BuchbergerResult res = buchberger(ring, rank, all, false);
  return ModuleBasis(ring, rank, std::move(res.basis));
}

// ---------------------------------------------------------------------------
// Submodules and syzygies

Submodule::Submodule(RingPtr ring, std::size_t rank, std::vector<ModuleVector> gens)
    : ring_(std::move(ring)), rank_(rank) {
  for (auto& g : gens) {
    if (g.rank() != rank_) throw Error(ErrorCode::RankMismatch, "submodule generator rank");
    require_same_ring(g.ring(), ring_, "submodule");
    if (!g.is_zero()) gens_.push_back(g.in_ring(ring_));
  }
}

bool Submodule::is_zero() const { return gb().elements().empty(); }

const ModuleBasis& Submodule::gb() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->gb) return *cache_->gb;
  }
  ModuleBasis b = module_gb(gens_, ring_, rank_);
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->gb) cache_->gb = std::move(b);
  return *cache_->gb;
}

bool Submodule::contains(const Submodule& other) const {
  if (other.rank_ != rank_) throw Error(ErrorCode::RankMismatch, "submodule containment");
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const ModuleVector& v) { return contains(v); });
}

namespace {

Submodule syzygies_impl(std::vector<ModuleVector> all, std::size_t k, std::size_t rank, const RingPtr& ring) {
  BuchbergerResult res = buchberger(ring, rank, all, true);
  std::vector<ModuleVector> projected;
  for (const auto& s : res.syzygies) {
    ModuleVector p = s.slice(0, k);
    if (!p.is_zero()) projected.push_back(std::move(p));
  }
  ModuleBasis b = module_gb(projected, ring, k);
  // Drop basis elements that lie in Q*S^k; they are implicit.
  std::vector<ModuleVector> gens;
  if (ring->has_relations()) {
    ModuleBasis qf = module_gb({}, ring, k);
    for (const auto& v : b.elements())
      if (!qf.contains(v)) gens.push_back(v);
  } else {
    gens = b.elements();
  }
  return Submodule(ring, k, std::move(gens));
}

}  // namespace

Submodule syzygies(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  if (gens.empty()) throw Error(ErrorCode::EmptyInput, "syzygies of an empty list");
  std::vector<Polynomial> all;
  for (const auto& g : gens) {
    require_same_ring(g.ring(), ring, "syzygies");
    all.push_back(g);
  }
  for (auto& q : ring->relations()) all.push_back(std::move(q));
  return syzygies_impl(as_vectors(all, ring), gens.size(), 1, ring);
}

Submodule syzygies(const std::vector<ModuleVector>& gens, const RingPtr& ring) {
  if (gens.empty()) throw Error(ErrorCode::EmptyInput, "syzygies of an empty list");
  const std::size_t rank = gens.front().rank();
  std::vector<ModuleVector> all;
  for (const auto& g : gens) {
    if (g.rank() != rank) throw Error(ErrorCode::RankMismatch, "syzygies: mixed ranks");
    require_same_ring(g.ring(), ring, "syzygies");
    all.push_back(g.in_ring(ring));
  }
  for (const auto& q : ring->relations())
    for (std::size_t a = 0; a < rank; ++a) {
      std::vector<Polynomial> coords(rank, ring->zero());
      coords[a] = q;
      all.emplace_back(ring, coords);
    }
  return syzygies_impl(std::move(all), gens.size(), rank, ring);
}

std::vector<ModuleVector> minimal_module_generators(const std::vector<ModuleVector>& gens, const RingPtr& ring,
                                                    std::span<const std::int64_t> shifts) {
  std::vector<ModuleVector> cand;
  std::size_t rank = 0;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous(shifts))
      throw Error(ErrorCode::NotHomogeneous, "generator " + g.str() + " is not homogeneous");
    rank = g.rank();
    cand.push_back(g.in_ring(ring));
  }
  std::stable_sort(cand.begin(), cand.end(), [&](const ModuleVector& a, const ModuleVector& b) {
    return a.degree(shifts) < b.degree(shifts);
  });
  std::vector<ModuleVector> kept;
  std::optional<ModuleBasis> basis;
  for (auto& v : cand) {
    if (!basis) basis = module_gb(kept, ring, rank);
    if (basis->contains(v)) continue;
    kept.push_back(v.monic());
    basis.reset();
  }
  return kept;
}

}  // namespace llab
