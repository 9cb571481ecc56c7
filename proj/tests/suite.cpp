#include "suite.hpp"

#include <algorithm>

#include "llab/koszul.hpp"
#include "oracle.hpp"

namespace suite {

using llab::Ideal;
using llab::Polynomial;
using llab::RingPtr;

bool Result::ok() const {
  return std::all_of(categories.begin(), categories.end(), [](const Category& c) { return c.mismatches == 0; });
}

std::size_t Result::min_instances() const {
  std::size_t m = SIZE_MAX;
  for (const auto& c : categories) m = std::min(m, c.instances);
  return categories.empty() ? 0 : m;
}

RingPtr Generator::ring() {
  static const std::vector<std::string> names = {"x", "y", "z"};
  const int n = uniform(1, 3);
  auto order = uniform(0, 3) == 0 ? llab::MonomialOrder::lex() : llab::MonomialOrder::degrevlex();
  return llab::Ring::create(llab::Field::rationals(), {names.begin(), names.begin() + n}, {}, order);
}

mpq_class Generator::coefficient() {
  static const std::vector<mpq_class> pool = {1, -1, 2, -3, mpq_class(1, 2), mpq_class(-2, 3)};
  return pool[static_cast<std::size_t>(uniform(0, static_cast<int>(pool.size()) - 1))];
}

Polynomial Generator::monomial(const RingPtr& r, int degree) {
  llab::Monomial m(r->nvars());
  for (int k = 0; k < degree; ++k) {
    std::size_t v = static_cast<std::size_t>(uniform(0, static_cast<int>(r->nvars()) - 1));
    m.set(v, m[v] + 1);
  }
  return Polynomial::term(r, m, 1);
}

Polynomial Generator::generator(const RingPtr& r) {
  const int d = uniform(1, 4);
  Polynomial a = monomial(r, d);
  if (uniform(0, 1) == 0) return a.scaled(coefficient());
  Polynomial b = monomial(r, d);
  Polynomial g = a - b.scaled(coefficient());
  return g.is_zero() ? a : g;
}

std::vector<Polynomial> Generator::ideal(const RingPtr& r, int min_gens, int max_gens) {
  std::vector<Polynomial> g;
  const int k = uniform(min_gens, max_gens);
  for (int i = 0; i < k; ++i) g.push_back(generator(r));
  return g;
}

std::vector<Polynomial> Generator::m_primary(const RingPtr& r) {
  std::vector<Polynomial> g;
  for (std::size_t v = 0; v < r->nvars(); ++v) g.push_back(r->variable(v).pow(static_cast<unsigned>(uniform(1, 4))));
  for (auto& f : ideal(r, 0, 3)) g.push_back(f);
  std::shuffle(g.begin(), g.end(), rng_);
  return g;
}

std::vector<Polynomial> Generator::regular_sequence(const RingPtr& r) {
  for (;;) {
    std::vector<Polynomial> g;
    int top = 2;
    for (std::size_t v = 0; v < r->nvars(); ++v) {
      const int a = uniform(1, 4);
      top += a - 1;
      Polynomial f = r->variable(v).pow(static_cast<unsigned>(a));
      if (uniform(0, 1)) f = f - monomial(r, a).scaled(coefficient());
      if (f.is_zero()) f = r->variable(v).pow(static_cast<unsigned>(a));
      g.push_back(f);
    }
    if (oracle::length(g, r, top)) return g;
  }
}

Polynomial Generator::homogeneous(const RingPtr& r, int degree) {
  Polynomial f = r->zero();
  const int terms = uniform(1, 3);
  for (int i = 0; i < terms; ++i) f = f + monomial(r, degree).scaled(coefficient());
  return f;
}

Polynomial Generator::element_of(const std::vector<Polynomial>& gens, const RingPtr& r, int degree) {
  Polynomial f = r->zero();
  for (const auto& g : gens) {
    const int e = static_cast<int>(*g.homogeneous_degree());
    if (e > degree || uniform(0, 2) == 0) continue;
    f = f + (monomial(r, degree - e) * g).scaled(coefficient());
  }
  return f;
}

namespace {

std::int64_t max_degree(const std::vector<Polynomial>& g) {
  std::int64_t m = 0;
  for (const auto& f : g) m = std::max(m, f.degree());
  return m;
}

std::string show(const std::vector<Polynomial>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

std::vector<Polynomial> products(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  std::vector<Polynomial> out;
  for (const auto& f : a)
    for (const auto& g : b) out.push_back(f * g);
  return out;
}

// Socle degree bound of S/(gens) for the m-primary instances.
std::int64_t artinian_top(const std::vector<Polynomial>& gens, const RingPtr& r) {
  std::int64_t top = 0;
  for (std::size_t v = 0; v < r->nvars(); ++v) {
    std::int64_t best = 64;
    for (const auto& g : gens)
      if (g.size() == 1) {
        const auto& m = g.leading_monomial();
        bool pure = true;
        for (std::size_t u = 0; u < r->nvars(); ++u)
          if (u != v && m[u] != 0) pure = false;
        if (pure && m[v] > 0) best = std::min<std::int64_t>(best, m[v]);
      }
    top += best - 1;
  }
  return top + 1;
}

}  // namespace

Result run(std::uint64_t seed, std::size_t per_category) {
  Generator gen(seed);
  Result res;
  auto note = [&](Category& c, const std::string& what) {
    ++c.mismatches;
    if (res.failures.size() < 20) res.failures.push_back(c.name + ": " + what);
  };

  Category member{"membership"};
  for (std::size_t k = 0; k < per_category; ++k) {
    RingPtr r = gen.ring();
    auto g = gen.ideal(r, 1, 4);
    Ideal a(r, g);
    const int d = static_cast<int>(max_degree(g)) + gen.uniform(0, 2);
    Polynomial f = gen.element_of(g, r, d);
    if (gen.uniform(0, 1)) f = f + gen.homogeneous(r, d);
    ++member.instances;
    if (a.contains(f) != oracle::member(f, g, r)) note(member, f.str() + " in " + show(g));
  }

  Category colon_c{"colon"};
  for (std::size_t k = 0; k < per_category; ++k) {
    RingPtr r = gen.ring();
    auto ga = gen.ideal(r, 1, 3);
    auto gb = gen.ideal(r, 1, 2);
    Ideal c = llab::colon(Ideal(r, ga), Ideal(r, gb));
    const auto& cg = c.gb().elements();
    const std::int64_t top = std::min<std::int64_t>(max_degree(ga) + 2, 6);
    ++colon_c.instances;
    bool ok = true;
    for (std::int64_t d = 0; d <= top && ok; ++d) {
      const std::uint64_t mons = oracle::monomials(r->weights(), d).size();
      ok = oracle::colon_dim(ga, gb, r, d) == mons - oracle::quotient_dim(cg, r, d);
    }
    for (const auto& f : cg)
      if (ok && f.degree() <= top) ok = oracle::in_colon(f, ga, gb, r);
    if (!ok) note(colon_c, show(ga) + " : " + show(gb));
  }

  Category len{"artinian_length"};
  for (std::size_t k = 0; k < per_category; ++k) {
    RingPtr r = gen.ring();
    auto g = gen.m_primary(r);
    ++len.instances;
    auto expect = oracle::length(g, r, artinian_top(g, r) + 1);
    if (!expect || *expect != llab::artinian_length(Ideal(r, g))) note(len, show(g));
  }

  Category delta{"delta_regular_sequence"};
  for (std::size_t k = 0; k < per_category; ++k) {
    RingPtr r = gen.ring();
    auto g = gen.regular_sequence(r);
    ++delta.instances;
    if (llab::delta_length(g, r) != 0 || llab::h1_length(g, r) != 0) note(delta, show(g));
  }

  Category balance{"sequence_balance"};
  for (std::size_t k = 0; k < per_category; ++k) {
    RingPtr r = gen.ring();
    auto given = gen.m_primary(r);
    const std::int64_t top = artinian_top(given, r) + 1;
    auto g = oracle::minimalize(given, r);
    const std::int64_t top2 = 2 * top;
    ++balance.instances;
    auto lri = oracle::length(g, r, top);
    auto lri2 = oracle::length(products(g, g), r, top2);
    if (!lri || !lri2) {
      note(balance, "oracle bound too small for " + show(g));
      continue;
    }
    const auto h1 = static_cast<std::int64_t>(llab::h1_length(g, r));
    const auto dl = static_cast<std::int64_t>(llab::delta_length(g, r));
    const auto nu = static_cast<std::int64_t>(g.size());
    const auto a = static_cast<std::int64_t>(*lri);
    const auto i_over_i2 = static_cast<std::int64_t>(*lri2) - a;
    if (dl - h1 + nu * a - i_over_i2 != 0)
      note(balance, show(g) + ": δ " + std::to_string(dl) + ", H1 " + std::to_string(h1));
    const auto kz = oracle::koszul(g, r, top + max_degree(g));
    if (!kz.settled || static_cast<std::int64_t>(kz.h1) != h1 || static_cast<std::int64_t>(kz.delta) != dl)
      note(balance, show(g) + ": graded Koszul oracle gives H1 " + std::to_string(kz.h1) + ", δ " +
                        std::to_string(kz.delta));
  }

  res.categories = {member, colon_c, len, delta, balance};
  return res;
}

}  // namespace suite
