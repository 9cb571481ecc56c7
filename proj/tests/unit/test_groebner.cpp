#include <random>

#include "../oracle.hpp"
#include "../suite.hpp"
#include "helpers.hpp"
#include "llab/settings.hpp"

using namespace th;

namespace {

ModuleVector mv(const RingPtr& r, std::vector<Polynomial> coords) { return ModuleVector(r, coords); }

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("normal forms") {
    auto r = qq({"x", "y", "z"});
    auto x = r->variable(0), y = r->variable(1), z = r->variable(2);
    auto g = reduced_gb({x * x, y * y}, r);
    CHECK(normal_form(x * x * y, g).is_zero());
    CHECK(normal_form(x * y, g) == x * y);
    auto h = reduced_gb({x * x - y * z}, r);
    CHECK(normal_form(x * x + x * y, h) == y * z + x * y);
  }

  TEST_CASE("normal form argument checks") {
    auto r = qq({"x", "y"});
    auto s = qq({"u", "v"});
    auto g = reduced_gb({r->variable(0)}, r);
    CHECK_CODE(normal_form(s->variable(0), g), RingMismatch);
    auto mb = module_gb({mv(r, {r->variable(0), r->zero()})}, r, 2);
    CHECK_CODE(normal_form(mv(r, {r->variable(1)}), mb), RankMismatch);
  }

  TEST_CASE("reduced bases") {
    auto r = qq({"x", "y"});
    auto x = r->variable(0), y = r->variable(1);
    CHECK(reduced_gb({x * x, y * y}, r).elements() == std::vector<Polynomial>{x * x, y * y});
    CHECK(reduced_gb({x + y, x - y}, r).elements() == std::vector<Polynomial>{x, y});
    CHECK(reduced_gb({x * x, x * x + y * y, y * y}, r).size() == 2);
  }

  TEST_CASE("reduced basis over a quotient agrees with the oracle") {
    auto r = e3_ring();
    auto x = r->variable(0), y = r->variable(1), z = r->variable(2);
    auto g = reduced_gb({x * x, y * y}, r);
    auto s = r->ambient();
    auto xs = s->variable(0), ys = s->variable(1), zs = s->variable(2);
    std::vector<Polynomial> want{xs * xs, ys * ys, ys * zs};
    std::vector<Polynomial> got;
    for (const auto& f : g.elements()) got.push_back(f.in_ring(s));
    CHECK(oracle::same_through(got, want, s, 4));
    CHECK(g.size() == 3);
    CHECK(g.contains(y * z));
    CHECK_FALSE(g.contains(x * y));
    (void)z;
  }

  TEST_CASE("syzygies of small ideals") {
    auto r = qq({"x", "y"});
    auto x = r->variable(0), y = r->variable(1);
    auto z1 = syzygies({x * x, y * y}, r);
    CHECK(z1.contains(mv(r, {y * y, -x * x})));
    CHECK(Submodule(r, 2, {mv(r, {y * y, -x * x})}).contains(z1));

    auto z2 = syzygies({x * x, x * y, y * y}, r);
    Submodule want(r, 3, {mv(r, {y, -x, r->zero()}), mv(r, {r->zero(), y, -x})});
    CHECK(z2.contains(want));
    CHECK(want.contains(z2));

    CHECK(syzygies({x}, r).is_zero());
    CHECK_CODE(syzygies(std::vector<Polynomial>{}, r), EmptyInput);
  }

  TEST_CASE("syzygy identity holds modulo Q") {
    auto r = e4_ring();
    auto x = r->variable(0), y = r->variable(1), z = r->variable(2);
    std::vector<Polynomial> gens{x, y, z};
    auto zq = syzygies(gens, r);
    auto q = reduced_gb({}, r);
    for (const auto& v : zq.generators()) {
      Polynomial sum = r->zero();
      for (std::size_t i = 0; i < gens.size(); ++i) sum = sum + v.component(i) * gens[i];
      CHECK(normal_form(sum, q).is_zero());
    }
  }

  TEST_CASE("idempotence, order independence and the syzygy identity on random ideals") {
    suite::Generator gen(4242);
    for (int k = 0; k < 150; ++k) {
      auto r = gen.ring();
      auto g = gen.ideal(r, 1, 4);
      auto gb = reduced_gb(g, r);
      CHECK(reduced_gb(gb.elements(), r).elements() == gb.elements());

      auto other = r->with_order(r->order().kind() == OrderKind::Lex ? MonomialOrder::degrevlex() : MonomialOrder::lex());
      std::vector<Polynomial> go;
      for (const auto& f : g) go.push_back(f.in_ring(other));
      auto gbo = reduced_gb(go, other);
      for (int t = 0; t < 3; ++t) {
        auto f = gen.element_of(g, r, gen.uniform(1, 5));
        if (gen.uniform(0, 1)) f = f + gen.homogeneous(r, gen.uniform(1, 5));
        const bool in = gb.contains(f);
        CHECK(in == gbo.contains(f.in_ring(other)));
        CHECK(in == oracle::member(f, g, r));
      }

      auto z = syzygies(g, r);
      for (const auto& v : z.generators()) {
        Polynomial sum = r->zero();
        for (std::size_t i = 0; i < g.size(); ++i) sum = sum + v.component(i) * g[i];
        CHECK(sum.is_zero());
      }
    }
  }

  TEST_CASE("step budget") {
    auto saved = limits();
    auto l = saved;
    l.step_budget = 2;
    set_limits(l);
    auto r = qq({"x", "y", "z"});
    auto x = r->variable(0), y = r->variable(1), z = r->variable(2);
    CHECK_CODE(reduced_gb({x * x * y - z.pow(3), x * y * y - x * z, y.pow(3) - x * x * z, x * z * z - y}, r),
               StepBudgetExceeded);
    set_limits(saved);
  }

  TEST_CASE("module bases in term-over-position order") {
    auto r = qq({"x", "y"});
    auto x = r->variable(0), y = r->variable(1);
    auto a = mv(r, {x, y}), b = mv(r, {y, r->zero()});
    CHECK(a.leading().pos == 0);
    CHECK(b.leading().pos == 0);
    auto m = mv(r, {r->zero(), x});
    CHECK(m.leading().pos == 1);
    auto mb = module_gb({a, b}, r, 2);
    CHECK(mb.contains(a.times(x) - b.times(y)));
    CHECK_FALSE(mb.contains(mv(r, {r->zero(), x})));
  }

  TEST_CASE("minimal module generators drop redundant vectors") {
    auto r = qq({"x", "y"});
    auto x = r->variable(0), y = r->variable(1);
    std::vector<ModuleVector> g{mv(r, {x, y}), mv(r, {x * x, x * y}), mv(r, {y, r->zero()})};
    std::vector<std::int64_t> shifts{0, 0};
    CHECK(minimal_module_generators(g, r, shifts).size() == 2);
  }
}
