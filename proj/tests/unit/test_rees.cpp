#include "../oracle.hpp"
#include "helpers.hpp"
#include "llab/rees.hpp"
#include "llab/resolution.hpp"

using namespace th;

namespace {

// 2x2 minors of the matrix with rows (f_1..f_k) and (T_1..T_k).
Ideal minors_ideal(const ReesPresentation& rp) {
  std::vector<Polynomial> out;
  const std::size_t k = rp.generators.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      auto fa = rp.generators[a].map_variables(rp.ring, rp.base_map);
      auto fb = rp.generators[b].map_variables(rp.ring, rp.base_map);
      out.push_back(fa * rp.ring->variable(rp.fiber[b]) - fb * rp.ring->variable(rp.fiber[a]));
    }
  return Ideal(rp.ring, out);
}

Polynomial fiber(const ReesPresentation& rp, std::size_t j) { return rp.ring->variable(rp.fiber[j]); }

std::size_t index_of(const ReesPresentation& rp, const Polynomial& f) {
  for (std::size_t j = 0; j < rp.generators.size(); ++j)
    if (rp.generators[j].monic() == f.monic()) return j;
  FAIL("generator not found: " << f.str());
  return 0;
}

Declarations prime_decl() {
  Declarations d;
  d.prime = true;
  return d;
}

bool conclusion(const VerificationReport& rep, const std::string& desc) {
  for (const auto& c : rep.conclusions)
    if (c.desc == desc) return c.pass == true;
  return false;
}

}  // namespace

TEST_SUITE("rees") {
  TEST_CASE("maximal ideal of the plane") {
    auto r = qq({"x", "y"});
    auto rp = rees_defining_ideal(Ideal::maximal(r));
    REQUIRE(rp.generators.size() == 2);
    CHECK(rp.rees == minors_ideal(rp));
    CHECK(specialization_holds(rp));
    CHECK(dimension(rp.rees) == 3);

    auto gr = assoc_graded_presentation(rp);
    auto x = rp.ring->variable(0), y = rp.ring->variable(1);
    CHECK(gr == Ideal(rp.ring, {x, y}));
    CHECK(dimension(gr) == 2);
  }

  TEST_CASE("principal ideal") {
    auto r = qq({"x", "y"});
    auto rp = rees_defining_ideal(Ideal(r, {r->variable(0)}));
    CHECK(rp.rees.is_zero());
    CHECK(specialization_holds(rp));
  }

  TEST_CASE("the link ideal of the plane fixture") {
    auto r = qq({"x", "y"});
    auto x = r->variable(0), y = r->variable(1);
    Ideal i(r, {x * x, x * y, y * y});
    auto rp = rees_defining_ideal(i);
    REQUIRE(rp.generators.size() == 3);
    auto t1 = fiber(rp, index_of(rp, x * x)), t2 = fiber(rp, index_of(rp, x * y)), t3 = fiber(rp, index_of(rp, y * y));
    auto xs = rp.ring->variable(0), ys = rp.ring->variable(1);
    Ideal want(rp.ring, {xs * t2 - ys * t1, xs * t3 - ys * t2, t1 * t3 - t2 * t2});
    CHECK(rp.rees == want);
    CHECK(specialization_holds(rp));
    CHECK(dimension(rp.rees) == 3);

    auto gr = assoc_graded_presentation(rp);
    Ideal gr_want = ideal_sum(want, Ideal(rp.ring, {xs * xs, xs * ys, ys * ys}));
    CHECK(gr == gr_want);
    CHECK(homological_profile(gr).is_cm);
    CHECK(homological_profile(rp.rees).is_cm);

    Ideal fiber_part = eliminate(gr, {rp.base_map[0], rp.base_map[1]});
    CHECK(fiber_part == Ideal(rp.ring, {t1 * t3 - t2 * t2}));
  }

  TEST_CASE("complete intersections give the minors") {
    auto r = qq({"x", "y", "z"});
    auto x = r->variable(0), y = r->variable(1), z = r->variable(2);
    auto two = rees_defining_ideal(Ideal(r, {x * x, y * y}));
    CHECK(two.rees == minors_ideal(two));
    CHECK(assoc_graded_presentation(two) ==
          Ideal(two.ring, {two.ring->variable(0).pow(2), two.ring->variable(1).pow(2)}));
    auto three = rees_defining_ideal(Ideal(r, {x * x, y * y, z * z}));
    CHECK(three.rees == minors_ideal(three));
    CHECK(specialization_holds(three));
    CHECK(dimension(three.rees) == 4);
  }

  TEST_CASE("quotient ring presentation") {
    auto e3 = e3_ring();
    auto rp = rees_defining_ideal(Ideal::maximal(e3));
    CHECK(rp.ring->has_relations());
    CHECK(specialization_holds(rp));
    CHECK(dimension(rp.rees) == 3);
    auto rj = rees_defining_ideal(Ideal(e3, {e3->variable(1), e3->variable(2)}));
    CHECK(dimension(rj.rees) == 3);
  }

  TEST_CASE("non-minimal generators are replaced") {
    auto r = qq({"x", "y"});
    auto x = r->variable(0), y = r->variable(1);
    auto rp = rees_defining_ideal(Ideal(r, {x, y, x + y}));
    CHECK(rp.generators.size() == 2);
    CHECK_FALSE(rp.notes.empty());
    CHECK_CODE(rees_defining_ideal(Ideal::zero(r)), InvalidArgument);
  }

  TEST_CASE("Cohen-Macaulay verdicts") {
    auto r1 = qq({"x", "y"});
    auto rep1 = verify_cm_section3(Ideal::maximal(r1), PolySequence{{r1->variable(0).pow(2), r1->variable(1).pow(2)}, {}},
                                   prime_decl());
    CHECK(rep1.status == Status::Verified);
    CHECK(conclusion(rep1, "gr_I(R) is Cohen-Macaulay"));
    CHECK(conclusion(rep1, "R[It] is Cohen-Macaulay"));

    auto r2 = qq({"x", "y", "z"});
    auto rep2 = verify_cm_section3(Ideal(r2, {r2->variable(0), r2->variable(1)}),
                                   PolySequence{{r2->variable(0).pow(2), r2->variable(1).pow(2)}, {}}, prime_decl());
    CHECK(rep2.status == Status::Verified);

    auto e3 = e3_ring();
    auto rep3 = verify_cm_section3(Ideal::maximal(e3), PolySequence{{e3->variable(1), e3->variable(2)}, {}}, prime_decl());
    CHECK(rep3.status == Status::Verified);
    CHECK(conclusion(rep3, "R[It] is Cohen-Macaulay"));
  }

  TEST_CASE("inhomogeneous input is rejected") {
    auto r = qq({"x", "y"});
    auto x = r->variable(0), y = r->variable(1);
    CHECK_CODE(verify_cm_section3(Ideal(r, {x, y}), PolySequence{{x * x + y.pow(3), x * y}, {}}, prime_decl()),
               NotHomogeneous);
  }
}
