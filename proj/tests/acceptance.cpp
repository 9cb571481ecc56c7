// Acceptance runner: one PASS/FAIL line per criterion. Every library answer
// is compared with an exact expected value and, where one exists, with the
// linear-algebra oracle.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "llab/koszul.hpp"
#include "llab/linkage.hpp"
#include "llab/rees.hpp"
#include "llab/resolution.hpp"
#include "llab/session.hpp"
#include "oracle.hpp"
#include "suite.hpp"

using namespace llab;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> why;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      why.push_back(what);
    }
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    std::ostringstream s;
    s << what << ": got " << got << ", want " << want;
    expect(got == want, s.str());
  }
};

RingPtr qq(std::vector<std::string> names, std::vector<std::int64_t> weights = {}) {
  return Ring::create(Field::rationals(), std::move(names), std::move(weights));
}

std::vector<Polynomial> mul(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  std::vector<Polynomial> out;
  for (const auto& f : a)
    for (const auto& g : b) out.push_back(f * g);
  return out;
}

std::uint64_t olen(const std::vector<Polynomial>& g, const RingPtr& r, std::int64_t top) {
  auto l = oracle::length(g, r, top);
  if (!l) throw std::runtime_error("oracle length not settled");
  return *l;
}

// Every length of the balance identities, from the oracle only.
struct OracleLengths {
  std::uint64_t i_over_j, i2_over_ji, r_over_i, i_over_i2, h1, delta;
  long r;
};

OracleLengths oracle_lengths(const std::vector<Polynomial>& j, const std::vector<Polynomial>& i, const RingPtr& ring,
                             long d, std::int64_t top) {
  OracleLengths o{};
  const auto lj = olen(j, ring, top), li = olen(i, ring, top);
  const auto li2 = olen(mul(i, i), ring, 2 * top), lji = olen(mul(j, i), ring, 2 * top);
  o.i_over_j = lj - li;
  o.i2_over_ji = lji - li2;
  o.r_over_i = li;
  o.i_over_i2 = li2 - li;
  auto k = oracle::koszul(i, ring, 2 * top);
  if (!k.settled) throw std::runtime_error("oracle Koszul lengths not settled");
  o.h1 = k.h1;
  o.delta = k.delta;
  o.r = static_cast<long>(oracle::minimalize(i, ring).size()) - d;
  return o;
}

void compare(Outcome& out, const LengthReport& lr, const OracleLengths& o) {
  out.equal(lr.lambda_I_over_J, o.i_over_j, "λ(I/J) vs oracle");
  out.equal(lr.lambda_I2_over_JI, o.i2_over_ji, "λ(I²/JI) vs oracle");
  out.equal(lr.lambda_R_over_I, o.r_over_i, "λ(R/I) vs oracle");
  out.equal(lr.lambda_I_over_I2, o.i_over_i2, "λ(I/I²) vs oracle");
  out.equal(lr.lambda_H1, o.h1, "λ(H1) vs oracle");
  out.equal(lr.lambda_delta, o.delta, "λ(δ) vs oracle");
  out.equal(lr.r, o.r, "r vs oracle");
}

// Resolution sanity against the oracle Hilbert function.
void check_resolution(Outcome& out, const ResolutionData& rd, const std::vector<Polynomial>& gens, const RingPtr& r,
                      std::int64_t top, const std::string& name) {
  out.expect(composes_to_zero(rd), name + ": d∘d ≠ 0");
  out.expect(is_minimal(rd), name + ": not minimal");
  auto series = oracle::euler_series(rd.shifts, r->weights(), top);
  for (std::int64_t d = 0; d <= top; ++d)
    out.equal(series[static_cast<std::size_t>(d)], static_cast<std::int64_t>(oracle::quotient_dim(gens, r, d)),
              name + ": Hilbert function in degree " + std::to_string(d));
}

const Check* find(const std::vector<Check>& v, const std::string& desc) {
  for (const auto& c : v)
    if (c.desc == desc) return &c;
  return nullptr;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome out;
  RingPtr s = qq({"x", "y"});
  auto x = s->variable(0), y = s->variable(1);
  std::vector<Polynomial> jg{x.pow(2), y.pow(2)}, pg{x, y}, want{x.pow(2), x * y, y.pow(2)};
  Ideal j(s, jg), p(s, pg);
  Ideal i = link(j, p);
  out.expect(equals(i, Ideal(s, want)), "link = " + i.str());
  for (std::int64_t d = 0; d <= 6; ++d)
    out.equal(oracle::colon_dim(jg, pg, s, d), oracle::monomials(s->weights(), d).size() - oracle::quotient_dim(want, s, d),
              "brute-force colon in degree " + std::to_string(d));
  auto r = reduction_number(j, i, 10);
  out.expect(r && *r == 1, "reduction number " + (r ? std::to_string(*r) : std::string("none")));
  out.expect(!oracle::same_through(jg, want, s, 4), "oracle: J = I, so r would be 0");
  out.expect(oracle::same_through(mul(want, want), mul(jg, want), s, 8), "oracle: I² ≠ JI");
  out.expect(equals(ideal_power(i, 2), ideal_product(j, i)), "equals(I², JI) is false");
  return out;
}

Outcome criterion2() {
  Outcome out;
  RingPtr s = qq({"x", "y"});
  auto x = s->variable(0), y = s->variable(1);
  std::vector<Polynomial> jg{x.pow(2), y.pow(2)}, ig{x.pow(2), x * y, y.pow(2)};
  P1C1Result res = verify_p1c1(Ideal(s, jg), Ideal(s, ig), true);
  const LengthReport& lr = res.lengths;
  out.equal(to_string(res.report.status), std::string("verified"), "status");
  out.equal(lr.lambda_I_over_J, 1u, "λ(I/J)");
  out.equal(lr.lambda_I2_over_JI, 0u, "λ(I²/JI)");
  out.equal(lr.lambda_R_over_I, 3u, "λ(R/I)");
  out.equal(lr.lambda_H1, 3u, "λ(H1)");
  out.equal(lr.lambda_delta, 1u, "λ(δ)");
  out.equal(lr.r, 1, "r");
  OracleLengths o = oracle_lengths(jg, ig, s, 2, 6);
  compare(out, lr, o);
  out.expect(o.h1 == o.r_over_i, "oracle duality λ(H1) = λ(R/I) fails");
  const auto eq1 = static_cast<long>(o.i2_over_ji) + o.r * static_cast<long>(o.r_over_i) -
                   static_cast<long>(o.h1) + static_cast<long>(o.delta);
  out.equal(static_cast<long>(o.i_over_j), eq1, "oracle balance of λ(I/J) = λ(I²/JI) + rλ(R/I) - λ(H1) + λ(δ)");
  out.equal(o.i_over_j, o.i2_over_ji + o.delta, "oracle balance of λ(I/J) = λ(I²/JI) + λ(δ)");
  out.expect(lr.eq1_balanced && lr.eq1_holds(), "library first identity unbalanced");
  out.expect(lr.eq4_balanced.value_or(false) && lr.eq4_holds(), "library Gorenstein identity unbalanced");
  out.expect(lr.delta_nonzero && o.delta != 0, "δ = 0");
  out.equal(ideal_subquotient_length(Ideal(s, ig), Ideal(s, jg), LengthRoute::Presentation), 1u,
            "λ(I/J) by presentation");
  out.equal(ideal_subquotient_length(Ideal(s, ig), Ideal(s, jg), LengthRoute::Difference), 1u,
            "λ(I/J) by difference");
  return out;
}

Outcome criterion3() {
  Outcome out;
  RingPtr s = qq({"x", "y"});
  auto x = s->variable(0), y = s->variable(1);
  std::vector<Polynomial> pg{x, y}, jg{x, y.pow(2)};
  Ideal p(s, pg);
  Declarations decl;
  decl.prime = true;
  VerificationReport rep = verify_theorem_2_1(p, PolySequence{jg, std::nullopt}, decl);
  out.equal(to_string(rep.status), std::string("hypothesis_failed"), "status");
  const Check* sq = find(rep.hypotheses, "two elements of z lie in p^(2)");
  out.expect(sq && sq->pass == false, "symbolic-square hypothesis did not fail");
  const Check* eq = find(rep.conclusions, "I² = JI");
  out.expect(eq && eq->pass == false, "informational I² = JI did not fail");
  out.expect(eq && eq->detail.find("y^2") != std::string::npos, "witness y^2 missing");
  // oracle: I' = (x, y), y² ∈ I'² but not in J'I'
  for (std::int64_t d = 0; d <= 5; ++d)
    out.equal(oracle::colon_dim(jg, pg, s, d), oracle::monomials(s->weights(), d).size() - oracle::quotient_dim(pg, s, d),
              "oracle colon in degree " + std::to_string(d));
  out.expect(oracle::member(y.pow(2), mul(pg, pg), s), "oracle: y² ∉ I'²");
  out.expect(!oracle::member(y.pow(2), mul(jg, pg), s), "oracle: y² ∈ J'I'");
  out.expect(!symbolic_square_contains(x, p) && symbolic_square_contains(y.pow(2), p), "symbolic square membership");
  return out;
}

Outcome criterion4() {
  Outcome out;
  RingPtr s = qq({"x", "y", "z"});
  auto x = s->variable(0), y = s->variable(1), z = s->variable(2);
  Polynomial q = x.pow(2) - y * z;
  RingPtr r = s->with_relations({q});
  auto rx = r->variable(0), ry = r->variable(1), rz = r->variable(2);
  std::vector<Polynomial> mg{rx, ry, rz}, jg{ry, rz};
  Ideal m(r, mg);
  out.expect(!regular_at(Ideal(s, {q}), Ideal(s, {x, y, z})), "Jacobian test says R_m regular");
  for (std::size_t v = 0; v < 3; ++v)
    out.expect(q.derivative(v).constant_term() == 0, "oracle: Jacobian entry outside m");
  Declarations decl;
  decl.prime = true;
  VerificationReport rep = verify_theorem_2_1(m, PolySequence{jg, std::nullopt}, decl);
  out.equal(to_string(rep.status), std::string("verified"), "status");
  const Check* a = find(rep.hypotheses, "R_p is not a regular local ring");
  out.expect(a && a->pass == true && a->mode == CheckMode::Computed, "case (a) not computed");
  out.expect(equals(ideal_power(m, 2), ideal_product(Ideal(r, jg), m)), "m² ≠ (y,z)m");
  out.expect(oracle::same_through(mul(mg, mg), mul(jg, mg), r, 6), "oracle: m² ≠ (y,z)m");
  out.expect(rep.lengths.has_value(), "no LengthReport");
  if (rep.lengths) {
    const LengthReport& lr = *rep.lengths;
    const std::vector<std::uint64_t> got{lr.lambda_I_over_J, lr.lambda_I2_over_JI, static_cast<std::uint64_t>(lr.r),
                                         lr.lambda_R_over_I, lr.lambda_H1, lr.lambda_delta};
    out.expect(got == std::vector<std::uint64_t>{1, 0, 1, 1, 1, 1}, "LengthReport tuple");
    out.expect(lr.eq1_balanced && lr.sequence_balanced() && lr.eq4_balanced.value_or(false), "unbalanced");
    compare(out, lr, oracle_lengths(jg, mg, r, 2, 5));
  }
  return out;
}

Outcome criterion5() {
  Outcome out;
  RingPtr s = qq({"x", "y", "z"}, {3, 4, 5});
  auto x = s->variable(0), y = s->variable(1), z = s->variable(2);
  std::vector<Polynomial> qg{x * z - y.pow(2), x.pow(3) - y * z, x.pow(2) * y - z.pow(2)};
  RingPtr r = s->with_relations(qg);
  std::vector<Polynomial> jg{r->variable(0)}, ig{r->variable(0), r->variable(1), r->variable(2)};
  ResolutionData rd = homological_profile(Ideal::zero(r));
  out.expect(rd.betti == std::vector<std::size_t>{1, 3, 2}, "betti");
  out.equal(rd.cm_type, 2u, "type");
  out.expect(rd.is_cm, "R not CM");
  check_resolution(out, rd, {}, r, 30, "R");
  // oracle type: socle dimension of R/(x)
  std::uint64_t socle = 0;
  for (std::int64_t d = 0; d <= 20; ++d)
    socle += oracle::colon_dim(jg, ig, r, d) -
             (oracle::monomials(r->weights(), d).size() - oracle::quotient_dim(jg, r, d));
  out.equal(socle, 2u, "oracle socle dimension of R/(x)");
  VerificationReport rep = verify_type_remark(Ideal(r, jg), Ideal(r, ig), rd.cm_type);
  out.equal(to_string(rep.status), std::string("verified"), "status");
  if (rep.lengths) {
    out.equal(rep.lengths->lambda_I2_over_JI + rep.lengths->lambda_delta, 3u, "λ(I²/JI) + λ(δ)");
    OracleLengths o = oracle_lengths(jg, ig, r, 1, 24);
    compare(out, *rep.lengths, o);
    out.equal(o.i2_over_ji + o.delta, 3u, "oracle λ(I²/JI) + λ(δ)");
  } else {
    out.expect(false, "no LengthReport");
  }
  return out;
}

Outcome criterion6() {
  Outcome out;
  RingPtr s = qq({"x", "y"});
  auto x = s->variable(0), y = s->variable(1);
  std::vector<Polynomial> ug{x, y};
  NorthcottResult n = northcott(PolySequence{ug, std::nullopt}, PolyMatrix::diagonal(s, {x, y}));
  out.equal(to_string(n.checks.status), std::string("verified"), "status");
  std::vector<Polynomial> ng{x.pow(2), y.pow(2), x * y}, vg = n.v.elements;
  out.expect(equals(n.n, Ideal(s, ng)), "N = " + n.n.str());
  const Check* b = find(n.checks.conclusions, "(v) : N = (u)");
  const Check* c = find(n.checks.conclusions, "(v) : (u) = N");
  out.expect(b && b->pass == true, "(v) : N = (u) failed");
  out.expect(c && c->pass == true, "(v) : (u) = N failed");
  for (std::int64_t d = 0; d <= 6; ++d) {
    const auto mons = oracle::monomials(s->weights(), d).size();
    out.equal(oracle::colon_dim(vg, ng, s, d), mons - oracle::quotient_dim(ug, s, d), "oracle (v):N, degree " + std::to_string(d));
    out.equal(oracle::colon_dim(vg, ug, s, d), mons - oracle::quotient_dim(ng, s, d), "oracle (v):(u), degree " + std::to_string(d));
  }
  out.expect(is_perfect(n.n), "N not perfect");
  ResolutionData rd = minimal_free_resolution(n.n);
  out.equal(rd.pd, 2, "pd");
  out.equal(codimension(n.n), 2, "grade");
  out.expect(oracle::length(ng, s, 4).has_value(), "oracle: S/N not of finite length");
  check_resolution(out, rd, ng, s, 6, "S/N");
  return out;
}

Outcome criterion7() {
  Outcome out;
  struct Fixture {
    std::string name;
    RingPtr ring;
    std::vector<Polynomial> p, z;
  };
  std::vector<Fixture> fx;
  {
    RingPtr s = qq({"x", "y"});
    auto x = s->variable(0), y = s->variable(1);
    fx.push_back({"E1", s, {x, y}, {x.pow(2), y.pow(2)}});
  }
  {
    RingPtr s = qq({"x", "y", "z"});
    auto x = s->variable(0), y = s->variable(1);
    fx.push_back({"E2", s, {x, y}, {x.pow(2), y.pow(2)}});
  }
  {
    RingPtr s = qq({"x", "y", "z"});
    auto x = s->variable(0), y = s->variable(1), z = s->variable(2);
    RingPtr r = s->with_relations({x.pow(2) - y * z});
    fx.push_back({"E3", r, {r->variable(0), r->variable(1), r->variable(2)}, {r->variable(1), r->variable(2)}});
  }
  for (const auto& f : fx) {
    Declarations decl;
    decl.prime = true;
    VerificationReport rep = verify_cm_section3(Ideal(f.ring, f.p), PolySequence{f.z, std::nullopt}, decl);
    out.equal(to_string(rep.status), std::string("verified"), f.name + " status");
    const Check* gr = find(rep.conclusions, "gr_I(R) is Cohen-Macaulay");
    const Check* rees = find(rep.conclusions, "R[It] is Cohen-Macaulay");
    out.expect(gr && gr->pass == true, f.name + ": gr not CM");
    out.expect(rees && rees->pass == true, f.name + ": Rees not CM");

    // recompute both verdicts and check each resolution against the oracle
    Ideal i = link(Ideal(f.ring, f.z), Ideal(f.ring, f.p));
    ReesPresentation rp = rees_defining_ideal(i);
    Ideal g = assoc_graded_presentation(rp);
    for (const auto* a : {&g, &rp.rees}) {
      ResolutionData rd = homological_profile(*a);
      out.equal(rd.depth, static_cast<long>(rp.ring->nvars()) - rd.pd, f.name + ": Auslander-Buchsbaum");
      out.equal(rd.dim, dimension(*a), f.name + ": dim");
      out.expect(rd.is_cm, f.name + ": depth ≠ dim");
      check_resolution(out, rd, a->generators(), rp.ring, 8, f.name + (a == &g ? " gr" : " Rees"));
    }
    out.expect(specialization_holds(rp), f.name + ": specialization");
    out.equal(dimension(rp.rees), ring_dimension(f.ring) + 1, f.name + ": dim R[It] = d + 1");
  }
  return out;
}

Outcome criterion8() {
  Outcome out;
  suite::Result res = suite::run(20261016, 200);
  for (const auto& c : res.categories) {
    out.expect(c.instances >= 200, c.name + ": only " + std::to_string(c.instances) + " instances");
    out.equal(c.mismatches, 0u, c.name + " mismatches");
  }
  for (const auto& f : res.failures) out.why.push_back(f);
  return out;
}

Outcome criterion9() {
  Outcome out;
  std::ifstream in(LLAB_FIXTURE_SESSION);
  std::ostringstream ss;
  ss << in.rdbuf();
  out.expect(!ss.str().empty(), "cannot read " + std::string(LLAB_FIXTURE_SESSION));
  session::SessionAST ast = session::parse_session(ss.str());
  session::RunOptions seq{limits(), false, false}, par{limits(), true, false};
  const std::string first = session::emit_report(session::run_session(ast, seq), session::Format::Json);
  for (int k = 0; k < 2; ++k)
    out.expect(session::emit_report(session::run_session(ast, seq), session::Format::Json) == first,
               "sequential rerun differs");
  out.expect(session::emit_report(session::run_session(ast, par), session::Format::Json) == first,
             "parallel run differs");
  out.expect(session::parse_session(session::render_session(ast)) == ast, "render/parse round trip");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"E1 link, reduction number one, I² = JI", criterion1},
      {"E1 length identities with independent oracles", criterion2},
      {"E1n negative control", criterion3},
      {"E3 singular case, m² = (y,z)m, lengths (1,0,1,1,1,1)", criterion4},
      {"E4 type 2, λ(I²/JI) + λ(δ) = 3", criterion5},
      {"Northcott ideal of diag(x,y)", criterion6},
      {"gr and Rees Cohen-Macaulay for E1, E2, E3", criterion7},
      {"oracle equivalence on randomized instances", criterion8},
      {"deterministic JSON for the fixture session", criterion9},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.why.push_back(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::cout << "criterion " << (k + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[k].first << "  ("
              << static_cast<long>(ms) << " ms)\n";
    for (const auto& w : o.why) std::cout << "    " << w << "\n";
    std::cout.flush();
  }
  return all ? 0 : 1;
}
