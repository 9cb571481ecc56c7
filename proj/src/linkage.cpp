#include "llab/linkage.hpp"

#include <algorithm>

#include "llab/error.hpp"
#include "llab/koszul.hpp"
#include "llab/resolution.hpp"

namespace llab {

std::map<std::string, bool> Declarations::as_map() const {
  std::map<std::string, bool> m{{"prime", prime}, {"ambient_cm", ambient_cm},
                                {"localization_gorenstein", localization_gorenstein}};
  if (case_override) m[std::string("case_") + *case_override] = true;
  return m;
}

namespace {

std::optional<ResolutionData> homogeneous_ring_profile(const RingPtr& ring) {
  Ideal zero = Ideal::zero(ring);
  if (!zero.is_homogeneous()) return std::nullopt;
  return homological_profile(zero);
}

Check from(std::string desc, const Assessment& a) { return Check{std::move(desc), a.mode, a.value, a.detail}; }

Check computed(std::string desc, bool pass, std::string detail = {}) {
  return Check{std::move(desc), CheckMode::Computed, pass, std::move(detail)};
}

std::string list(const std::vector<Polynomial>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

std::vector<Polynomial> minimal_or_tidy(const Ideal& a) {
  try {
    return minimal_generators(a);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotComputable) throw;
    return a.tidy_generators();
  }
}

// Caller's generators of I with the ones that vanish in R dropped.
std::vector<Polynomial> nonzero_generators(const Ideal& i) {
  Ideal q = Ideal::zero(i.ring());
  std::vector<Polynomial> out;
  for (const auto& g : i.generators())
    if (!q.contains(g)) out.push_back(g);
  return out;
}

LengthReport compute_lengths(const Ideal& j, const Ideal& i, const std::vector<Polynomial>& gens, long d,
                             bool gorenstein) {
  const RingPtr& r = i.ring();
  LengthReport lr;
  lr.d = d;
  lr.g = codimension(j);
  lr.r = static_cast<long>(gens.size()) - d;
  lr.s = ring_type(r);
  Ideal i2 = ideal_power(i, 2);
  lr.lambda_I_over_J = ideal_subquotient_length(i, j);
  lr.lambda_I2_over_JI = ideal_subquotient_length(i2, ideal_product(j, i));
  lr.lambda_R_over_I = artinian_length(i);
  lr.lambda_I_over_I2 = ideal_subquotient_length(i, i2);
  lr.lambda_H1 = h1_length(gens, r);
  lr.lambda_delta = delta_length(gens, r);
  lr.eq1_balanced = lr.eq1_holds();
  lr.delta_nonzero = lr.lambda_delta != 0;
  if (lr.r == 1 && gorenstein) lr.eq4_balanced = lr.eq4_holds();
  return lr;
}

}  // namespace

Assessment assess_ambient_cm(const RingPtr& ring, bool declared) {
  if (!ring->has_relations()) return {true, CheckMode::Computed, "polynomial ring"};
  if (auto prof = homogeneous_ring_profile(ring))
    return {prof->is_cm, CheckMode::Computed,
            "depth " + std::to_string(prof->depth) + ", dim " + std::to_string(prof->dim)};
  if (declared) return {true, CheckMode::Declared, "declared"};
  return {std::nullopt, CheckMode::Declared, "not homogeneous and not declared"};
}

std::optional<std::size_t> ring_type(const RingPtr& ring) {
  if (!ring->has_relations()) return 1;
  auto prof = homogeneous_ring_profile(ring);
  if (!prof || !prof->is_cm) return std::nullopt;
  return prof->cm_type;
}

Assessment assess_localization_gorenstein(const Ideal& p, bool declared) {
  const RingPtr& ring = p.ring();
  if (!ring->has_relations()) return {true, CheckMode::Computed, "localization of a polynomial ring is regular"};
  if (auto prof = homogeneous_ring_profile(ring)) {
    const bool gorenstein = prof->is_cm && prof->cm_type == 1;
    if (gorenstein) return {true, CheckMode::Computed, "R is Cohen-Macaulay of type 1"};
    if (equals(p, Ideal::maximal(ring)))
      return {false, CheckMode::Computed,
              prof->is_cm ? "R_m has type " + std::to_string(prof->cm_type) : "R_m is not Cohen-Macaulay"};
  }
  if (declared) return {true, CheckMode::Declared, "declared"};
  return {std::nullopt, CheckMode::Declared, "not computable here and not declared"};
}

Ideal link(const Ideal& j, const Ideal& p, bool ambient_cm_declared) {
  require_same_ring(j.ring(), p.ring(), "link");
  const RingPtr& r = j.ring();
  if (!p.contains(j)) throw Error(ErrorCode::NotContained, j.str() + " is not contained in " + p.str());
  const long g = codimension(p);
  std::vector<Polynomial> jg = minimal_or_tidy(j);
  if (static_cast<long>(jg.size()) != g)
    throw Error(ErrorCode::WrongLength,
                "J needs " + std::to_string(jg.size()) + " generators but codim p = " + std::to_string(g));
  Assessment cm = assess_ambient_cm(r, ambient_cm_declared);
  if (!is_regular_sequence(PolySequence{jg, std::nullopt}, r, cm.value.value_or(false)))
    throw Error(ErrorCode::NotRegularSequence, list(jg) + " is not a regular sequence");
  Ideal i = colon(j, p);
  return Ideal(r, minimal_or_tidy(i));
}

std::optional<long> reduction_number(const Ideal& j, const Ideal& i, long r_max) {
  require_same_ring(j.ring(), i.ring(), "reduction_number");
  if (r_max < 0) throw Error(ErrorCode::InvalidArgument, "r_max must be nonnegative");
  if (!i.contains(j)) throw Error(ErrorCode::NotContained, j.str() + " is not contained in " + i.str());
  Ideal ir = Ideal::unit(i.ring());
  for (long r = 0; r <= r_max; ++r) {
    Ideal next = ideal_power(i, r + 1);
    if (equals(ideal_product(j, ir), next)) return r;
    ir = std::move(next);
  }
  return std::nullopt;
}

NorthcottResult northcott(const PolySequence& u, const PolyMatrix& phi) {
  const std::size_t n = u.size();
  if (n == 0) throw Error(ErrorCode::EmptyInput, "empty sequence u");
  if (phi.rows() != n || phi.cols() != n)
    throw Error(ErrorCode::SizeMismatch, "matrix is " + std::to_string(phi.rows()) + "x" +
                                             std::to_string(phi.cols()) + " but u has " + std::to_string(n) +
                                             " elements");
  const RingPtr& r = phi.ring();
  for (const auto& e : u.elements) require_same_ring(e.ring(), r, "northcott");

  NorthcottResult res;
  res.v.elements = phi.apply(u.elements);
  Ideal vi(r, res.v.elements), ui(r, u.elements);
  long grade = static_cast<long>(n);
  if (!vi.is_unit()) {
    grade = codimension(vi);
    if (grade < static_cast<long>(n))
      throw Error(ErrorCode::GradeDeficient,
                  "codim " + list(res.v.elements) + " = " + std::to_string(grade) + " < " + std::to_string(n));
  }
  res.det = phi.determinant();
  std::vector<Polynomial> ng = res.v.elements;
  ng.push_back(res.det);
  res.n = Ideal(r, ng);

  VerificationReport& rep = res.checks;
  rep.task = "northcott";
  rep.hypotheses.push_back(computed("grade (v) = n", true, "codim (v) = " + std::to_string(grade)));
  if (res.n.is_unit()) {
    res.whole_ring = true;
    rep.notes.push_back("N is the whole ring");
    rep.finalize();
    return res;
  }
  rep.conclusions.push_back(computed("(v) : N = (u)", equals(colon(vi, res.n), ui)));
  rep.conclusions.push_back(computed("(v) : (u) = N", equals(colon(vi, ui), res.n)));
  if (!r->has_relations() && res.n.is_homogeneous()) {
    ResolutionData rd = minimal_free_resolution(res.n);
    const long gr = codimension(res.n);
    rep.conclusions.push_back(computed("N is perfect: grade N = pd R/N", gr == rd.pd,
                                       "pd " + std::to_string(rd.pd) + ", grade " + std::to_string(gr)));
  } else {
    rep.conclusions.push_back(
        Check{"N is perfect: grade N = pd R/N", CheckMode::Computed, std::nullopt,
              "needs a homogeneous ideal of a polynomial ring"});
  }
  rep.finalize();
  return res;
}

P1C1Result verify_p1c1(const Ideal& j, const Ideal& i, bool gorenstein_declared, bool ambient_cm_declared) {
  require_same_ring(j.ring(), i.ring(), "verify_p1c1");
  const RingPtr& r = j.ring();
  if (!is_m_primary(j)) throw Error(ErrorCode::NotArtinian, "J = " + j.str() + " is not m-primary");
  const long d = ring_dimension(r);
  const std::size_t nu_j = minimal_generators(j).size();
  if (static_cast<long>(nu_j) != d)
    throw Error(ErrorCode::WrongJSize, "ν(J) = " + std::to_string(nu_j) + " but dim R = " + std::to_string(d));
  if (!i.contains(j)) throw Error(ErrorCode::NotContained, j.str() + " is not contained in " + i.str());
  if (i.is_unit()) throw Error(ErrorCode::PreconditionViolated, "I is the unit ideal");
  std::vector<Polynomial> gens = nonzero_generators(i);
  const std::size_t nu_i = min_num_gens(i);
  if (gens.size() != nu_i)
    throw Error(ErrorCode::NonMinimalGenerators, std::to_string(gens.size()) + " generators given for I, ν(I) = " +
                                                     std::to_string(nu_i));

  Assessment cm = assess_ambient_cm(r, ambient_cm_declared);
  Assessment gor = assess_localization_gorenstein(Ideal::maximal(r), gorenstein_declared);
  P1C1Result out;
  LengthReport& lr = out.lengths;
  lr = compute_lengths(j, i, gens, d, gor.value.value_or(false));

  VerificationReport& rep = out.report;
  rep.task = "verify-p1c1";
  rep.declarations = {{"ambient_cm", ambient_cm_declared}, {"gorenstein", gorenstein_declared}};
  rep.hypotheses.push_back(from("R is Cohen-Macaulay", cm));
  rep.hypotheses.push_back(computed("J is m-primary with ν(J) = dim R", true, "d = " + std::to_string(d)));
  rep.hypotheses.push_back(computed("J ⊆ I", true));
  rep.hypotheses.push_back(computed("I is minimally generated by d + r elements", true,
                                    "ν(I) = " + std::to_string(nu_i) + ", r = " + std::to_string(lr.r)));
  rep.conclusions.push_back(computed("λ(I/J) = λ(I²/JI) + r·λ(R/I) - λ(H1) + λ(δ)", lr.eq1_balanced));
  rep.conclusions.push_back(computed("λ(δ) - λ(H1) + (d+r)·λ(R/I) - λ(I/I²) = 0", lr.sequence_balanced()));
  if (lr.r == 1) {
    rep.hypotheses.push_back(from("R is Gorenstein", gor));
    if (gor.value.value_or(false)) {
      rep.conclusions.push_back(computed("λ(I/J) = λ(I²/JI) + λ(δ)", *lr.eq4_balanced));
      rep.conclusions.push_back(computed("δ(I) ≠ 0", lr.delta_nonzero));
      rep.conclusions.push_back(computed("λ(H1) = λ(R/I)", lr.lambda_H1 == lr.lambda_R_over_I));
    }
  } else {
    rep.notes.push_back("r = " + std::to_string(lr.r) + ": the r = 1 Gorenstein identity is skipped");
  }
  rep.lengths = lr;
  rep.finalize();
  return out;
}

VerificationReport verify_type_remark(const Ideal& j, const Ideal& i, std::size_t resolved_type) {
  require_same_ring(j.ring(), i.ring(), "verify_type_remark");
  const RingPtr& r = j.ring();
  const long d = ring_dimension(r);
  std::vector<Polynomial> gens = minimal_generators(i);
  if (static_cast<long>(gens.size()) <= d)
    throw Error(ErrorCode::PreconditionViolated,
                "ν(I) = " + std::to_string(gens.size()) + " does not exceed dim R = " + std::to_string(d));
  if (resolved_type == 0) throw Error(ErrorCode::PreconditionViolated, "type must be at least 1");
  const std::size_t s = resolved_type;

  VerificationReport rep;
  rep.task = "verify-type";
  Ideal m = Ideal::maximal(r);
  rep.hypotheses.push_back(computed("I = J : m", equals(i, colon(j, m))));
  rep.hypotheses.push_back(computed("R is Cohen-Macaulay of type s", true, "s = " + std::to_string(s)));
  LengthReport lr = compute_lengths(j, i, gens, d, s == 1);
  const std::uint64_t lhs = lr.lambda_I2_over_JI + lr.lambda_delta;
  const std::uint64_t rhs = s * (s + 1) / 2;
  rep.conclusions.push_back(computed("λ(I²/JI) + λ(δ) = s(s+1)/2", lhs == rhs,
                                     std::to_string(lr.lambda_I2_over_JI) + " + " + std::to_string(lr.lambda_delta) +
                                         " = " + std::to_string(lhs) + ", s(s+1)/2 = " + std::to_string(rhs)));
  if (s == 1)
    rep.conclusions.push_back(computed("λ(I/J) = λ(I²/JI) + λ(δ)", lr.eq4_holds()));
  rep.lengths = lr;
  rep.finalize();
  return rep;
}

Ideal check_prime_link_hypotheses(const Ideal& p, const PolySequence& z, const Declarations& decl,
                                  VerificationReport& rep) {
  const RingPtr& r = p.ring();
  for (const auto& f : z.elements) require_same_ring(f.ring(), r, "prime link");
  Ideal j(r, z.elements);
  rep.declarations = decl.as_map();

  Assessment cm = assess_ambient_cm(r, decl.ambient_cm);
  rep.hypotheses.push_back(from("R is Cohen-Macaulay", cm));
  rep.hypotheses.push_back(Check{"p is prime", CheckMode::Declared,
                                 decl.prime ? std::optional<bool>(true) : std::nullopt,
                                 decl.prime ? "declared" : "not declared"});
  rep.hypotheses.push_back(from("R_p is Gorenstein", assess_localization_gorenstein(p, decl.localization_gorenstein)));

  const bool inside = p.contains(j);
  rep.hypotheses.push_back(computed("z ⊆ p", inside));

  Check regular{"z is a regular sequence", CheckMode::Computed, std::nullopt, {}};
  if (cm.value.value_or(false)) {
    try {
      regular.pass = is_regular_sequence(z, r, true);
      regular.detail = "dim R - dim R/(z) = " + std::to_string(ring_dimension(r) - dimension(j));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotProper) throw;
      regular.pass = false;
      regular.detail = e.detail();
    }
  } else {
    regular.detail = "needs R Cohen-Macaulay";
  }
  rep.hypotheses.push_back(regular);

  const long g = codimension(p);
  rep.hypotheses.push_back(computed("length of z = codim p", static_cast<long>(z.size()) == g,
                                    "|z| = " + std::to_string(z.size()) + ", codim p = " + std::to_string(g)));

  char which;
  CheckMode mode = CheckMode::Computed;
  if (decl.case_override) {
    which = *decl.case_override;
    mode = CheckMode::Declared;
  } else {
    which = regular_at(p) ? 'b' : 'a';
  }
  rep.notes.push_back(std::string("case ") + which);
  if (which == 'a') {
    rep.hypotheses.push_back(Check{"R_p is not a regular local ring", mode, true,
                                   mode == CheckMode::Computed ? "Jacobian criterion" : "declared"});
  } else {
    rep.hypotheses.push_back(Check{"R_p is a regular local ring", mode, true,
                                   mode == CheckMode::Computed ? "Jacobian criterion" : "declared"});
    rep.hypotheses.push_back(computed("dim R_p ≥ 2", g >= 2, "dim R_p = " + std::to_string(g)));
    std::vector<Polynomial> in_sq;
    for (const auto& f : z.elements) {
      if (!p.contains(f)) continue;
      if (symbolic_square_contains(f, p)) in_sq.push_back(f);
    }
    rep.hypotheses.push_back(computed("two elements of z lie in p^(2)", in_sq.size() >= 2,
                                      std::to_string(in_sq.size()) + " in p^(2): " + list(in_sq)));
  }
  return j;
}

VerificationReport verify_theorem_2_1(const Ideal& p, const PolySequence& z, const Declarations& decl) {
  VerificationReport rep;
  rep.task = "verify-thm21";
  Ideal j = check_prime_link_hypotheses(p, z, decl, rep);
  const RingPtr& r = p.ring();
  const bool hyp_failed = std::any_of(rep.hypotheses.begin(), rep.hypotheses.end(),
                                      [](const Check& c) { return c.pass.has_value() && !*c.pass; });
  if (hyp_failed) rep.notes.push_back("conclusions evaluated for information only");

  Ideal i(r, minimal_or_tidy(colon(j, p)));
  rep.notes.push_back("I = J : p = " + list(i.generators()));
  if (i.is_unit()) {
    rep.conclusions.push_back(computed("I is proper", false));
    rep.finalize();
    return rep;
  }
  Ideal i2 = ideal_power(i, 2);
  Ideal ji = ideal_product(j, i);
  std::string witness;
  for (const auto& f : minimal_or_tidy(i2))
    if (!ji.contains(f)) {
      witness = "witness " + f.str() + " ∉ JI";
      break;
    }
  rep.conclusions.push_back(computed("I² = JI", witness.empty(), witness));
  rep.conclusions.push_back(computed("J ⊆ I", i.contains(j)));
  const long g = codimension(p);
  const long gi = codimension(i);
  rep.conclusions.push_back(computed("codim I = g", gi == g, "codim I = " + std::to_string(gi)));

  const long d = ring_dimension(r);
  if (!hyp_failed && is_m_primary(j) && static_cast<long>(z.size()) == d && is_m_primary(i)) {
    std::vector<Polynomial> gens = minimal_generators(i);
    Assessment gor = assess_localization_gorenstein(Ideal::maximal(r), decl.localization_gorenstein);
    rep.lengths = compute_lengths(j, i, gens, d, gor.value.value_or(false));
  } else {
    rep.notes.push_back("lengths skipped: I is not m-primary or J is not a system of parameters");
  }
  rep.finalize();
  return rep;
}

}  // namespace llab
