#pragma once

#include <optional>
#include <string>

#include "llab/ideal.hpp"
#include "llab/report.hpp"

namespace llab {

// User assertions for hypotheses that cannot always be computed.
struct Declarations {
  bool prime = false;
  bool ambient_cm = false;
  bool localization_gorenstein = false;
  // Forces the case split of the prime-link theorem ('a' or 'b'); needed in
  // positive characteristic where the Jacobian test is unavailable.
  std::optional<char> case_override;

  std::map<std::string, bool> as_map() const;
};

// A hypothesis value together with how it was obtained.
struct Assessment {
  std::optional<bool> value;
  CheckMode mode = CheckMode::Computed;
  std::string detail;
};

// R Cohen-Macaulay: computed for polynomial rings and homogeneous Q,
// otherwise taken from the declaration.
Assessment assess_ambient_cm(const RingPtr& ring, bool declared);
// R_p Gorenstein: computed when R is a polynomial ring or a homogeneous
// Gorenstein quotient, or when p = m and R is homogeneous; else declared.
Assessment assess_localization_gorenstein(const Ideal& p, bool declared);
// CM type of R when R is homogeneous and Cohen-Macaulay.
std::optional<std::size_t> ring_type(const RingPtr& ring);

// I = J : p for J generated by a regular sequence of length codim p inside
// p. The result carries minimal generators when they are computable.
Ideal link(const Ideal& j, const Ideal& p, bool ambient_cm_declared = false);

// Least r <= r_max with J I^r = I^(r+1).
std::optional<long> reduction_number(const Ideal& j, const Ideal& i, long r_max);

struct NorthcottResult {
  Ideal n;
  PolySequence v;
  Polynomial det;
  VerificationReport checks;
  bool whole_ring = false;
};
NorthcottResult northcott(const PolySequence& u, const PolyMatrix& phi);

struct P1C1Result {
  LengthReport lengths;
  VerificationReport report;
};
P1C1Result verify_p1c1(const Ideal& j, const Ideal& i, bool gorenstein_declared, bool ambient_cm_declared = false);

VerificationReport verify_type_remark(const Ideal& j, const Ideal& i, std::size_t resolved_type);

VerificationReport verify_theorem_2_1(const Ideal& p, const PolySequence& z, const Declarations& decl);

// Hypothesis block shared by the prime-link theorem and its graded
// version; appends checks to `report` and returns J = (z).
Ideal check_prime_link_hypotheses(const Ideal& p, const PolySequence& z, const Declarations& decl,
                                  VerificationReport& report);

}  // namespace llab
