#pragma once

#include <vector>

#include "llab/linkage.hpp"

namespace llab {

// R[It] = S[T]/L and gr_I(R) = S[T]/(L + I S[T]). `ring` is S[T] with
// the base relations Q attached; base variables come first, then T_1..T_k.
struct ReesPresentation {
  RingPtr base;
  RingPtr ring;
  std::vector<std::size_t> base_map;
  std::vector<std::size_t> fiber;
  std::vector<Polynomial> generators;
  Ideal rees;
  std::vector<std::string> notes;
};

ReesPresentation rees_defining_ideal(const Ideal& i);
Ideal assoc_graded_presentation(const ReesPresentation& rp);
Ideal assoc_graded_presentation(const Ideal& i);

// T_j -> f_j t kills every generator of L modulo Q.
bool specialization_holds(const ReesPresentation& rp);

VerificationReport verify_cm_section3(const Ideal& p, const PolySequence& z, const Declarations& decl);

}  // namespace llab
