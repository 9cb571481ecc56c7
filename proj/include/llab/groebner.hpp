#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "llab/polynomial.hpp"

namespace llab {

struct VTerm {
  Monomial mono;
  std::uint32_t pos;
  Coeff coeff;
};

// Element of a free module S^rank, stored as one term list in
// term-over-position order: monomials compare first, and on ties the lower
// position index is the larger term.
class ModuleVector {
 public:
  ModuleVector() = default;
  ModuleVector(RingPtr ring, std::size_t rank) : ring_(std::move(ring)), rank_(rank) {}
  ModuleVector(RingPtr ring, const std::vector<Polynomial>& coords);
  ModuleVector(RingPtr ring, std::size_t rank, std::vector<VTerm> terms);

  static ModuleVector unit(RingPtr ring, std::size_t rank, std::size_t i);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<VTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const VTerm& leading() const;

  Polynomial component(std::size_t i) const;
  std::vector<Polynomial> components() const;
  bool is_homogeneous(std::span<const std::int64_t> shifts) const;
  // Degree of the leading term with the given column shifts.
  std::int64_t degree(std::span<const std::int64_t> shifts) const;

  ModuleVector operator+(const ModuleVector& o) const;
  ModuleVector operator-(const ModuleVector& o) const;
  ModuleVector scaled(const Coeff& c) const;
  ModuleVector mul_term(const Monomial& m, const Coeff& c) const;
  ModuleVector times(const Polynomial& f) const;
  ModuleVector monic() const;
  // Coordinates [first, first+count) as a vector of rank `count`.
  ModuleVector slice(std::size_t first, std::size_t count) const;
  // Shifts every position by `offset` inside a module of rank `new_rank`.
  ModuleVector embedded(std::size_t new_rank, std::size_t offset) const;
  ModuleVector map_variables(const RingPtr& target, std::span<const std::size_t> var_map) const;
  ModuleVector in_ring(const RingPtr& target) const;

  bool operator==(const ModuleVector& o) const;
  std::string str() const;

 private:
  RingPtr ring_;
  std::size_t rank_ = 0;
  std::vector<VTerm> terms_;

};

int compare_terms(const Ring& ring, const Monomial& a, std::uint32_t pa, const Monomial& b, std::uint32_t pb);

// Reduced (auto-reduced, monic) Gröbner basis of an ideal of the ambient
// polynomial ring, sorted by descending leading term.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
      : ring_(std::move(ring)), elements_(std::move(elements)) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool is_unit() const;
  std::vector<Monomial> leading_monomials() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  bool operator==(const GroebnerBasis& o) const { return elements_ == o.elements_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
};

class ModuleBasis {
 public:
  ModuleBasis() = default;
  ModuleBasis(RingPtr ring, std::size_t rank, std::vector<ModuleVector> elements)
      : ring_(std::move(ring)), rank_(rank), elements_(std::move(elements)) {}

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<ModuleVector>& elements() const { return elements_; }

  ModuleVector normal_form(const ModuleVector& f) const;
  bool contains(const ModuleVector& f) const { return normal_form(f).is_zero(); }

 private:
  RingPtr ring_;
  std::size_t rank_ = 0;
  std::vector<ModuleVector> elements_;
};

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g);
ModuleVector normal_form(const ModuleVector& f, const ModuleBasis& g);

// Reduced GB of (gens) + Q in the ambient ring S (preimage convention).
GroebnerBasis reduced_gb(const std::vector<Polynomial>& gens, const RingPtr& ring);
// Reduced module GB of <gens> + Q*S^rank.
ModuleBasis module_gb(const std::vector<ModuleVector>& gens, const RingPtr& ring, std::size_t rank);

// Raw Buchberger run over the ambient ring (Q is NOT adjoined). With
// `track_syzygies`, every generator carries its cofactor vector and the
// result lists generators of the syzygy module of `gens`.
struct BuchbergerResult {
  std::vector<ModuleVector> basis;
  std::vector<ModuleVector> syzygies;
  std::uint64_t reductions = 0;
};
BuchbergerResult buchberger(const RingPtr& ring, std::size_t rank, const std::vector<ModuleVector>& gens,
                            bool track_syzygies);

// Submodule of R^rank for R = S/Q, stored by preimage generators in S^rank.
class Submodule {
 public:
  Submodule() = default;
  Submodule(RingPtr ring, std::size_t rank, std::vector<ModuleVector> gens);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<ModuleVector>& generators() const { return gens_; }
  bool is_zero() const;

  const ModuleBasis& gb() const;
  bool contains(const ModuleVector& v) const { return gb().contains(v); }
  bool contains(const Submodule& other) const;

 private:
  struct Cache {
    std::mutex mu;
    std::optional<ModuleBasis> gb;
  };
  RingPtr ring_;
  std::size_t rank_ = 0;
  std::vector<ModuleVector> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Z = { a : sum a_i gens_i = 0 in R }, as a preimage submodule of S^k.
Submodule syzygies(const std::vector<Polynomial>& gens, const RingPtr& ring);
Submodule syzygies(const std::vector<ModuleVector>& gens, const RingPtr& ring);

// Minimal homogeneous generating set of the image of <gens> in R^rank, for
// vectors homogeneous w.r.t. `shifts`; sorted by degree.
std::vector<ModuleVector> minimal_module_generators(const std::vector<ModuleVector>& gens, const RingPtr& ring,
                                                    std::span<const std::int64_t> shifts);

}  // namespace llab
