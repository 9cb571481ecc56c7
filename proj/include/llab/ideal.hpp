#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "llab/groebner.hpp"

namespace llab {

// Ideal of R = S/Q stored by preimage generators in S. Every computation
// works with (generators + Q); equality is equality of reduced GBs.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal unit(RingPtr ring);
  static Ideal zero(RingPtr ring);
  // The homogeneous maximal ideal m = (variables).
  static Ideal maximal(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  // Reduced GB of (generators + Q), computed once.
  const GroebnerBasis& gb() const;
  bool is_unit() const { return gb().is_unit(); }
  // True when the ideal is zero in R, i.e. generated inside Q.
  bool is_zero() const;
  bool contains(const Polynomial& f) const { return gb().contains(f); }
  bool contains(const Ideal& other) const;
  bool is_homogeneous() const;
  // Contained in m (zero constant terms modulo Q).
  bool is_proper_local() const;

  // Same ideal, viewed in a ring that differs only in order or relations.
  Ideal in_ring(const RingPtr& target) const;
  // Generators without the Q part: minimal generators when homogeneous,
  // otherwise the GB elements not in Q.
  std::vector<Polynomial> tidy_generators() const;

  bool operator==(const Ideal& other) const;
  std::string str() const;

 private:
  struct Cache {
    std::mutex mu;
    std::optional<GroebnerBasis> gb;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

enum class IdealOp { Sum, Product, Power };

Ideal ideal_arith(const Ideal& a, const Ideal& b, IdealOp kind);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, long k);

Ideal intersect(const Ideal& a, const Ideal& b);
Ideal colon(const Ideal& a, const Ideal& b);
Ideal colon(const Ideal& a, const Polynomial& b);
// (A + Q) ∩ k[other variables], as an ideal of the ambient ring S whose
// generators do not involve `vars`.
Ideal eliminate(const Ideal& a, const std::vector<std::size_t>& vars);
bool equals(const Ideal& a, const Ideal& b);

// Krull dimension of R/A.
long dimension(const Ideal& a);
// dim R - dim R/A.
long codimension(const Ideal& a);
long ring_dimension(const RingPtr& ring);

bool is_artinian(const Ideal& a);
// R/A Artinian and supported only at m.
bool is_m_primary(const Ideal& a);
// λ(R/A) by standard monomials.
std::uint64_t artinian_length(const Ideal& a);
// Number of standard monomials of weighted degree `d`.
std::uint64_t hilbert_function(const Ideal& a, std::int64_t d);

std::vector<Polynomial> minimal_generators(const Ideal& a);
std::size_t min_num_gens(const Ideal& a);

bool is_regular_sequence(const PolySequence& z, const RingPtr& ring, bool ambient_cm);
bool symbolic_square_contains(const Polynomial& z, const Ideal& p);
// Jacobian criterion for (S/Q)_p; `q` is an ideal of the ambient S.
bool regular_at(const Ideal& q, const Ideal& p);
bool regular_at(const Ideal& p);

// Monomial-ideal combinatorics shared with the module code.
// Number of monomials outside (leading); nullopt when infinite.
std::optional<std::uint64_t> standard_monomial_count(std::span<const Monomial> leading, std::size_t nvars,
                                                     std::optional<std::int64_t> degree_cap = std::nullopt,
                                                     const Ring* ring = nullptr);
// Largest set of variables whose monomials avoid (leading).
long independent_set_dimension(std::span<const Monomial> leading, std::size_t nvars);

// A copy of `base` with extra variables placed first. With `eliminate`, the
// order is a block order eliminating the new variables.
struct RingExtension {
  RingPtr ring;
  std::vector<std::size_t> base_map;  // base variable i -> index in ring
  std::vector<std::size_t> extra;     // indices of the new variables
};
RingExtension adjoin_variables(const RingPtr& base, const std::vector<std::string>& stems,
                               const std::vector<std::int64_t>& weights, bool eliminate, bool keep_relations);
std::string fresh_name(const Ring& ring, const std::string& stem);

}  // namespace llab
