#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "llab/field.hpp"
#include "llab/monomial.hpp"

namespace llab {

class Polynomial;
class Ring;
using RingPtr = std::shared_ptr<const Ring>;

enum class OrderKind { DegRevLex, Lex, Block };

// Multiplicative monomial order. `Block` compares the variables flagged in
// `eliminate` first (weighted degrevlex), then the remaining variables
// (weighted degrevlex), which makes it an elimination order for the block.
class MonomialOrder {
 public:
  static MonomialOrder degrevlex() { return MonomialOrder(OrderKind::DegRevLex, {}); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, {}); }
  static MonomialOrder block(std::vector<bool> eliminate) {
    return MonomialOrder(OrderKind::Block, std::move(eliminate));
  }

  MonomialOrder() : MonomialOrder(OrderKind::DegRevLex, {}) {}

  OrderKind kind() const { return kind_; }
  const std::vector<bool>& eliminated() const { return block_; }
  std::string name() const;

  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(OrderKind kind, std::vector<bool> block) : kind_(kind), block_(std::move(block)) {}

  OrderKind kind_;
  std::vector<bool> block_;
};

// The graded-local model R = S/Q: S a weighted polynomial ring over a field,
// Q a list of relations with zero constant term. Rings are immutable and
// always handled through RingPtr.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  static RingPtr create(Field field, std::vector<std::string> names,
                        std::vector<std::int64_t> weights = {},
                        MonomialOrder order = MonomialOrder::degrevlex());

  // Same ambient ring with relations Q attached.
  RingPtr with_relations(const std::vector<Polynomial>& relations) const;
  // Same ring (relations kept) under another monomial order.
  RingPtr with_order(MonomialOrder order) const;
  // S itself, relations dropped.
  RingPtr ambient() const;

  const Field& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  const MonomialOrder& order() const { return order_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  // Three-way comparison of monomials under the ring's order.
  int compare(const Monomial& a, const Monomial& b) const;
  std::int64_t degree(const Monomial& m) const;

  bool has_relations() const { return !relations_.empty(); }
  std::vector<Polynomial> relations() const;

  Polynomial variable(std::size_t i) const;
  Polynomial constant(const Coeff& c) const;
  Polynomial zero() const;
  Polynomial one() const;
  std::vector<Polynomial> variables() const;

  // Structural equality of S (field, names, weights, order), ignoring Q.
  bool same_ambient(const Ring& other) const;
  // Structural equality including Q (as term lists).
  bool operator==(const Ring& other) const;

  std::string str() const;

 private:
  Ring() = default;
  int grevlex(const Monomial& a, const Monomial& b, const std::vector<bool>* mask, bool in_mask) const;

  Field field_ = Field::rationals();
  std::vector<std::string> names_;
  std::vector<std::int64_t> weights_;
  MonomialOrder order_;
  std::vector<std::vector<Term>> relations_;
};

bool same_ambient(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

}  // namespace llab
