#include "llab/ring.hpp"

#include <algorithm>
#include <set>

#include "llab/error.hpp"
#include "llab/polynomial.hpp"

namespace llab {

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::int32_t e) { return e == 0; });
}

std::int64_t Monomial::total_degree() const {
  std::int64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    std::int32_t v;
    if (__builtin_add_overflow(exps_[i], other.exps_[i], &v))
      throw Error(ErrorCode::OverflowError, "exponent overflow in monomial product");
    r.exps_[i] = v;
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] - other.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::DegRevLex: return "degrevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::Block: return "block";
  }
  return "?";
}

RingPtr Ring::create(Field field, std::vector<std::string> names, std::vector<std::int64_t> weights,
                     MonomialOrder order) {
  if (names.empty()) throw Error(ErrorCode::InvalidArgument, "a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw Error(ErrorCode::DuplicateName, "variable '" + n + "' repeated");
  if (weights.empty()) weights.assign(names.size(), 1);
  if (weights.size() != names.size())
    throw Error(ErrorCode::SizeMismatch, "one weight per variable is required");
  for (auto w : weights)
    if (w <= 0) throw Error(ErrorCode::InvalidArgument, "weights must be positive");
  if (order.kind() == OrderKind::Block && order.eliminated().size() != names.size())
    throw Error(ErrorCode::SizeMismatch, "block order mask must cover every variable");
  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->field_ = field;
  ring->names_ = std::move(names);
  ring->weights_ = std::move(weights);
  ring->order_ = std::move(order);
  return ring;
}

RingPtr Ring::with_relations(const std::vector<Polynomial>& relations) const {
  auto ring = std::shared_ptr<Ring>(new Ring(*this));
  ring->relations_.clear();
  for (const auto& q : relations) {
    if (!q.ring() || !q.ring()->same_ambient(*this))
      throw Error(ErrorCode::RingMismatch, "relation lives in another ring");
    if (q.is_zero()) continue;
    if (q.constant_term() != 0)
      throw Error(ErrorCode::InvalidArgument, "relation " + q.str() + " has a nonzero constant term");
    ring->relations_.push_back(q.terms());
  }
  return ring;
}

RingPtr Ring::with_order(MonomialOrder order) const {
  auto ring = std::shared_ptr<Ring>(new Ring(*this));
  ring->order_ = std::move(order);
  return ring;
}

RingPtr Ring::ambient() const {
  if (relations_.empty()) return shared_from_this();
  auto ring = std::shared_ptr<Ring>(new Ring(*this));
  ring->relations_.clear();
  return ring;
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::int64_t Ring::degree(const Monomial& m) const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += weights_[i] * m[i];
  return d;
}

int Ring::grevlex(const Monomial& a, const Monomial& b, const std::vector<bool>* mask, bool in_mask) const {
  std::int64_t da = 0, db = 0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (mask && (*mask)[i] != in_mask) continue;
    da += weights_[i] * a[i];
    db += weights_[i] * b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t k = n; k-- > 0;) {
    if (mask && (*mask)[k] != in_mask) continue;
    if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
  }
  return 0;
}

int Ring::compare(const Monomial& a, const Monomial& b) const {
  switch (order_.kind()) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case OrderKind::DegRevLex:
      return grevlex(a, b, nullptr, true);
    case OrderKind::Block: {
      int c = grevlex(a, b, &order_.eliminated(), true);
      if (c != 0) return c;
      return grevlex(a, b, &order_.eliminated(), false);
    }
  }
  return 0;
}

std::vector<Polynomial> Ring::relations() const {
  std::vector<Polynomial> out;
  out.reserve(relations_.size());
  for (const auto& terms : relations_) out.emplace_back(shared_from_this(), terms);
  return out;
}

Polynomial Ring::variable(std::size_t i) const {
  Monomial m(nvars());
  m.set(i, 1);
  return Polynomial::term(shared_from_this(), std::move(m), Coeff(1));
}

Polynomial Ring::constant(const Coeff& c) const {
  return Polynomial::term(shared_from_this(), Monomial(nvars()), c);
}

Polynomial Ring::zero() const { return Polynomial(shared_from_this()); }
Polynomial Ring::one() const { return constant(Coeff(1)); }

std::vector<Polynomial> Ring::variables() const {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < nvars(); ++i) out.push_back(variable(i));
  return out;
}

bool Ring::same_ambient(const Ring& other) const {
  return field_ == other.field_ && names_ == other.names_ && weights_ == other.weights_ &&
         order_ == other.order_;
}

bool Ring::operator==(const Ring& other) const {
  if (!same_ambient(other) || relations_.size() != other.relations_.size()) return false;
  return relations() == other.relations();
}

std::string Ring::str() const {
  std::string s = field_.name() + "[";
  for (std::size_t i = 0; i < names_.size(); ++i) s += (i ? "," : "") + names_[i];
  s += "] " + order_.name();
  if (std::any_of(weights_.begin(), weights_.end(), [](std::int64_t w) { return w != 1; })) {
    s += " weights(";
    for (std::size_t i = 0; i < weights_.size(); ++i) s += (i ? "," : "") + std::to_string(weights_[i]);
    s += ")";
  }
  if (!relations_.empty()) {
    s += " / (";
    auto rel = relations();
    for (std::size_t i = 0; i < rel.size(); ++i) s += (i ? ", " : "") + rel[i].str();
    s += ")";
  }
  return s;
}

bool same_ambient(const RingPtr& a, const RingPtr& b) {
  if (!a || !b) return false;
  return a == b || a->same_ambient(*b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (!same_ambient(a, b)) throw Error(ErrorCode::RingMismatch, std::string(where) + ": operands live in different rings");
}

}  // namespace llab
