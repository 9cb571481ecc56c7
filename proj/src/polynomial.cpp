#include "llab/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "llab/error.hpp"

namespace llab {

namespace {

std::vector<Term> normalize(const Ring& ring, std::vector<Term> terms) {
  const Field& k = ring.field();
  for (auto& t : terms) {
    if (t.mono.size() != ring.nvars())
      throw Error(ErrorCode::RingMismatch, "monomial has the wrong number of variables");
    t.coeff = k.from_rational(t.coeff);
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ring.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = k.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

// Merges a + sign*b, both already sorted.
std::vector<Term> merge(const Ring& ring, const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  const Field& k = ring.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = ring.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, subtract ? k.neg(b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Coeff s = subtract ? k.sub(a[i].coeff, b[j].coeff) : k.add(a[i].coeff, b[j].coeff);
      if (s != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  terms_ = normalize(*ring_, std::move(terms));
}

Polynomial Polynomial::term(RingPtr ring, Monomial mono, Coeff coeff) {
  std::vector<Term> t;
  t.push_back({std::move(mono), std::move(coeff)});
  return Polynomial(std::move(ring), std::move(t));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading term of the zero polynomial");
  return terms_.front();
}

std::int64_t Polynomial::degree() const {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, ring_->degree(t.mono));
  return d;
}

std::optional<std::int64_t> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  std::int64_t d = ring_->degree(terms_[0].mono);
  for (const auto& t : terms_)
    if (ring_->degree(t.mono) != d) return std::nullopt;
  return d;
}

Coeff Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Coeff(0);
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[var] != 0; });
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, ring_->field().neg(t.coeff)});
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  require_same_ring(ring_, g.ring_, "add");
  Polynomial r(ring_);
  r.terms_ = merge(*ring_, terms_, g.terms_, false);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  require_same_ring(ring_, g.ring_, "sub");
  Polynomial r(ring_);
  r.terms_ = merge(*ring_, terms_, g.terms_, true);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  require_same_ring(ring_, g.ring_, "mul");
  std::vector<Term> prod;
  prod.reserve(terms_.size() * g.terms_.size());
  const Field& k = ring_->field();
  for (const auto& a : terms_)
    for (const auto& b : g.terms_) prod.push_back({a.mono * b.mono, k.mul(a.coeff, b.coeff)});
  return Polynomial(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, ring_->field().mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Coeff& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, ring_->field().mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = ring_->one();
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(terms_.front().coeff));
}

Polynomial Polynomial::map_variables(const RingPtr& target, std::span<const std::size_t> var_map) const {
  if (!(target->field() == ring_->field()))
    throw Error(ErrorCode::RingMismatch, "cannot map between different fields");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i]) m.set(var_map[i], m[var_map[i]] + t.mono[i]);
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial(target, std::move(out));
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (target->names() != ring_->names() || !(target->field() == ring_->field()))
    throw Error(ErrorCode::RingMismatch, "in_ring needs identical variables and field");
  if (target->same_ambient(*ring_)) {
    Polynomial r = *this;
    r.ring_ = target;
    return r;
  }
  return Polynomial(target, terms_);
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->nvars()) throw Error(ErrorCode::SizeMismatch, "one image per variable");
  const RingPtr& target = images.front().ring();
  Polynomial acc(target);
  for (const auto& t : terms_) {
    Polynomial p = target->constant(t.coeff);
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i]) p = p * images[i].pow(static_cast<unsigned>(t.mono[i]));
    acc = acc + p;
  }
  return acc;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[var] == 0) continue;
    Monomial m = t.mono;
    m.set(var, m[var] - 1);
    out.push_back({std::move(m), t.coeff * t.mono[var]});
  }
  return Polynomial(ring_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& g) const {
  if (terms_.empty() && g.terms_.empty()) return true;
  if (!same_ambient(ring_, g.ring_)) return false;
  if (terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == g.terms_[i].mono) || terms_[i].coeff != g.terms_[i].coeff) return false;
  return true;
}

std::string render_monomial(const Ring& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.names()[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Coeff c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      s += c.get_str();
    } else {
      if (c != 1) s += c.get_str() + "*";
      s += render_monomial(*ring_, t.mono);
    }
  }
  return s;
}

Term leading_term(const Polynomial& f, const RingPtr& ring) {
  require_same_ring(f.ring(), ring, "leading_term");
  return f.leading_term();
}

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, ArithKind kind) {
  switch (kind) {
    case ArithKind::Add: return f + g;
    case ArithKind::Sub: return f - g;
    case ArithKind::Mul: return f * g;
  }
  return f;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& b) {
  require_same_ring(f.ring(), b.ring(), "divide_exact");
  if (b.is_zero()) throw Error(ErrorCode::ZeroDivisorDenominator, "division by zero");
  const Field& k = f.ring()->field();
  const Term& lb = b.leading_term();
  Coeff inv = k.inv(lb.coeff);
  std::vector<Term> quotient;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!lb.mono.divides(lt.mono))
      throw Error(ErrorCode::ZeroDivisorDenominator, b.str() + " does not divide " + f.str());
    Monomial m = lt.mono / lb.mono;
    Coeff c = k.mul(lt.coeff, inv);
    quotient.push_back({m, c});
    rest = rest - b.mul_term(m, c);
  }
  return Polynomial(f.ring(), std::move(quotient));
}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring)) {}

PolyMatrix::PolyMatrix(RingPtr ring, std::vector<std::vector<Polynomial>> rows) : ring_(std::move(ring)) {
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows[0].size();
  for (auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::SizeMismatch, "matrix rows must have equal length");
    for (auto& e : r) {
      require_same_ring(ring_, e.ring(), "matrix entry");
      entries_.push_back(std::move(e));
    }
  }
}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring->one();
  return m;
}

PolyMatrix PolyMatrix::diagonal(RingPtr ring, const std::vector<Polynomial>& diag) {
  PolyMatrix m(ring, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorCode::SizeMismatch, "matrix product dimensions");
  PolyMatrix out(ring_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < other.cols_; ++j) {
      Polynomial acc(ring_);
      for (std::size_t k = 0; k < cols_; ++k) {
        if (at(i, k).is_zero() || other.at(k, j).is_zero()) continue;
        acc = acc + at(i, k) * other.at(k, j);
      }
      out.at(i, j) = std::move(acc);
    }
  return out;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Polynomial PolyMatrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorCode::SizeMismatch, "determinant of a non-square matrix");
  if (rows_ == 0) return ring_->one();
  if (rows_ == 1) return at(0, 0);
  Polynomial det(ring_);
  std::vector<std::size_t> rest_rows, cols;
  for (std::size_t i = 1; i < rows_; ++i) rest_rows.push_back(i);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (at(0, j).is_zero()) continue;
    cols.clear();
    for (std::size_t c = 0; c < cols_; ++c)
      if (c != j) cols.push_back(c);
    Polynomial minor = submatrix(rest_rows, cols).determinant();
    Polynomial term = at(0, j) * minor;
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

std::vector<Polynomial> PolyMatrix::apply(const std::vector<Polynomial>& column) const {
  if (column.size() != cols_) throw Error(ErrorCode::SizeMismatch, "matrix-vector dimensions");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < rows_; ++i) {
    Polynomial acc(ring_);
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) acc = acc + at(i, j) * column[j];
    out.push_back(std::move(acc));
  }
  return out;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  PolyMatrix m(ring_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m.at(i, j) = at(rows[i], cols[j]);
  return m;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

}  // namespace llab
