#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "llab/ring.hpp"

namespace llab {

// Sparse polynomial over a Ring. Terms are kept in descending monomial
// order with nonzero coefficients and distinct monomials.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  // Normalizes: sorts, merges equal monomials, reduces coefficients into the
  // field, drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial term(RingPtr ring, Monomial mono, Coeff coeff);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Coeff& leading_coeff() const { return leading_term().coeff; }

  // Largest weighted degree of a term; -1 for the zero polynomial.
  std::int64_t degree() const;
  // Weighted degree when all terms share it (zero counts as homogeneous).
  std::optional<std::int64_t> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
  Coeff constant_term() const;
  bool involves(std::size_t var) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial scaled(const Coeff& c) const;
  Polynomial mul_term(const Monomial& m, const Coeff& c) const;
  Polynomial pow(unsigned k) const;
  Polynomial monic() const;

  // Ring homomorphism into `target` sending variable i to variable
  // var_map[i]; orders may differ, so terms are re-sorted.
  Polynomial map_variables(const RingPtr& target, std::span<const std::size_t> var_map) const;
  // Same variables, re-sorted for a ring that differs only in order or Q.
  Polynomial in_ring(const RingPtr& target) const;
  // Evaluates variable i at images[i] (all in one target ring).
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  Polynomial derivative(std::size_t var) const;

  bool operator==(const Polynomial& g) const;

  // Canonical rendering: descending terms, `^` powers, `*` between
  // factors, rational coefficients as a/b.
  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;

  friend class PolyBuilder;
};

enum class ArithKind { Add, Sub, Mul };

Term leading_term(const Polynomial& f, const RingPtr& ring);
Polynomial poly_arith(const Polynomial& f, const Polynomial& g, ArithKind kind);

// Quotient f / b when b divides f exactly; throws ZeroDivisorDenominator
// otherwise.
Polynomial divide_exact(const Polynomial& f, const Polynomial& b);

std::string render_monomial(const Ring& ring, const Monomial& m);

struct PolySequence {
  std::vector<Polynomial> elements;
  std::optional<bool> declared_regular;

  std::size_t size() const { return elements.size(); }
};

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  PolyMatrix(RingPtr ring, std::vector<std::vector<Polynomial>> rows);

  static PolyMatrix identity(RingPtr ring, std::size_t n);
  static PolyMatrix diagonal(RingPtr ring, const std::vector<Polynomial>& diag);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Polynomial& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  PolyMatrix operator*(const PolyMatrix& other) const;
  bool is_zero() const;
  // Laplace expansion; SizeMismatch unless square.
  Polynomial determinant() const;
  std::vector<Polynomial> apply(const std::vector<Polynomial>& column) const;
  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  bool operator==(const PolyMatrix& other) const;

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> entries_;
};

}  // namespace llab
