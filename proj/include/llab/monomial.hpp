#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>

#include <boost/container/small_vector.hpp>

#include "llab/field.hpp"

namespace llab {

// Exponent vector. Exponents are 32-bit; products that would overflow
// raise OverflowError instead of wrapping.
class Monomial {
 public:
  using Storage = boost::container::small_vector<std::int32_t, 8>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<std::int32_t> exps) : exps_(exps) {}
  explicit Monomial(Storage exps) : exps_(std::move(exps)) {}

  std::size_t size() const { return exps_.size(); }
  std::int32_t operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, std::int32_t e) { exps_[i] = e; }
  const Storage& exponents() const { return exps_; }

  bool is_one() const;
  std::int64_t total_degree() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  // Exact quotient; caller guarantees `other` divides *this.
  Monomial operator/(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

 private:
  Storage exps_;
};

struct Term {
  Monomial mono;
  Coeff coeff;
};

}  // namespace llab
