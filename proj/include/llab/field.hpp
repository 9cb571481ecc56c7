#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace llab {

using Coeff = mpq_class;

// Coefficient field: the rationals (characteristic 0) or a prime field.
// Prime-field elements are stored as integers in [0, p).
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  bool is_rationals() const { return p_ == 0; }

  // Maps an arbitrary rational into the field; throws if the denominator
  // vanishes modulo p.
  Coeff from_rational(const mpq_class& q) const;
  Coeff from_int(long v) const { return from_rational(mpq_class(v)); }

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  Coeff reduce(const mpz_class& v) const;

  std::uint32_t p_;
};

std::string to_string(const Coeff& c);

}  // namespace llab
