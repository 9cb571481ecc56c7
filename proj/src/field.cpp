#include "llab/field.hpp"

#include "llab/error.hpp"

namespace llab {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p > (1u << 31))
    throw Error(ErrorCode::InvalidArgument, "GF(" + std::to_string(p) + ") needs a prime below 2^31");
  return Field(p);
}

Coeff Field::reduce(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return Coeff(r);
}

Coeff Field::from_rational(const mpq_class& q) const {
  if (p_ == 0) return q;
  Coeff num = reduce(q.get_num());
  Coeff den = reduce(q.get_den());
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "denominator vanishes in " + name());
  return mul(num, inv(den));
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  if (p_ == 0) return a + b;
  return reduce(a.get_num() + b.get_num());
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  if (p_ == 0) return a - b;
  return reduce(a.get_num() - b.get_num());
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  if (p_ == 0) return a * b;
  return reduce(a.get_num() * b.get_num());
}

Coeff Field::neg(const Coeff& a) const {
  if (p_ == 0) return -a;
  return reduce(-a.get_num());
}

Coeff Field::inv(const Coeff& a) const {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  if (p_ == 0) return 1 / a;
  mpz_class r;
  mpz_class m(p_);
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), m.get_mpz_t());
  return Coeff(r);
}

std::string Field::name() const {
  return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

std::string to_string(const Coeff& c) { return c.get_str(); }

}  // namespace llab
