#pragma once

#include <doctest.h>

#include <string>
#include <vector>

#include "llab/error.hpp"
#include "llab/ideal.hpp"

namespace th {

using namespace llab;

inline RingPtr qq(std::vector<std::string> names, std::vector<std::int64_t> weights = {},
                  MonomialOrder order = MonomialOrder::degrevlex()) {
  return Ring::create(Field::rationals(), std::move(names), std::move(weights), order);
}

inline Polynomial c(const RingPtr& r, const mpq_class& v) { return r->constant(v); }

inline std::vector<Polynomial> vars(const RingPtr& r) { return r->variables(); }

// E3: x² = yz.
inline RingPtr e3_ring() {
  auto s = qq({"x", "y", "z"});
  auto [x, y, z] = std::tuple{s->variable(0), s->variable(1), s->variable(2)};
  return s->with_relations({x * x - y * z});
}

// E4: the monomial curve (t³, t⁴, t⁵).
inline RingPtr e4_ring() {
  auto s = qq({"x", "y", "z"}, {3, 4, 5});
  auto [x, y, z] = std::tuple{s->variable(0), s->variable(1), s->variable(2)};
  return s->with_relations({x * z - y * y, x.pow(3) - y * z, x * x * y - z * z});
}

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no llab::Error thrown");
  return ErrorCode::InvalidArgument;
}

}  // namespace th

#define CHECK_CODE(expr, code) CHECK(th::error_of([&] { (void)(expr); }) == llab::ErrorCode::code)
