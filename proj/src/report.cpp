#include "llab/report.hpp"

#include <algorithm>

namespace llab {

const char* to_string(CheckMode m) { return m == CheckMode::Computed ? "computed" : "declared"; }

const char* to_string(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::HypothesisFailed: return "hypothesis_failed";
    case Status::ConclusionFailed: return "conclusion_failed";
    case Status::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

bool LengthReport::eq1_holds() const {
  const auto lhs = static_cast<std::int64_t>(lambda_I_over_J);
  const auto rhs = static_cast<std::int64_t>(lambda_I2_over_JI) + r * static_cast<std::int64_t>(lambda_R_over_I) -
                   static_cast<std::int64_t>(lambda_H1) + static_cast<std::int64_t>(lambda_delta);
  return lhs == rhs;
}

bool LengthReport::eq4_holds() const { return lambda_I_over_J == lambda_I2_over_JI + lambda_delta; }

bool LengthReport::sequence_balanced() const {
  const auto sum = static_cast<std::int64_t>(lambda_delta) - static_cast<std::int64_t>(lambda_H1) +
                   (d + r) * static_cast<std::int64_t>(lambda_R_over_I) -
                   static_cast<std::int64_t>(lambda_I_over_I2);
  return sum == 0;
}

void VerificationReport::finalize() {
  auto any = [](const std::vector<Check>& v, auto pred) { return std::any_of(v.begin(), v.end(), pred); };
  auto failed = [](const Check& c) { return c.pass.has_value() && !*c.pass; };
  auto open = [](const Check& c) { return !c.pass.has_value(); };
  if (any(hypotheses, failed))
    status = Status::HypothesisFailed;
  else if (any(conclusions, failed))
    status = Status::ConclusionFailed;
  else if (any(hypotheses, open) || any(conclusions, open))
    status = Status::Inconclusive;
  else
    status = Status::Verified;
}

}  // namespace llab
