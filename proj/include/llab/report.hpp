#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace llab {

enum class CheckMode { Computed, Declared };
enum class Status { Verified, HypothesisFailed, ConclusionFailed, Inconclusive };

const char* to_string(CheckMode m);
const char* to_string(Status s);

// One hypothesis or conclusion line. `pass` is empty when the check could
// be neither computed nor taken from a declaration.
struct Check {
  std::string desc;
  CheckMode mode = CheckMode::Computed;
  std::optional<bool> pass;
  std::string detail;
};

struct LengthReport {
  long d = 0;
  long g = 0;
  long r = 0;
  std::optional<std::size_t> s;
  std::uint64_t lambda_I_over_J = 0;
  std::uint64_t lambda_I2_over_JI = 0;
  std::uint64_t lambda_R_over_I = 0;
  std::uint64_t lambda_I_over_I2 = 0;
  std::uint64_t lambda_H1 = 0;
  std::uint64_t lambda_delta = 0;
  bool eq1_balanced = false;
  // Present only when r = 1 and R is Gorenstein.
  std::optional<bool> eq4_balanced;
  bool delta_nonzero = false;

  // λ(I/J) = λ(I²/JI) + r λ(R/I) - λ(H1) + λ(δ), evaluated on the stored values.
  bool eq1_holds() const;
  bool eq4_holds() const;
  // λ(δ) - λ(H1) + (d+r) λ(R/I) - λ(I/I²) = 0.
  bool sequence_balanced() const;
};

struct VerificationReport {
  std::string task;
  std::map<std::string, bool> declarations;
  std::vector<Check> hypotheses;
  std::vector<Check> conclusions;
  Status status = Status::Inconclusive;
  std::optional<LengthReport> lengths;
  std::vector<std::string> notes;

  // Any failed hypothesis wins, then any failed conclusion, then any
  // undecided check; otherwise verified.
  void finalize();
  bool verified() const { return status == Status::Verified; }
};

}  // namespace llab
