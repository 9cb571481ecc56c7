#include <iomanip>
#include <sstream>

#include "llab/session.hpp"

namespace llab::session {

namespace {

std::size_t width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > width(s) ? w - width(s) : 0, ' '); }

std::string pass_word(const std::optional<bool>& p) { return p ? (*p ? "pass" : "FAIL") : "open"; }

void checks(std::ostream& os, const char* title, const std::vector<Check>& v) {
  if (v.empty()) return;
  std::size_t w = 0;
  for (const auto& c : v) w = std::max(w, width(c.desc));
  os << title << ":\n";
  for (const auto& c : v) {
    os << "  " << pad(pass_word(c.pass), 5) << pad(to_string(c.mode), 9);
    if (c.detail.empty())
      os << c.desc;
    else
      os << pad(c.desc, w) << "  " << c.detail;
    os << "\n";
  }
}

void lengths(std::ostream& os, const LengthReport& l) {
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"d", std::to_string(l.d)},
      {"g", std::to_string(l.g)},
      {"r", std::to_string(l.r)},
      {"s", l.s ? std::to_string(*l.s) : "-"},
      {"λ(I/J)", std::to_string(l.lambda_I_over_J)},
      {"λ(I²/JI)", std::to_string(l.lambda_I2_over_JI)},
      {"λ(R/I)", std::to_string(l.lambda_R_over_I)},
      {"λ(I/I²)", std::to_string(l.lambda_I_over_I2)},
      {"λ(H1)", std::to_string(l.lambda_H1)},
      {"λ(δ)", std::to_string(l.lambda_delta)},
  };
  os << "lengths:\n";
  for (const auto& [k, v] : rows) os << "  " << pad(k, 10) << std::setw(6) << v << "\n";
  const long rhs = static_cast<long>(l.lambda_I2_over_JI) + l.r * static_cast<long>(l.lambda_R_over_I) -
                   static_cast<long>(l.lambda_H1) + static_cast<long>(l.lambda_delta);
  os << "  balance  λ(I/J) = λ(I²/JI) + r·λ(R/I) - λ(H1) + λ(δ):  " << l.lambda_I_over_J << " = "
     << l.lambda_I2_over_JI << " + " << l.r << "·" << l.lambda_R_over_I << " - " << l.lambda_H1 << " + "
     << l.lambda_delta << " = " << rhs << "  " << (l.eq1_balanced ? "holds" : "FAILS") << "\n";
  if (l.eq4_balanced)
    os << "  balance  λ(I/J) = λ(I²/JI) + λ(δ):  " << (*l.eq4_balanced ? "holds" : "FAILS") << "\n";
  os << "  sequence balance:  " << (l.sequence_balanced() ? "holds" : "FAILS") << "\n";
}

std::string text(const std::vector<Report>& reports) {
  std::ostringstream os;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const Report& r = reports[i];
    if (i) os << "\n";
    os << "== " << r.command << "\n";
    os << "status: " << r.status;
    if (r.ms) os << "  (" << std::fixed << std::setprecision(1) << *r.ms << " ms)";
    os << "\n";
    if (r.error) os << "error: " << r.error->first << ": " << r.error->second << "\n";
    if (!r.declarations.empty()) {
      os << "declarations:";
      for (const auto& [k, v] : r.declarations) os << " " << k << "=" << (v ? "yes" : "no");
      os << "\n";
    }
    if (r.verification) {
      checks(os, "hypotheses", r.verification->hypotheses);
      checks(os, "conclusions", r.verification->conclusions);
    }
    if (r.lengths) lengths(os, *r.lengths);
    if (!r.result.empty()) {
      os << "result:\n";
      for (const auto& [k, v] : r.result.items()) os << "  " << k << ": " << v.dump() << "\n";
    }
    for (const auto& n : r.notes) os << "note: " << n << "\n";
  }
  return os.str();
}

}  // namespace

std::string emit_report(const std::vector<Report>& reports, Format format) {
  if (format == Format::Json) return to_json(reports).dump(2) + "\n";
  return text(reports);
}

}  // namespace llab::session
