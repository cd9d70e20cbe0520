#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

namespace hyperstar {

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Skipped:
      return "skip";
  }
  return "?";
}

struct ReportEntry {
  std::string check;      // what was verified
  std::string reference;  // the statement the check instantiates
  CheckStatus status = CheckStatus::Skipped;
  double residual = std::numeric_limits<double>::quiet_NaN();
  std::string note;
};

/// Ordered pass/fail ledger; the overall status fails iff any entry fails.
struct VerificationReport {
  std::vector<ReportEntry> entries;

  bool passed() const {
    for (const auto& e : entries)
      if (e.status == CheckStatus::Fail) return false;
    return true;
  }

  void add(std::string check, std::string reference, bool ok,
           double residual = std::numeric_limits<double>::quiet_NaN(),
           std::string note = {}) {
    entries.push_back({std::move(check), std::move(reference),
                       ok ? CheckStatus::Pass : CheckStatus::Fail, residual,
                       std::move(note)});
  }

  /// Residual-vs-tolerance check; pass iff residual <= tol.
  void add_residual(std::string check, std::string reference, double residual,
                    double tol, std::string note = {}) {
    add(std::move(check), std::move(reference),
        std::isfinite(residual) && residual <= tol, residual, std::move(note));
  }

  void skip(std::string check, std::string reference, std::string note = {}) {
    entries.push_back({std::move(check), std::move(reference),
                       CheckStatus::Skipped,
                       std::numeric_limits<double>::quiet_NaN(),
                       std::move(note)});
  }

  void merge(const VerificationReport& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  }

  void print(std::ostream& os) const {
    for (const auto& e : entries) {
      os << to_string(e.status) << "  " << e.check;
      if (!e.reference.empty()) os << "  [" << e.reference << "]";
      if (std::isfinite(e.residual)) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3e", e.residual);
        os << "  residual=" << buf;
      }
      if (!e.note.empty()) os << "  (" << e.note << ")";
      os << '\n';
    }
  }
};

}  // namespace hyperstar
