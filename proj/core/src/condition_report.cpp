#include "fuzzpart/condition_report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "fuzzpart/errors.hpp"

namespace fuzzpart {

const char* to_string(MFInvariant inv) {
  switch (inv) {
    case MFInvariant::Core: return "core";
    case MFInvariant::Support: return "support";
    case MFInvariant::Symmetry: return "symmetry";
    case MFInvariant::Monotonicity: return "monotonicity";
    case MFInvariant::Continuity: return "continuity";
    case MFInvariant::Complement: return "complement";
    case MFInvariant::Evaluation: return "evaluation";
  }
  return "?";
}

InvalidMF::InvalidMF(MFInvariant invariant, double witness,
                     const std::string& detail)
    : Error("invalid membership function: " + std::string(to_string(invariant)) +
            " violated at x = " + std::to_string(witness) +
            (detail.empty() ? "" : " (" + detail + ")")),
      invariant_(invariant),
      witness_(witness) {}

const char* to_string(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::Pass: return "PASS";
    case ConditionStatus::Fail: return "FAIL";
    case ConditionStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

bool ConditionReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ConditionEntry& e) { return e.passed(); });
}

const ConditionEntry* ConditionReport::find(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::string ConditionReport::to_text() const {
  std::ostringstream out;
  char buf[64];
  for (const auto& e : entries) {
    std::snprintf(buf, sizeof(buf), "%.17g", e.max_deviation);
    out << e.name << ": " << to_string(e.status) << " max_deviation=" << buf;
    if (!e.witness.empty()) {
      out << " witness=(";
      for (std::size_t i = 0; i < e.witness.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", e.witness[i]);
        out << (i ? ", " : "") << buf;
      }
      out << ")";
    }
    if (!e.detail.empty()) out << " " << e.detail;
    out << "\n";
  }
  return out.str();
}

}  // namespace fuzzpart
