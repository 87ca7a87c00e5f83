#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fuzzpart {

enum class ConditionStatus { Pass, Fail, Skipped };

const char* to_string(ConditionStatus s);

/// One checked condition: its name, outcome, the largest deviation
/// observed, and (on failure) the sample point that witnessed it.
struct ConditionEntry {
  std::string name;
  ConditionStatus status = ConditionStatus::Pass;
  double max_deviation = 0.0;
  std::vector<double> witness;  // empty unless status == Fail
  std::string detail;

  bool passed() const { return status != ConditionStatus::Fail; }
};

/// A per-condition verification report: 9 entries for one-dimensional
/// partitions, 7 for high-dimensional ones.
struct ConditionReport {
  std::vector<ConditionEntry> entries;

  bool all_passed() const;
  const ConditionEntry* find(std::string_view name) const;

  /// One line per condition: name, status, max deviation, witness.
  std::string to_text() const;
};

}  // namespace fuzzpart
