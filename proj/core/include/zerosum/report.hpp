#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace zerosum::verify {

/// A counterexample: the offending multiset, what was observed, and what
/// the checked statement requires.
struct Violation {
  std::string check;
  std::string sequence;
  std::string observed;
  std::string expected;

  friend auto operator<=>(const Violation&, const Violation&) = default;
};

using ParamValue = std::variant<std::int64_t, std::string>;

/// Outcome of one exhaustive check. `violations` is sorted and truncated to
/// kMaxListedViolations; `violation_count` is the untruncated total.
struct VerificationReport {
  static constexpr std::size_t kMaxListedViolations = 100;

  std::string statement_id;
  std::vector<std::pair<std::string, ParamValue>> parameters;
  std::uint64_t instances_checked = 0;
  /// Orbit-weighted count: equals the raw multiset count whether or not
  /// orbit reduction was used.
  std::uint64_t raw_instances = 0;
  bool orbit_reduced = false;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;
  /// Instance counts per labelled sub-statement.
  std::map<std::string, std::uint64_t> slices;
  /// Labelled integer lists (realized values, tables).
  std::map<std::string, std::vector<std::int64_t>> values;
  /// Labelled example multisets (first ones in enumeration order).
  std::map<std::string, std::vector<std::string>> examples;
  std::chrono::milliseconds elapsed{0};

  bool passed() const noexcept { return violation_count == 0; }
};

struct JsonOptions {
  bool include_timing = true;
  int indent = -1;
};

/// One JSON object: statement_id, parameters, instances_checked,
/// raw_instances, orbit_reduced, passed, violation_count, violations[],
/// slices, values, examples, elapsed_ms (unless timing is suppressed).
std::string to_json(const VerificationReport& report, const JsonOptions& options = {});

/// {"passed": bool, "reports": [...]}
std::string to_json(const std::vector<VerificationReport>& reports,
                    const JsonOptions& options = {});

}  // namespace zerosum::verify
