// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "csalg/rational.hpp"

namespace csalg {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Process exit statuses of the command-line tool.
enum class ExitStatus : int {
  Ok = 0,
  InternalError = 1,
  UsageError = 2,  // unknown command, bad options, unreadable or malformed input
  HypothesesNotMet = 3,
  PropertyFalse = 4,  // a checked property is false; the report carries a witness
  Refutation = 5,
  Inconclusive = 6,  // a sampling search ran out of trials
};

std::string to_string(ExitStatus s);

using ReportValue = std::variant<bool, std::int64_t, std::string, Vec, std::vector<Vec>>;

struct ReportSection {
  std::string name;
  std::vector<std::pair<std::string, ReportValue>> entries;

  ReportSection& add(std::string key, ReportValue value) {
    entries.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  const ReportValue* find(std::string_view key) const;
  friend bool operator==(const ReportSection&, const ReportSection&) = default;
};

struct Report {
  std::string tool_version{kToolVersion};
  std::string command;
  std::string algebra;      // name of the analysed algebra, if any
  std::string fingerprint;  // hash of the canonical algebra document
  std::vector<std::pair<std::string, std::uint64_t>> seeds;
  std::vector<ReportSection> sections;
  ExitStatus status = ExitStatus::Ok;
  /// Generated document text (gen only).
  std::optional<std::string> document;

  ReportSection& section(std::string name);
  const ReportSection* find_section(std::string_view name) const;
  /// Moves the status towards the more severe of the two.
  void escalate(ExitStatus s);
  friend bool operator==(const Report&, const Report&) = default;
};

enum class ReportFormat { Text, Structured };

std::string emit_report(const Report& r, ReportFormat format);
/// Inverse of emit_report(..., Structured).
Report parse_structured_report(std::string_view json_text);

/// "fnv1a64:<16 hex digits>" of the given bytes.
std::string fingerprint(std::string_view bytes);

}  // namespace csalg
