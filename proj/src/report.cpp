// SPDX-License-Identifier: Apache-2.0
#include "csalg/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace csalg {

using nlohmann::json;

std::string to_string(ExitStatus s) {
  switch (s) {
    case ExitStatus::Ok: return "ok";
    case ExitStatus::InternalError: return "internal-error";
    case ExitStatus::UsageError: return "usage-error";
    case ExitStatus::HypothesesNotMet: return "hypotheses-not-met";
    case ExitStatus::PropertyFalse: return "property-false";
    case ExitStatus::Refutation: return "refutation";
    case ExitStatus::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

int severity(ExitStatus s) {
  switch (s) {
    case ExitStatus::Ok: return 0;
    case ExitStatus::Inconclusive: return 1;
    case ExitStatus::HypothesesNotMet: return 2;
    case ExitStatus::PropertyFalse: return 3;
    case ExitStatus::Refutation: return 4;
    case ExitStatus::UsageError: return 5;
    case ExitStatus::InternalError: return 6;
  }
  return 6;
}

ExitStatus status_from_string(const std::string& s) {
  for (auto st : {ExitStatus::Ok, ExitStatus::InternalError, ExitStatus::UsageError, ExitStatus::HypothesesNotMet,
                  ExitStatus::PropertyFalse, ExitStatus::Refutation, ExitStatus::Inconclusive})
    if (to_string(st) == s) return st;
  throw std::invalid_argument("unknown status '" + s + "'");
}

json vec_json(const Vec& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

json value_json(const ReportValue& v) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Vec>) {
          return vec_json(x);
        } else if constexpr (std::is_same_v<T, std::vector<Vec>>) {
          json arr = json::array();
          for (const auto& row : x) arr.push_back(vec_json(row));
          return arr;
        } else {
          return json(x);
        }
      },
      v);
}

Vec vec_from_json(const json& j) {
  Vec v;
  for (const auto& x : j) v.push_back(parse_rational(x.get<std::string>()));
  return v;
}

ReportValue value_from_json(const json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    if (!j.empty() && j.front().is_string()) return vec_from_json(j);
    std::vector<Vec> rows;
    for (const auto& row : j) rows.push_back(vec_from_json(row));
    return rows;
  }
  throw std::invalid_argument("unsupported report value");
}

std::string value_text(const ReportValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(x);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else if constexpr (std::is_same_v<T, Vec>) {
          return to_string(x);
        } else {
          if (x.empty()) return "{}";
          std::string out = "{";
          for (std::size_t i = 0; i < x.size(); ++i) out += (i ? ", " : "") + to_string(x[i]);
          return out + "}";
        }
      },
      v);
}

}  // namespace

const ReportValue* ReportSection::find(std::string_view key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return &v;
  return nullptr;
}

ReportSection& Report::section(std::string name) {
  sections.push_back(ReportSection{std::move(name), {}});
  return sections.back();
}

const ReportSection* Report::find_section(std::string_view name) const {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

void Report::escalate(ExitStatus s) {
  if (severity(s) > severity(status)) status = s;
}

std::string emit_report(const Report& r, ReportFormat format) {
  if (format == ReportFormat::Structured) {
    json j;
    j["tool_version"] = r.tool_version;
    j["command"] = r.command;
    j["algebra"] = r.algebra;
    j["fingerprint"] = r.fingerprint;
    j["seeds"] = json::object();
    for (const auto& [k, v] : r.seeds) j["seeds"][k] = v;
    j["sections"] = json::array();
    for (const auto& s : r.sections) {
      json entries = json::object();
      for (const auto& [k, v] : s.entries) entries[k] = value_json(v);
      j["sections"].push_back({{"name", s.name}, {"entries", entries}});
    }
    j["status"] = to_string(r.status);
    j["exit_code"] = static_cast<int>(r.status);
    if (r.document) j["document"] = *r.document;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "csalg " << r.tool_version << '\n';
  out << "command: " << r.command << '\n';
  if (!r.algebra.empty()) out << "algebra: " << r.algebra << '\n';
  if (!r.fingerprint.empty()) out << "fingerprint: " << r.fingerprint << '\n';
  for (const auto& [k, v] : r.seeds) out << "seed " << k << ": " << v << '\n';
  for (const auto& s : r.sections) {
    out << "\n[" << s.name << "]\n";
    for (const auto& [k, v] : s.entries) out << "  " << k << ": " << value_text(v) << '\n';
  }
  out << "\nstatus: " << to_string(r.status) << " (" << static_cast<int>(r.status) << ")\n";
  return out.str();
}

Report parse_structured_report(std::string_view json_text) {
  const json j = json::parse(json_text);
  Report r;
  r.tool_version = j.at("tool_version").get<std::string>();
  r.command = j.at("command").get<std::string>();
  r.algebra = j.at("algebra").get<std::string>();
  r.fingerprint = j.at("fingerprint").get<std::string>();
  for (const auto& [k, v] : j.at("seeds").items()) r.seeds.emplace_back(k, v.get<std::uint64_t>());
  for (const auto& s : j.at("sections")) {
    ReportSection sec{s.at("name").get<std::string>(), {}};
    for (const auto& [k, v] : s.at("entries").items()) sec.entries.emplace_back(k, value_from_json(v));
    r.sections.push_back(std::move(sec));
  }
  r.status = status_from_string(j.at("status").get<std::string>());
  if (j.contains("document")) r.document = j.at("document").get<std::string>();
  return r;
}

std::string fingerprint(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace csalg
