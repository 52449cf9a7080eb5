#pragma once

#include "ogus/cases.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ogus {

inline constexpr int kSchemaVersion = 1;

struct ReportRow {
  std::string word;
  int length = 0;
  std::string bruhat;
  long long ord = 0;
  std::optional<long long> clp;  // null where no CY zip exists
  std::optional<bool> ogus;
  bool operator==(const ReportRow&) const = default;
};

struct Report {
  int schema_version = kSchemaVersion;
  std::string case_key;
  int rank = 0;
  long long prime = 0;
  std::vector<ReportRow> strata;
  bool operator==(const Report&) const = default;
};

Report to_report(const CaseResult& r);

std::string emit_json(const Report& r);
Report parse_json(const std::string& s);  // throws std::invalid_argument
std::string emit_csv(const Report& r);
Report parse_csv(const std::string& s);
std::string emit_text(const Report& r);

}  // namespace ogus
