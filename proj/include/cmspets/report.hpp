#pragma once

#include "json.hpp"

#include <string>
#include <vector>

#include "cmspets/unip.hpp"

namespace cmspets {

struct CaseResult {
  std::string id;
  bool pass = true;
  std::string detail;
};

struct CaseCounts {
  int total = 0;
  int passed = 0;
  int failed = 0;
};

/// A named suite of cases, optionally with nested sub-reports.
struct CheckReport {
  std::string name;
  std::vector<CaseResult> cases;
  std::vector<CheckReport> suites;
  double elapsed_ms = 0;

  bool pass() const;
  /// Cases of this report and all nested ones.
  CaseCounts counts() const;
  /// Sorts cases by id and sub-reports by name, recursively.
  void sort();

  void add(std::string id, bool pass, std::string detail = {});
  void add(const std::vector<CheckLine>& lines, const std::string& prefix = {});
};

nlohmann::json to_json(const CheckReport& r);
/// One line per case group (the id up to its first '/').
std::string render_table(const CheckReport& r);
/// {"status": ..., "counts": ..., "suites": [...]}
nlohmann::json suites_json(const std::vector<CheckReport>& reports);

}  // namespace cmspets
