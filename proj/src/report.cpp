#include "cmspets/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

namespace cmspets {

bool CheckReport::pass() const {
  for (const auto& c : cases) {
    if (!c.pass) return false;
  }
  for (const auto& s : suites) {
    if (!s.pass()) return false;
  }
  return true;
}

CaseCounts CheckReport::counts() const {
  CaseCounts n;
  for (const auto& c : cases) {
    ++n.total;
    (c.pass ? n.passed : n.failed) += 1;
  }
  for (const auto& s : suites) {
    const CaseCounts m = s.counts();
    n.total += m.total;
    n.passed += m.passed;
    n.failed += m.failed;
  }
  return n;
}

void CheckReport::sort() {
  std::stable_sort(cases.begin(), cases.end(),
                   [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
  for (auto& s : suites) s.sort();
  std::stable_sort(suites.begin(), suites.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
}

void CheckReport::add(std::string id, bool pass, std::string detail) {
  cases.push_back({std::move(id), pass, std::move(detail)});
}

void CheckReport::add(const std::vector<CheckLine>& lines, const std::string& prefix) {
  for (const auto& l : lines) add(prefix + l.id, l.pass, l.detail);
}

namespace {

nlohmann::json counts_json(const CaseCounts& c) {
  return {{"total", c.total}, {"passed", c.passed}, {"failed", c.failed}};
}

void table_lines(const CheckReport& r, const std::string& indent, std::ostringstream& out) {
  const CaseCounts c = r.counts();
  out << indent << (r.pass() ? "PASS " : "FAIL ") << r.name << "  " << c.passed << "/" << c.total;
  if (r.elapsed_ms > 0) out << "  " << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms";
  out << "\n";
  std::map<std::string, std::pair<int, int>> groups;  // group -> (passed, total)
  std::vector<std::string> order;
  std::map<std::string, std::string> first_failure;
  for (const auto& cs : r.cases) {
    const std::string g = cs.id.substr(0, cs.id.find('/'));
    if (!groups.count(g)) order.push_back(g);
    auto& [p, t] = groups[g];
    ++t;
    if (cs.pass) {
      ++p;
    } else if (!first_failure.count(g)) {
      first_failure[g] = cs.id + (cs.detail.empty() ? "" : ": " + cs.detail);
    }
  }
  for (const auto& g : order) {
    const auto [p, t] = groups[g];
    out << indent << "  " << (p == t ? "ok   " : "FAIL ") << std::left << std::setw(28) << g << " "
        << p << "/" << t;
    if (first_failure.count(g)) out << "  first failure " << first_failure[g];
    out << "\n";
  }
  for (const auto& s : r.suites) table_lines(s, indent + "  ", out);
}

}  // namespace

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : r.cases) {
    cases.push_back({{"id", c.id}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  }
  nlohmann::json j = {{"name", r.name},
                      {"status", r.pass() ? "pass" : "fail"},
                      {"counts", counts_json(r.counts())},
                      {"cases", cases},
                      {"elapsed_ms", r.elapsed_ms}};
  if (!r.suites.empty()) {
    nlohmann::json subs = nlohmann::json::array();
    for (const auto& s : r.suites) subs.push_back(to_json(s));
    j["suites"] = subs;
  }
  return j;
}

std::string render_table(const CheckReport& r) {
  std::ostringstream out;
  table_lines(r, "", out);
  return out.str();
}

nlohmann::json suites_json(const std::vector<CheckReport>& reports) {
  CheckReport all;
  all.suites = reports;
  nlohmann::json subs = nlohmann::json::array();
  for (const auto& s : reports) subs.push_back(to_json(s));
  return {{"status", all.pass() ? "pass" : "fail"}, {"counts", counts_json(all.counts())}, {"suites", subs}};
}

}  // namespace cmspets
