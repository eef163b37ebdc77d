#pragma once

#include <map>
#include <string>
#include <vector>

#include "cmspets/report.hpp"

namespace cmspets {

/// Caps for the verification suites. Every field can be overridden by key.
struct CheckOptions {
  int max_core_size = 25;     // k-eq-l
  int max_d = 7;              // k-eq-l
  int cuspidal_max_n = 12;    // type-a-cuspidal
  int series_max_n = 12;      // type-a-series
  int series_max_d = 6;
  int quotient_max_n = 15;    // core/quotient round trip
  int quotient_max_d = 6;
  int classical_max_n = 12;
  int symbol_max_r = 5;
  int filtration_max_n = 6;
  int michel_max_n = 10;
  int chartab_max_n = 8;      // symmetric tables and a+A+omega
  int wreath_max_order = 8;   // d * r for wreath orthogonality
  int brute_force_max_n = 5;

  /// Throws std::invalid_argument naming the key on an unknown key or a bad value.
  void set(const std::string& key, const std::string& value);
  std::map<std::string, int> values() const;
};

/// Reads "key = value" lines; '#' starts a comment.
CheckOptions read_config(const std::string& path, CheckOptions base = {});

const std::vector<std::string>& suite_names();

/// One suite by name; throws std::invalid_argument for an unknown name or "all".
/// "canary" is a one-case suite that always fails and is not part of run_all.
CheckReport run_check(const std::string& name, const CheckOptions& options);
/// Every suite, run concurrently, in suite_names() order.
std::vector<CheckReport> run_all(const CheckOptions& options);

/// Single-instance reports for `verify michel --n --d` and `verify filtration --n --d`.
CheckReport michel_report(int n, int d);
CheckReport filtration_report(int n, int d);

/// chi_lambda(mu) from the Frobenius formula [x^(lambda+delta)] a_delta p_mu,
/// rows and columns indexed by partitions_of(n).
std::vector<std::vector<Integer>> frobenius_table(int n);

}  // namespace cmspets
