#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "domino/bigcount.hpp"

namespace domino {

struct CheckResult {
  std::string name;
  std::vector<std::pair<std::string, std::int64_t>> params;
  BigCount left;
  BigCount right;
  bool pass = false;
};

class Report {
 public:
  /// Records left == right as the pass flag.
  void add(std::string name, std::vector<std::pair<std::string, std::int64_t>> params, BigCount left,
           BigCount right);
  void merge(const Report& other);

  /// Stable sort by (name, parameter values).
  void sort();

  const std::vector<CheckResult>& checks() const { return checks_; }
  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }

  /// One line per check plus a summary line.
  std::string to_text() const;

  /// JSON Lines: one {"name","params","left","right","pass"} object per
  /// check; integers as decimal strings.
  std::string to_json_lines() const;

 private:
  std::vector<CheckResult> checks_;
};

/// Printed values of the two tables, indexed n = 1..10.
struct TableRow1 {
  std::int64_t n;
  long long a, b, c, l3;
};
struct TableRow2 {
  std::int64_t n;
  long long a, b, t;
};
const std::vector<TableRow1>& table1();
const std::vector<TableRow2>& table2();

/// Columns A, B, C, L3 by recurrence and closed form; geometric DP for
/// A, B, C and for L3 while n <= 6.
Report verify_table1(std::int64_t max_n = 10);

/// T by recurrence, closed form, and brick DP while n <= 8.
Report verify_table2(std::int64_t max_n = 10);

/// count_tilings(l3_region(n, k)) against l3(n, k), 2 <= n <= max_n,
/// 1 <= k <= max_k; n = 1 is reported under a separate extension name.
Report verify_thm21(std::int64_t max_n = 5, std::int64_t max_k = 5);

/// l3(n, n) against A(2n) by closed form and recurrence.
Report verify_crux(std::int64_t max_n = 200);

/// T(2n) = A(n)^2 and T(2n+1) = 2 B(n)^2; towers up to 9 layers by DP.
Report verify_thm32(std::int64_t max_n = 200);

/// DP on l2_region against l2 for n, k <= max_n, max_k, and the A061646
/// closed form against l2(n, n-1) for 1 <= n <= max_diag.
Report verify_tauraso(std::int64_t max_n = 10, std::int64_t max_k = 10, std::int64_t max_diag = 200);

/// The five first-order coupled relations between A, B, C and T, M.
Report verify_coupled_recurrences(std::int64_t max_n = 500);

/// Everything above at default bounds, sorted.
Report verify_all();

}  // namespace domino
