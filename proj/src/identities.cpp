#include "domino/identities.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "domino/count2d.hpp"
#include "domino/region2d.hpp"
#include "domino/sequences.hpp"
#include "domino/solid3d.hpp"

namespace domino {

namespace {

using Params = std::vector<std::pair<std::string, std::int64_t>>;

std::string format_params(const Params& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ',';
    out += key + '=' + std::to_string(value);
  }
  return out;
}

BigCount big(long long v) { return BigCount(static_cast<long>(v)); }

}  // namespace

void Report::add(std::string name, Params params, BigCount left, BigCount right) {
  const bool pass = left == right;
  checks_.push_back({std::move(name), std::move(params), std::move(left), std::move(right), pass});
}

void Report::merge(const Report& other) { checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end()); }

void Report::sort() {
  std::stable_sort(checks_.begin(), checks_.end(), [](const CheckResult& x, const CheckResult& y) {
    if (x.name != y.name) return x.name < y.name;
    return std::lexicographical_compare(x.params.begin(), x.params.end(), y.params.begin(), y.params.end(),
                                        [](const auto& p, const auto& q) { return p.second < q.second; });
  });
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const auto& c) { return c.pass; }));
}

std::size_t Report::failed() const { return checks_.size() - passed(); }

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& check : checks_) {
    out << (check.pass ? "PASS " : "FAIL ") << check.name << '(' << format_params(check.params) << ") "
        << to_decimal(check.left) << (check.pass ? " == " : " != ") << to_decimal(check.right) << '\n';
  }
  out << passed() << " passed, " << failed() << " failed\n";
  return out.str();
}

std::string Report::to_json_lines() const {
  std::string out;
  for (const auto& check : checks_) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : check.params) params[key] = value;
    nlohmann::ordered_json record;
    record["name"] = check.name;
    record["params"] = std::move(params);
    record["left"] = to_decimal(check.left);
    record["right"] = to_decimal(check.right);
    record["pass"] = check.pass;
    out += record.dump();
    out += '\n';
  }
  return out;
}

const std::vector<TableRow1>& table1() {
  static const std::vector<TableRow1> rows = {
      {1, 3, 4, 7, 11},
      {2, 11, 15, 26, 153},
      {3, 41, 56, 97, 2131},
      {4, 153, 209, 362, 29681},
      {5, 571, 780, 1351, 413403},
      {6, 2131, 2911, 5042, 5757961},
      {7, 7953, 10864, 18817, 80198051},
      {8, 29681, 40545, 70226, 1117014753},
      {9, 110771, 151316, 262087, 15558008491},
      {10, 413403, 564719, 978122, 216695104121},
  };
  return rows;
}

const std::vector<TableRow2>& table2() {
  static const std::vector<TableRow2> rows = {
      {1, 3, 4, 2},          {2, 11, 15, 9},         {3, 41, 56, 32},        {4, 153, 209, 121},
      {5, 571, 780, 450},    {6, 2131, 2911, 1681},  {7, 7953, 10864, 6272}, {8, 29681, 40545, 23409},
      {9, 110771, 151316, 87362}, {10, 413403, 564719, 326041},
  };
  return rows;
}

Report verify_table1(std::int64_t max_n) {
  max_n = std::clamp<std::int64_t>(max_n, 1, 10);
  const auto& A = family("A");
  const auto& B = family("B");
  const auto& C = family("C");
  const auto& L3 = family("L3");

  Report report;
  for (const auto& row : table1()) {
    if (row.n > max_n) break;
    const Params p{{"n", row.n}};
    const std::pair<const Family*, long long> columns[] = {{&A, row.a}, {&B, row.b}, {&C, row.c}, {&L3, row.l3}};
    for (const auto& [fam, printed] : columns) {
      const std::string base = "table1." + fam->token;
      report.add(base + ".recurrence", p, rec_eval_iter(fam->recurrence, row.n), big(printed));
      report.add(base + ".closed", p, closed_eval(*fam->closed_form, row.n), big(printed));
    }
    report.add("table1.A.dp", p, count_tilings(a_grid(row.n)), big(row.a));
    report.add("table1.B.dp", p, count_tilings(b_grid(row.n)), big(row.b));
    report.add("table1.C.dp", p, count_tilings(c_grid(row.n)), big(row.c));
    if (row.n <= 6) report.add("table1.L3.dp", p, count_tilings(l3_region(row.n, row.n)), big(row.l3));
  }
  return report;
}

Report verify_table2(std::int64_t max_n) {
  max_n = std::clamp<std::int64_t>(max_n, 1, 10);
  const auto& T = family("T");
  Report report;
  for (const auto& row : table2()) {
    if (row.n > max_n) break;
    const Params p{{"n", row.n}};
    report.add("table2.T.recurrence", p, rec_eval_iter(T.recurrence, row.n), big(row.t));
    report.add("table2.T.closed", p, closed_eval(*T.closed_form, row.n), big(row.t));
    if (row.n <= 8) report.add("table2.T.dp", p, count_bricks(tower(row.n)), big(row.t));
  }
  return report;
}

Report verify_thm21(std::int64_t max_n, std::int64_t max_k) {
  Report report;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    for (std::int64_t k = 1; k <= max_k; ++k) {
      // The theorem is stated for n >= 2; n = 1 still holds with B(-1) = 0.
      const char* name = n >= 2 ? "thm21" : "thm21.extension_n1";
      report.add(name, {{"n", n}, {"k", k}}, count_tilings(l3_region(n, k)), l3(n, k));
    }
  }
  return report;
}

Report verify_crux(std::int64_t max_n) {
  const auto& A = family("A");
  Report report;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    const BigCount diagonal = l3(n, n);
    report.add("crux.closed", {{"n", n}}, diagonal, closed_eval(*A.closed_form, 2 * n));
    report.add("crux.recurrence", {{"n", n}}, diagonal, rec_eval_iter(A.recurrence, 2 * n));
  }
  return report;
}

Report verify_thm32(std::int64_t max_n) {
  const auto& T = family("T");
  Report report;
  const auto t_terms = rec_eval_range(T.recurrence, 2 * max_n + 1);
  auto t = [&](std::int64_t i) -> const BigCount& { return t_terms[static_cast<std::size_t>(i - T.offset())]; };
  for (std::int64_t n = 1; n <= max_n; ++n) {
    const BigCount a = term("A", n);
    const BigCount b = term("B", n);
    report.add("thm32.even", {{"n", n}}, t(2 * n), a * a);
    report.add("thm32.odd", {{"n", n}}, t(2 * n + 1), 2 * b * b);
    if (2 * n <= 9) report.add("thm32.even.dp", {{"n", n}}, count_bricks(tower(2 * n)), a * a);
    if (2 * n + 1 <= 9) report.add("thm32.odd.dp", {{"n", n}}, count_bricks(tower(2 * n + 1)), 2 * b * b);
  }
  return report;
}

Report verify_tauraso(std::int64_t max_n, std::int64_t max_k, std::int64_t max_diag) {
  Report report;
  for (std::int64_t n = 1; n <= max_n; ++n)
    for (std::int64_t k = 1; k <= max_k; ++k)
      report.add("tauraso.dp", {{"n", n}, {"k", k}}, count_tilings(l2_region(n, k)), l2(n, k));

  const auto& diag = family("L2D");
  for (std::int64_t n = 1; n <= max_diag; ++n)
    report.add("tauraso.diagonal", {{"n", n}}, closed_eval(*diag.closed_form, n), l2(n, n - 1));
  return report;
}

Report verify_coupled_recurrences(std::int64_t max_n) {
  Report report;
  if (max_n < 1) return report;
  const auto a = rec_eval_range(family("A").recurrence, max_n);  // from 1
  const auto b = rec_eval_range(family("B").recurrence, max_n);  // from 0
  const auto c = rec_eval_range(family("C").recurrence, max_n);  // from 0
  const auto t = rec_eval_range(family("T").recurrence, max_n);  // from 1
  const auto m = rec_eval_range(family("M").recurrence, max_n);  // from 1
  auto A = [&](std::int64_t i) { return i == 0 ? term("A", 0) : a[i - 1]; };
  auto T = [&](std::int64_t i) { return i == 0 ? term("T", 0) : t[i - 1]; };
  auto M = [&](std::int64_t i) { return i == 0 ? term("M", 0) : m[i - 1]; };

  for (std::int64_t n = 1; n <= max_n; ++n) {
    const Params p{{"n", n}};
    report.add("recurrences.A", p, A(n), A(n - 1) + 2 * b[n - 1]);
    report.add("recurrences.B", p, b[n], A(n) + b[n - 1]);
    report.add("recurrences.C", p, c[n], A(n) + b[n]);
    if (n >= 2) report.add("recurrences.T", p, T(n), 2 * T(n - 1) + T(n - 2) + 4 * M(n - 1));
    report.add("recurrences.M", p, M(n), T(n - 1) + M(n - 1));
  }
  return report;
}

Report verify_all() {
  Report report;
  report.merge(verify_table1());
  report.merge(verify_table2());
  report.merge(verify_thm21());
  report.merge(verify_crux());
  report.merge(verify_thm32());
  report.merge(verify_tauraso());
  report.merge(verify_coupled_recurrences());
  report.sort();
  return report;
}

}  // namespace domino
