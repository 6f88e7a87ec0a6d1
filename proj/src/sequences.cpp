#include "domino/sequences.hpp"

#include <stdexcept>
#include <string>

#include "domino/errors.hpp"

namespace domino {

namespace {

QuadExpr q(mpq_class a, mpq_class b, int d) { return QuadExpr(std::move(a), std::move(b), d); }

mpq_class frac(long num, long den) { return mpq_class(num, den); }

LinearRecurrence recurrence(std::vector<std::int64_t> coeffs, std::vector<long> initial, std::int64_t start) {
  LinearRecurrence rec;
  rec.coeffs = std::move(coeffs);
  for (long v : initial) rec.initial.emplace_back(v);
  rec.start = start;
  rec.validate();
  return rec;
}

// A pair of conjugate terms c * x^(n+shift) + c' * x'^(n+shift).
void add_conjugate_pair(ClosedForm& form, const QuadExpr& coefficient, const QuadExpr& base, std::int64_t shift) {
  form.terms.push_back({coefficient, base, shift});
  form.terms.push_back({coefficient.conjugate(), base.conjugate(), shift});
}

std::vector<Family> build_catalog() {
  std::vector<Family> out;

  out.push_back({"F", "2 x n domino tilings, F(0) = F(1) = 1", "A000045 (shifted)",
                 recurrence({1, 1}, {1, 1}, 0), std::nullopt});

  {
    // (1/6)[(3 + sqrt3)(2 + sqrt3)^n + (3 - sqrt3)(2 - sqrt3)^n]
    ClosedForm form;
    add_conjugate_pair(form, q(frac(1, 2), frac(1, 6), 3), q(2, 1, 3), 0);
    out.push_back({"A", "3 x 2n domino tilings", "A001835", recurrence({4, -1}, {3, 11}, 1), form});
  }
  {
    // (1/(2 sqrt3))[(2 + sqrt3)^(n+1) - (2 - sqrt3)^(n+1)]
    ClosedForm form;
    add_conjugate_pair(form, q(0, frac(1, 6), 3), q(2, 1, 3), 1);
    out.push_back({"B", "3 x (2n+1) minus a corner", "A001353", recurrence({4, -1}, {1, 4}, 0), form});
  }
  {
    // (1/2)[(2 + sqrt3)^(n+1) + (2 - sqrt3)^(n+1)]
    ClosedForm form;
    add_conjugate_pair(form, q(frac(1, 2), 0, 3), q(2, 1, 3), 1);
    out.push_back({"C", "3 x (2n+2) minus two adjacent edge cells", "A001075", recurrence({4, -1}, {2, 7}, 0),
                   form});
  }
  {
    // (1/6)(2 + sqrt3)^(n+1) + (1/6)(2 - sqrt3)^(n+1) + (1/3)(-1)^n
    ClosedForm form;
    add_conjugate_pair(form, q(frac(1, 6), 0, 3), q(2, 1, 3), 1);
    form.terms.push_back({q(frac(1, 3), 0, 3), q(-1, 0, 3), 0});
    out.push_back({"T", "2 x 2 x n brick tilings", "A006253", recurrence({3, 3, -1}, {2, 9, 32}, 1), form});
  }

  // M(3) = T(2) + M(2) = 12.
  out.push_back({"M", "2 x 2 x n minus two adjacent top cells", "", recurrence({3, 3, -1}, {1, 3, 12}, 1),
                 std::nullopt});

  {
    // (1/6)[(3 + sqrt3)(7 + 4 sqrt3)^n + (3 - sqrt3)(7 - 4 sqrt3)^n]
    ClosedForm form;
    add_conjugate_pair(form, q(frac(1, 2), frac(1, 6), 3), q(7, 4, 3), 0);
    out.push_back({"L3", "L3(2n, 2n) tilings", "A122769", recurrence({14, -1}, {11, 153}, 1), form});
  }
  {
    // (2/5)((3 + sqrt5)/2)^n + (2/5)((3 - sqrt5)/2)^n + (1/5)(-1)^n
    // Roots of (x^2 - 3x + 1)(x + 1) = x^3 - 2x^2 - 2x + 1.
    ClosedForm form;
    add_conjugate_pair(form, q(frac(2, 5), 0, 5), q(frac(3, 2), frac(1, 2), 5), 0);
    form.terms.push_back({q(frac(1, 5), 0, 5), q(-1, 0, 5), 0});
    out.push_back({"L2D", "L2(n, n-1) tilings", "A061646", recurrence({2, 2, -1}, {1, 1, 3}, 0), form});
  }
  return out;
}

// Steps the recurrence backwards from its seed: a(m) from a(m+1..m+d).
// Every catalog recurrence has trailing coefficient +-1, so this is exact.
BigCount backward(const LinearRecurrence& rec, std::int64_t n) {
  const std::size_t d = rec.order();
  const std::int64_t last_coeff = rec.coeffs.back();
  if (last_coeff != 1 && last_coeff != -1)
    throw std::domain_error("backward extension needs a trailing coefficient of +-1");

  std::vector<BigCount> window(rec.initial);  // a(m) .. a(m+d-1)
  for (std::int64_t m = rec.start; m > n; --m) {
    BigCount rest = window[d - 1];  // a(m+d-1)
    for (std::size_t i = 0; i + 1 < d; ++i) rest -= window[d - 2 - i] * static_cast<long>(rec.coeffs[i]);
    if (last_coeff < 0) rest = -rest;
    window.insert(window.begin(), rest);
    window.pop_back();
  }
  return window[0];
}

}  // namespace

QuadExpr closed_eval_exact(const ClosedForm& form, std::int64_t n) {
  if (form.terms.empty()) throw std::invalid_argument("empty closed form");
  QuadExpr sum = QuadExpr::rational(0, form.terms.front().base.radicand());
  for (const auto& term : form.terms) {
    const std::int64_t exponent = n + term.shift;
    if (exponent < 0) throw std::out_of_range("closed form evaluated at negative exponent");
    sum += term.coefficient * pow(term.base, static_cast<std::uint64_t>(exponent));
  }
  return sum;
}

BigCount closed_eval(const ClosedForm& form, std::int64_t n) {
  const QuadExpr value = closed_eval_exact(form, n);
  if (!value.is_rational())
    throw ClosedFormError("irrational part did not cancel at n = " + std::to_string(n) + ": " + value.to_string());
  const mpq_class& r = value.rational_part();
  if (r.get_den() != 1 || sgn(r) < 0)
    throw ClosedFormError("closed form is not a nonnegative integer at n = " + std::to_string(n) + ": " +
                          r.get_str());
  return r.get_num();
}

const std::vector<Family>& catalog() {
  static const std::vector<Family> families = build_catalog();
  return families;
}

const Family& family(std::string_view token) {
  for (const auto& f : catalog())
    if (f.token == token) return f;
  throw std::invalid_argument("unknown family '" + std::string(token) + "' (expected F A B C T M L3 L2D)");
}

BigCount term(std::string_view token, std::int64_t n) {
  const auto& rec = family(token).recurrence;
  if (n >= rec.start) return rec_eval_iter(rec, n);
  if (n < rec.start - 1) throw std::out_of_range("only one step of backward extension is supported");
  return backward(rec, n);
}

BigCount fibonacci(std::int64_t n) { return term("F", n); }

BigCount l2(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw std::invalid_argument("l2 needs n, k >= 0");
  return fibonacci(n) * fibonacci(k - 1) + fibonacci(n - 1) * fibonacci(k);
}

BigCount l3(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) throw std::invalid_argument("l3 needs n, k >= 1");
  return term("A", n) * term("A", k) + term("C", n - 1) * term("B", k - 1) + term("B", n - 2) * term("B", k - 1);
}

}  // namespace domino
