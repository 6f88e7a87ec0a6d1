#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domino/bigcount.hpp"
#include "domino/quadratic.hpp"
#include "domino/recurrence.hpp"

namespace domino {

/// One summand coefficient * base^(n + shift).
struct ClosedFormTerm {
  QuadExpr coefficient;
  QuadExpr base;
  std::int64_t shift = 0;
};

/// Sum of ClosedFormTerm over a single radicand. Sign terms (-1)^n are
/// ordinary terms with base -1.
struct ClosedForm {
  std::vector<ClosedFormTerm> terms;
};

/// Exact value at n. Throws ClosedFormError if the sqrt(d) part does not
/// cancel or the result is not a nonnegative integer, std::out_of_range if
/// some n + shift is negative.
BigCount closed_eval(const ClosedForm& form, std::int64_t n);

/// The value before any integrality checks; exposed for tests.
QuadExpr closed_eval_exact(const ClosedForm& form, std::int64_t n);

struct Family {
  std::string token;  // CLI name: F A B C T M L3 L2D
  std::string description;
  std::string oeis;
  LinearRecurrence recurrence;
  std::optional<ClosedForm> closed_form;

  std::int64_t offset() const { return recurrence.start; }
};

/// F, A, B, C, T, M, L3, L2D in that order.
const std::vector<Family>& catalog();

/// Throws std::invalid_argument for an unknown token.
const Family& family(std::string_view token);

/// Fibonacci with F(0) = F(1) = 1, extended by F(-1) = 0.
BigCount fibonacci(std::int64_t n);

/// Terms of a catalog family with the one-step backward extension used by
/// the two-parameter formulas: B(-1) = 0, A(0) = 1, T(0) = 1, M(0) = 0.
BigCount term(std::string_view token, std::int64_t n);

/// F(n) F(k-1) + F(n-1) F(k); n, k >= 0.
BigCount l2(std::int64_t n, std::int64_t k);

/// A(n) A(k) + C(n-1) B(k-1) + B(n-2) B(k-1); n, k >= 1.
BigCount l3(std::int64_t n, std::int64_t k);

}  // namespace domino
