#pragma once

#include <cstdint>
#include <vector>

#include "domino/bigcount.hpp"

namespace domino {

/// a(n) = sum_i coeffs[i] * a(n-1-i) for n >= start + order, seeded with
/// a(start) .. a(start + order - 1).
struct LinearRecurrence {
  std::vector<std::int64_t> coeffs;
  std::vector<BigCount> initial;
  std::int64_t start = 0;

  std::size_t order() const { return coeffs.size(); }

  /// Throws std::invalid_argument unless 1 <= order == initial.size().
  void validate() const;
};

/// Linear iteration, O(n * order) big additions. Throws std::out_of_range
/// for n < start.
BigCount rec_eval_iter(const LinearRecurrence& rec, std::int64_t n);

/// All terms a(start) .. a(last) in one pass.
std::vector<BigCount> rec_eval_range(const LinearRecurrence& rec, std::int64_t last);

/// Companion-matrix exponentiation, O(order^3 log n) big multiplications.
BigCount rec_eval_matpow(const LinearRecurrence& rec, std::int64_t n);

}  // namespace domino
