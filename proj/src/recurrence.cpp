#include "domino/recurrence.hpp"

#include <stdexcept>
#include <string>

namespace domino {

namespace {

using Matrix = std::vector<std::vector<BigCount>>;

Matrix multiply(const Matrix& x, const Matrix& y) {
  const std::size_t d = x.size();
  Matrix out(d, std::vector<BigCount>(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      if (sgn(x[i][k]) == 0) continue;
      for (std::size_t j = 0; j < d; ++j) out[i][j] += x[i][k] * y[k][j];
    }
  return out;
}

void require_in_range(const LinearRecurrence& rec, std::int64_t n) {
  rec.validate();
  if (n < rec.start)
    throw std::out_of_range("index " + std::to_string(n) + " is below the first index " + std::to_string(rec.start));
}

}  // namespace

void LinearRecurrence::validate() const {
  if (coeffs.empty()) throw std::invalid_argument("recurrence order must be >= 1");
  if (initial.size() != coeffs.size())
    throw std::invalid_argument("recurrence of order " + std::to_string(coeffs.size()) + " needs " +
                                std::to_string(coeffs.size()) + " initial terms, got " +
                                std::to_string(initial.size()));
}

std::vector<BigCount> rec_eval_range(const LinearRecurrence& rec, std::int64_t last) {
  require_in_range(rec, last);
  const std::size_t d = rec.order();
  const auto count = static_cast<std::size_t>(last - rec.start + 1);
  std::vector<BigCount> out(rec.initial.begin(), rec.initial.begin() + std::min(d, count));
  out.reserve(count);
  BigCount acc;
  while (out.size() < count) {
    acc = 0;
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < d; ++i) {
      const std::int64_t c = rec.coeffs[i];
      if (c >= 0)
        acc += out[n - 1 - i] * static_cast<unsigned long>(c);
      else
        acc -= out[n - 1 - i] * static_cast<unsigned long>(-c);
    }
    out.push_back(acc);
  }
  return out;
}

BigCount rec_eval_iter(const LinearRecurrence& rec, std::int64_t n) {
  require_in_range(rec, n);
  const std::size_t d = rec.order();
  const auto offset = static_cast<std::size_t>(n - rec.start);
  if (offset < d) return rec.initial[offset];

  // Sliding window of the last d terms, oldest first.
  std::vector<BigCount> window(rec.initial);
  BigCount acc;
  for (std::size_t step = d; step <= offset; ++step) {
    acc = 0;
    for (std::size_t i = 0; i < d; ++i) {
      const std::int64_t c = rec.coeffs[i];
      const BigCount& term = window[d - 1 - i];
      if (c >= 0)
        acc += term * static_cast<unsigned long>(c);
      else
        acc -= term * static_cast<unsigned long>(-c);
    }
    for (std::size_t i = 0; i + 1 < d; ++i) window[i].swap(window[i + 1]);
    window[d - 1].swap(acc);
  }
  return window[d - 1];
}

BigCount rec_eval_matpow(const LinearRecurrence& rec, std::int64_t n) {
  require_in_range(rec, n);
  const std::size_t d = rec.order();
  const auto offset = static_cast<std::uint64_t>(n - rec.start);
  if (offset < d) return rec.initial[offset];

  // Companion matrix mapping (a(m+d-1), ..., a(m)) to (a(m+d), ..., a(m+1)).
  Matrix step(d, std::vector<BigCount>(d, 0));
  for (std::size_t j = 0; j < d; ++j) step[0][j] = static_cast<long>(rec.coeffs[j]);
  for (std::size_t i = 1; i < d; ++i) step[i][i - 1] = 1;

  Matrix power(d, std::vector<BigCount>(d, 0));
  for (std::size_t i = 0; i < d; ++i) power[i][i] = 1;
  for (std::uint64_t e = offset - (d - 1); e; e >>= 1) {
    if (e & 1) power = multiply(power, step);
    if (e > 1) step = multiply(step, step);
  }

  // Row 0 of power applied to (a(start+d-1), ..., a(start)).
  BigCount result = 0;
  for (std::size_t j = 0; j < d; ++j) result += power[0][j] * rec.initial[d - 1 - j];
  return result;
}

}  // namespace domino
