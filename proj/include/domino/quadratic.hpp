#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace domino {

/// Exact element a + b*sqrt(d) of Q(sqrt d), d in {3, 5}.
///
/// Mixing radicands in one operation throws std::invalid_argument. A purely
/// rational value still carries its radicand so that it composes with the
/// irrational values of the same field.
class QuadExpr {
 public:
  QuadExpr(mpq_class rational, mpq_class irrational, int radicand);

  static QuadExpr rational(mpq_class value, int radicand) { return {std::move(value), 0, radicand}; }

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& irrational_part() const { return b_; }
  int radicand() const { return d_; }
  bool is_rational() const { return sgn(b_) == 0; }

  QuadExpr conjugate() const { return {a_, -b_, d_}; }

  /// a^2 - d b^2, the product with the conjugate.
  mpq_class norm() const;

  QuadExpr& operator+=(const QuadExpr& rhs);
  QuadExpr& operator-=(const QuadExpr& rhs);
  QuadExpr& operator*=(const QuadExpr& rhs);

  friend QuadExpr operator+(QuadExpr lhs, const QuadExpr& rhs) { return lhs += rhs; }
  friend QuadExpr operator-(QuadExpr lhs, const QuadExpr& rhs) { return lhs -= rhs; }
  friend QuadExpr operator*(QuadExpr lhs, const QuadExpr& rhs) { return lhs *= rhs; }
  friend QuadExpr operator-(const QuadExpr& value) { return {-value.a_, -value.b_, value.d_}; }

  friend bool operator==(const QuadExpr& lhs, const QuadExpr& rhs) {
    return lhs.d_ == rhs.d_ && lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
  }

  std::string to_string() const;

 private:
  void require_same_field(const QuadExpr& rhs) const;

  mpq_class a_;
  mpq_class b_;
  int d_;
};

/// Square and multiply; pow(x, 0) is 1.
QuadExpr pow(QuadExpr base, std::uint64_t exponent);

}  // namespace domino
