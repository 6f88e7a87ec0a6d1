#include "domino/quadratic.hpp"

#include <stdexcept>

namespace domino {

QuadExpr::QuadExpr(mpq_class rational, mpq_class irrational, int radicand)
    : a_(std::move(rational)), b_(std::move(irrational)), d_(radicand) {
  if (d_ != 3 && d_ != 5) throw std::invalid_argument("radicand must be 3 or 5, got " + std::to_string(d_));
  a_.canonicalize();
  b_.canonicalize();
}

void QuadExpr::require_same_field(const QuadExpr& rhs) const {
  if (d_ != rhs.d_)
    throw std::invalid_argument("mixing Q(sqrt " + std::to_string(d_) + ") with Q(sqrt " + std::to_string(rhs.d_) +
                                ")");
}

mpq_class QuadExpr::norm() const { return a_ * a_ - d_ * b_ * b_; }

QuadExpr& QuadExpr::operator+=(const QuadExpr& rhs) {
  require_same_field(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QuadExpr& QuadExpr::operator-=(const QuadExpr& rhs) {
  require_same_field(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QuadExpr& QuadExpr::operator*=(const QuadExpr& rhs) {
  require_same_field(rhs);
  mpq_class a = a_ * rhs.a_ + d_ * b_ * rhs.b_;
  mpq_class b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::string QuadExpr::to_string() const {
  return a_.get_str() + (sgn(b_) < 0 ? " - " : " + ") + mpq_class(abs(b_)).get_str() + "*sqrt(" +
         std::to_string(d_) + ")";
}

QuadExpr pow(QuadExpr base, std::uint64_t exponent) {
  QuadExpr result = QuadExpr::rational(1, base.radicand());
  while (exponent) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

}  // namespace domino
