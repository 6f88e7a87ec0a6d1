#pragma once

#include <gmpxx.h>

#include <string>

namespace domino {

/// Arbitrary-precision nonnegative count. Every tiling count and sequence
/// term in the library is one of these; nothing on a counting path touches
/// floating point.
using BigCount = mpz_class;

inline std::string to_decimal(const BigCount& value) { return value.get_str(10); }

}  // namespace domino
