#pragma once

#include <stdexcept>

namespace domino {

/// Input is well-formed but exceeds a hard size bound of the algorithm
/// (DP width, oracle cell budget, cross-section size).
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input: ASCII regions, rendered tilings, builder specs.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closed form evaluated to something other than a nonnegative integer.
/// Only a mistranscribed formula can trigger this.
class ClosedFormError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace domino
