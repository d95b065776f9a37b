#pragma once

#include <stdexcept>
#include <string>

namespace qtrunc {

/// A precondition on parameters failed (S >= R, non-unit constant term, ...).
/// The CLI maps this to exit code 2.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A coefficient beyond the validity order of a truncated series was requested.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace qtrunc
