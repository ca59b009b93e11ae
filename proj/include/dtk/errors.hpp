#pragma once

#include <stdexcept>
#include <string>

namespace dtk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dimension or adjacency-parameter mismatch between points, specs, and images.
struct DimensionError : Error {
  using Error::Error;
};

// A geometric operation was asked of an abstract (explicit-edge) image.
struct AbstractImageError : Error {
  using Error::Error;
};

// Search or enumeration exceeded its node/path budget.  Never treated as a
// pass: callers must surface this instead of reporting a truncated result.
struct BudgetError : Error {
  using Error::Error;
};

// A Z^2 image failed a disk/curve requirement; the message carries the
// diagnosis (holes, multiple bounded components, thin geometry, ...).
struct NotADiskError : Error {
  using Error::Error;
};

// A constructor's theorem hypotheses are not met by the given instance.
struct HypothesisError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line = 0;
  int column = 0;
  ParseError(const std::string& what, int line_, int column_ = 0)
      : Error(what), line(line_), column(column_) {}
};

}  // namespace dtk
