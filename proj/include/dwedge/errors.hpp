#pragma once

#include <stdexcept>
#include <string>

namespace dwedge {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands with incompatible dimensions.
struct DimensionError : Error {
  using Error::Error;
};

/// A numerical precondition failed (degenerate axis, tolerance exceeded, ...).
struct NumericalError : Error {
  using Error::Error;
};

/// Scenario-text parse failure, with 1-based position.
struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace dwedge
