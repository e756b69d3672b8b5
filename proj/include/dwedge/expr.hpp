#pragma once

#include <memory>
#include <string>

#include "dwedge/algebra.hpp"

namespace dwedge {

/// One parsed arithmetic expression over x1..xN and t.
/// Grammar: + - * / ^ (right-assoc), unary minus, parentheses, the
/// functions sin, cos, exp, numeric literals. Variables are 1-based to
/// match the usual coordinate names.
class Expr {
 public:
  virtual ~Expr() = default;
  virtual double eval(const Vector& x, double t) const = 0;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Parses `text` as an expression in dimension `dim`. Throws ParseError
/// (column positions refer to `text`; the caller offsets line numbers).
ExprPtr parse_expression(const std::string& text, int dim);

}  // namespace dwedge
