#pragma once

// Closed-form scalar expressions in chart variables x1..xn and (optionally)
// a curve parameter t. Standard infix grammar:
//
//   expression := term (('+'|'-') term)*
//   term       := unary (('*'|'/') unary)*
//   unary      := '-' unary | power
//   power      := primary ('^' ['-'] integer)?
//   primary    := number | 'x'<k> | 't' | fn '(' expression ')' | '(' expression ')'
//   fn         := sin | cos | exp | sqrt
//
// Exponents are constant integers only. Expressions are immutable after
// parsing and safe to evaluate concurrently.

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "randers/dual.hpp"

namespace randers {

class Expression {
 public:
  Expression() = default;

  /// Parse `text` over variables x1..x<dimension>; `allow_param` additionally
  /// admits the curve parameter t. Throws ConfigError with a position on
  /// syntax errors, unknown identifiers, and out-of-range variable indices.
  static Expression parse(std::string_view text, int dimension,
                          bool allow_param = false);

  /// f(point)
  double eval(std::span<const double> point) const;

  /// (f(point), Df(point)·direction) by dual-number propagation.
  std::pair<double, double> eval_dual(std::span<const double> point,
                                      std::span<const double> direction) const;

  /// Curve channel: (f(t), df/dt · t_dot) for an expression in t alone.
  std::pair<double, double> eval_param(double t, double t_dot = 1.0) const;

  int dimension() const { return dimension_; }
  bool uses_param() const { return uses_param_; }
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
  int dimension_ = 0;
  bool uses_param_ = false;
};

}  // namespace randers
