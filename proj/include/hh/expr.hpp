#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "hh/errors.hpp"

namespace hh {

enum class ExprKind {
  Num,  // nonnegative finite literal
  Var,  // 'r' or 's'
  Pi,
  Neg,
  Exp,
  Log,
  Min,
  Max,
  Add,
  Sub,
  Mul,
  Div,
  Pow,
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable expression tree over (r, s). Nodes are shared and never mutated
// after construction, so evaluation is reentrant.
class Expr {
 public:
  ExprKind kind;
  double num = 0.0;  // Num only
  char var = 'r';    // Var only
  ExprPtr a, b;      // children: unary uses a, binary uses a and b

  static ExprPtr number(double v);    // requires v finite and >= 0
  static ExprPtr constant(double v);  // any finite v; negatives wrap in Neg
  static ExprPtr variable(char v);    // 'r' or 's'
  static ExprPtr pi();
  static ExprPtr unary(ExprKind k, ExprPtr child);
  static ExprPtr binary(ExprKind k, ExprPtr lhs, ExprPtr rhs);
};

// Grammar: + - over * / over unary - over ^ (right associative), atoms are
// literals (decimal or scientific), r, s, pi, parentheses, and the calls
// exp(a), log(a), min(a,b), max(a,b). Throws ParseError with the byte offset
// and the token classes that would have been legal.
ExprPtr parse_expr(std::string_view text);

// Same grammar with s rejected; used for radial profiles of one variable.
ExprPtr parse_expr_univariate(std::string_view text);

// Prints with minimal parentheses such that re-parsing yields a structurally
// identical tree. Literals print in shortest round-trip form.
std::string print_expr(const ExprPtr& e);

bool expr_equal(const ExprPtr& lhs, const ExprPtr& rhs);

// Swaps the roles of r and s throughout.
ExprPtr transpose_expr(const ExprPtr& e);

// Evaluates at (r, s). Domain violations (log of a nonpositive value,
// fractional power of a negative base, indeterminate forms yielding NaN)
// throw EvalError. Overflow of finite operands propagates as +-inf so the
// quadrature layer can treat the point as unresolvable instead of aborting.
double eval_expr(const ExprPtr& e, double r, double s);

}  // namespace hh
