#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "wg/curve.hpp"

namespace wg::dsl {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression tree over t, pi, numeric literals, + - * /, unary minus,
/// sin, cos, and integer powers.
struct Expr {
  enum class Op { Num, Var, Pi, Add, Sub, Mul, Div, Neg, Sin, Cos, Pow };

  Op op = Op::Num;
  double value = 0.0;  ///< Num only
  int exponent = 0;    ///< Pow only
  ExprPtr lhs;         ///< operand of unary nodes, base of Pow
  ExprPtr rhs;
};

struct CurveExpr {
  ExprPtr x;
  ExprPtr y;
};

/// Grammar: `x = expr ; y = expr [;]`. Precedence from loosest to tightest:
/// + -, * /, ^ (integer exponent), unary minus. `pow(e, n)` is an
/// alternative spelling of `e^n`.
CurveExpr parse_curve(std::string_view src);
ExprPtr parse_expr(std::string_view src);

std::string print(const ExprPtr& e);
std::string print(const CurveExpr& c);
bool equal(const ExprPtr& a, const ExprPtr& b);

double evaluate(const ExprPtr& e, double t);
/// Symbolic d/dt with light algebraic simplification.
ExprPtr differentiate(const ExprPtr& e);
CurveExpr differentiate(const CurveExpr& c);

inline constexpr double kClosureTol = 1e-6;

/// Samples positions and analytic velocities at t_i = 2*pi*i/n, then checks
/// closure and the SampledCurve invariants.
SampledCurve sample_expr(const CurveExpr& c, std::size_t n);

}  // namespace wg::dsl
