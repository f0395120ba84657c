#pragma once

// A small expression language for scalar functions of (x, y) and curves of t.
//
// Grammar (whitespace insensitive, no implicit multiplication):
//
//   expr    = term { ("+" | "-") term } ;
//   term    = unary { ("*" | "/") unary } ;
//   unary   = "-" unary | power ;
//   power   = primary [ "^" [ "-" ] integer ] ;
//   primary = number | constant | variable | function "(" expr ")" | "(" expr ")" ;
//   function = "sin" | "cos" | "sinh" | "cosh" | "exp" | "ln" | "sqrt" ;
//   constant = "pi" | "e" ;
//   variable = "x" | "y"        (surface context)
//            | "t"              (curve context) ;

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cnnd/jets.hpp"

namespace cnnd {

enum class Var { X, Y, T };
enum class ExprContext { Surface, Curve };
enum class BinOp { Add, Sub, Mul, Div };
enum class NamedConstant { Pi, E };

class CubicSpline;
struct ExprNode;

/// Immutable expression tree; copies share structure.
class Expr {
 public:
  Expr() = default;
  explicit Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}

  const ExprNode& node() const { return *node_; }
  bool empty() const { return !node_; }

  static Expr literal(double v);
  static Expr constant(NamedConstant c);
  static Expr variable(Var v);
  static Expr negate(Expr e);
  static Expr binary(BinOp op, Expr lhs, Expr rhs);
  static Expr power(Expr base, int exponent);
  static Expr call(JetFn fn, Expr arg);
  /// Tabulated function of one argument; not representable in source text.
  static Expr table(std::shared_ptr<const CubicSpline> spline, Expr arg);

  friend Expr operator+(Expr a, Expr b) { return binary(BinOp::Add, std::move(a), std::move(b)); }
  friend Expr operator-(Expr a, Expr b) { return binary(BinOp::Sub, std::move(a), std::move(b)); }
  friend Expr operator*(Expr a, Expr b) { return binary(BinOp::Mul, std::move(a), std::move(b)); }
  friend Expr operator/(Expr a, Expr b) { return binary(BinOp::Div, std::move(a), std::move(b)); }
  friend Expr operator-(Expr a) { return negate(std::move(a)); }

 private:
  std::shared_ptr<const ExprNode> node_;
};

struct LiteralNode {
  double value;
};
struct ConstantNode {
  NamedConstant which;
};
struct VariableNode {
  Var var;
};
struct NegNode {
  Expr operand;
};
struct BinaryNode {
  BinOp op;
  Expr lhs, rhs;
};
struct PowerNode {
  Expr base;
  int exponent;
};
struct CallNode {
  JetFn fn;
  Expr arg;
};
struct TableNode {
  std::shared_ptr<const CubicSpline> spline;
  Expr arg;
};

struct ExprNode {
  std::variant<LiteralNode, ConstantNode, VariableNode, NegNode, BinaryNode, PowerNode, CallNode, TableNode>
      value;
};

/// Throws SyntaxError or UnknownIdentifier.
Expr parse(std::string_view src, ExprContext ctx = ExprContext::Surface);

/// Source text with minimal parentheses; parse(to_string(e)) reproduces e.
std::string to_string(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

double eval(const Expr& e, double x, double y);
double eval_curve(const Expr& e, double t);

/// Exact order-2 jet at (x, y).
Jet2 eval_jet(const Expr& e, double x, double y);
/// Jet of a curve expression in t: value, first and second derivative sit in
/// the v, dx and dxx channels.
Jet2 eval_curve_jet(const Expr& e, double t);

/// Replace every occurrence of variable v by the expression r.
Expr substitute(const Expr& e, Var v, const Expr& r);

/// Coefficients (constant term first) when e is a polynomial in v built from
/// literals, named constants, +, -, *, division by constants and integer
/// powers; nullopt otherwise.
std::optional<std::vector<double>> as_polynomial(const Expr& e, Var v);

/// Expression sum_k coeffs[k] * arg^k.
Expr polynomial_expr(const std::vector<double>& coeffs, const Expr& arg);

std::string shortest_repr(double v);

}  // namespace cnnd
