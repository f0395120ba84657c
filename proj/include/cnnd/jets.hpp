#pragma once

// Forward-mode jets in two parameters (x, y).
//
// Jet2 carries a value with its first and second partials and is exact for
// truncated Taylor arithmetic through order two. Jet1 carries value and
// gradient only; it is used for fields built from first derivatives of the
// parametrization (tangent frames, metric coefficients) whose own first
// derivatives are needed.

#include <cmath>

namespace cnnd {

/// Central finite-difference step used for derived scalar fields.
inline constexpr double kFdStep = 1e-4;

struct Jet2 {
  double v = 0.0;
  double dx = 0.0, dy = 0.0;
  double dxx = 0.0, dxy = 0.0, dyy = 0.0;

  static constexpr Jet2 constant(double c) { return {c, 0, 0, 0, 0, 0}; }
  static constexpr Jet2 var_x(double x) { return {x, 1, 0, 0, 0, 0}; }
  static constexpr Jet2 var_y(double y) { return {y, 0, 1, 0, 0, 0}; }

  Jet2& operator+=(const Jet2& b);
  Jet2& operator-=(const Jet2& b);
  Jet2& operator*=(const Jet2& b);
  Jet2& operator/=(const Jet2& b);
};

Jet2 operator+(Jet2 a, const Jet2& b);
Jet2 operator-(Jet2 a, const Jet2& b);
Jet2 operator*(Jet2 a, const Jet2& b);
Jet2 operator/(Jet2 a, const Jet2& b);
Jet2 operator-(const Jet2& a);
Jet2 operator*(double s, const Jet2& a);

enum class JetOp { Add, Sub, Mul, Div, Neg };
enum class JetFn { Sin, Cos, Sinh, Cosh, Exp, Ln, Sqrt };

/// Binary/unary arithmetic by tag; Neg ignores b.
Jet2 jet_arith(JetOp op, const Jet2& a, const Jet2& b);

/// Composition f(a) given f, f', f'' evaluated at a.v.
Jet2 chain(const Jet2& a, double f0, double f1, double f2);

Jet2 jet_func(JetFn f, const Jet2& a);
Jet2 sin(const Jet2& a);
Jet2 cos(const Jet2& a);
Jet2 sinh(const Jet2& a);
Jet2 cosh(const Jet2& a);
Jet2 exp(const Jet2& a);
Jet2 log(const Jet2& a);
Jet2 sqrt(const Jet2& a);
/// a^p for a real constant p; requires a.v > 0 unless p is an integer.
Jet2 pow_const(const Jet2& a, double p);
Jet2 pow_int(const Jet2& a, int n);

double plain_func(JetFn f, double a);

struct Jet1 {
  double v = 0.0;
  double dx = 0.0, dy = 0.0;

  static constexpr Jet1 constant(double c) { return {c, 0, 0}; }
  /// Derivative along the coordinate direction (ux, uy).
  constexpr double along(double ux, double uy) const { return ux * dx + uy * dy; }
};

constexpr Jet1 operator+(const Jet1& a, const Jet1& b) { return {a.v + b.v, a.dx + b.dx, a.dy + b.dy}; }
constexpr Jet1 operator-(const Jet1& a, const Jet1& b) { return {a.v - b.v, a.dx - b.dx, a.dy - b.dy}; }
constexpr Jet1 operator-(const Jet1& a) { return {-a.v, -a.dx, -a.dy}; }
constexpr Jet1 operator*(const Jet1& a, const Jet1& b) {
  return {a.v * b.v, a.dx * b.v + a.v * b.dx, a.dy * b.v + a.v * b.dy};
}
constexpr Jet1 operator*(double s, const Jet1& a) { return {s * a.v, s * a.dx, s * a.dy}; }
Jet1 operator/(const Jet1& a, const Jet1& b);
Jet1 sqrt(const Jet1& a);

/// First-derivative channels of a Jet2 viewed as a Jet1 field: d/dx and d/dy.
constexpr Jet1 partial_x(const Jet2& a) { return {a.dx, a.dxx, a.dxy}; }
constexpr Jet1 partial_y(const Jet2& a) { return {a.dy, a.dxy, a.dyy}; }

}  // namespace cnnd
