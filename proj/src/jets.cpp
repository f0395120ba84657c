#include "cnnd/jets.hpp"

#include <cmath>

#include "cnnd/errors.hpp"
#include "cnnd/lorentz.hpp"

namespace cnnd {

Jet2& Jet2::operator+=(const Jet2& b) {
  v += b.v;
  dx += b.dx;
  dy += b.dy;
  dxx += b.dxx;
  dxy += b.dxy;
  dyy += b.dyy;
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& b) {
  v -= b.v;
  dx -= b.dx;
  dy -= b.dy;
  dxx -= b.dxx;
  dxy -= b.dxy;
  dyy -= b.dyy;
  return *this;
}

Jet2& Jet2::operator*=(const Jet2& b) {
  const Jet2 a = *this;
  v = a.v * b.v;
  dx = a.dx * b.v + a.v * b.dx;
  dy = a.dy * b.v + a.v * b.dy;
  dxx = a.dxx * b.v + 2.0 * a.dx * b.dx + a.v * b.dxx;
  dxy = a.dxy * b.v + a.dx * b.dy + a.dy * b.dx + a.v * b.dxy;
  dyy = a.dyy * b.v + 2.0 * a.dy * b.dy + a.v * b.dyy;
  return *this;
}

Jet2& Jet2::operator/=(const Jet2& b) {
  if (std::abs(b.v) <= kTolZero) throw DivisionByZero("jet division by a value near zero");
  const double r = 1.0 / b.v;
  return *this *= chain(b, r, -r * r, 2.0 * r * r * r);
}

Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }
Jet2 operator/(Jet2 a, const Jet2& b) { return a /= b; }
Jet2 operator-(const Jet2& a) { return {-a.v, -a.dx, -a.dy, -a.dxx, -a.dxy, -a.dyy}; }
Jet2 operator*(double s, const Jet2& a) {
  return {s * a.v, s * a.dx, s * a.dy, s * a.dxx, s * a.dxy, s * a.dyy};
}

Jet2 jet_arith(JetOp op, const Jet2& a, const Jet2& b) {
  switch (op) {
    case JetOp::Add: return a + b;
    case JetOp::Sub: return a - b;
    case JetOp::Mul: return a * b;
    case JetOp::Div: return a / b;
    case JetOp::Neg: return -a;
  }
  return a;
}

Jet2 chain(const Jet2& a, double f0, double f1, double f2) {
  return {f0,
          f1 * a.dx,
          f1 * a.dy,
          f1 * a.dxx + f2 * a.dx * a.dx,
          f1 * a.dxy + f2 * a.dx * a.dy,
          f1 * a.dyy + f2 * a.dy * a.dy};
}

Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.v), c = std::cos(a.v);
  return chain(a, s, c, -s);
}

Jet2 cos(const Jet2& a) {
  const double s = std::sin(a.v), c = std::cos(a.v);
  return chain(a, c, -s, -c);
}

Jet2 sinh(const Jet2& a) {
  const double s = std::sinh(a.v), c = std::cosh(a.v);
  return chain(a, s, c, s);
}

Jet2 cosh(const Jet2& a) {
  const double s = std::sinh(a.v), c = std::cosh(a.v);
  return chain(a, c, s, c);
}

Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.v);
  return chain(a, e, e, e);
}

Jet2 log(const Jet2& a) {
  if (!(a.v > 0.0)) throw DomainError("ln of a non-positive value");
  const double r = 1.0 / a.v;
  return chain(a, std::log(a.v), r, -r * r);
}

Jet2 sqrt(const Jet2& a) {
  if (!(a.v > 0.0)) throw DomainError("sqrt of a non-positive value");
  const double s = std::sqrt(a.v);
  return chain(a, s, 0.5 / s, -0.25 / (s * a.v));
}

Jet2 pow_const(const Jet2& a, double p) {
  const bool integral = std::floor(p) == p;
  if (!integral && !(a.v > 0.0)) throw DomainError("non-integer power of a non-positive value");
  if (p < 0.0 && std::abs(a.v) <= kTolZero) throw DivisionByZero("negative power of a value near zero");
  if (p == 0.0) return Jet2::constant(1.0);
  const double f0 = std::pow(a.v, p);
  const double f1 = p * std::pow(a.v, p - 1.0);
  const double f2 = p == 1.0 ? 0.0 : p * (p - 1.0) * std::pow(a.v, p - 2.0);
  return chain(a, f0, f1, f2);
}

Jet2 pow_int(const Jet2& a, int n) { return pow_const(a, static_cast<double>(n)); }

Jet2 jet_func(JetFn f, const Jet2& a) {
  switch (f) {
    case JetFn::Sin: return sin(a);
    case JetFn::Cos: return cos(a);
    case JetFn::Sinh: return sinh(a);
    case JetFn::Cosh: return cosh(a);
    case JetFn::Exp: return exp(a);
    case JetFn::Ln: return log(a);
    case JetFn::Sqrt: return sqrt(a);
  }
  return a;
}

double plain_func(JetFn f, double a) {
  switch (f) {
    case JetFn::Sin: return std::sin(a);
    case JetFn::Cos: return std::cos(a);
    case JetFn::Sinh: return std::sinh(a);
    case JetFn::Cosh: return std::cosh(a);
    case JetFn::Exp: return std::exp(a);
    case JetFn::Ln:
      if (!(a > 0.0)) throw DomainError("ln of a non-positive value");
      return std::log(a);
    case JetFn::Sqrt:
      if (!(a > 0.0)) throw DomainError("sqrt of a non-positive value");
      return std::sqrt(a);
  }
  return a;
}

Jet1 operator/(const Jet1& a, const Jet1& b) {
  if (std::abs(b.v) <= kTolZero) throw DivisionByZero("jet division by a value near zero");
  const double q = a.v / b.v;
  return {q, (a.dx - q * b.dx) / b.v, (a.dy - q * b.dy) / b.v};
}

Jet1 sqrt(const Jet1& a) {
  if (!(a.v > 0.0)) throw DomainError("sqrt of a non-positive value");
  const double s = std::sqrt(a.v);
  return {s, 0.5 * a.dx / s, 0.5 * a.dy / s};
}

}  // namespace cnnd
