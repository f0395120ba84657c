#pragma once

// Linear algebra of Minkowski 4-space R^{3,1} (metric diag(+,+,+,-)) and of
// its bivector space, which carries the induced metric of signature (3,3).

#include <array>
#include <complex>
#include <cstddef>

namespace cnnd {

inline constexpr double kTolNull = 1e-9;
inline constexpr double kTolZero = 1e-12;

struct Vec4 {
  std::array<double, 4> c{};

  constexpr Vec4() = default;
  constexpr Vec4(double c1, double c2, double c3, double c4) : c{c1, c2, c3, c4} {}

  constexpr double& operator[](std::size_t i) { return c[i]; }
  constexpr double operator[](std::size_t i) const { return c[i]; }

  constexpr Vec4& operator+=(const Vec4& o) {
    for (std::size_t i = 0; i < 4; ++i) c[i] += o.c[i];
    return *this;
  }
  constexpr Vec4& operator-=(const Vec4& o) {
    for (std::size_t i = 0; i < 4; ++i) c[i] -= o.c[i];
    return *this;
  }
  constexpr Vec4& operator*=(double s) {
    for (auto& v : c) v *= s;
    return *this;
  }
  friend constexpr Vec4 operator+(Vec4 a, const Vec4& b) { return a += b; }
  friend constexpr Vec4 operator-(Vec4 a, const Vec4& b) { return a -= b; }
  friend constexpr Vec4 operator-(Vec4 a) { return a *= -1.0; }
  friend constexpr Vec4 operator*(double s, Vec4 a) { return a *= s; }
  friend constexpr Vec4 operator*(Vec4 a, double s) { return a *= s; }
  friend constexpr Vec4 operator/(Vec4 a, double s) { return a *= 1.0 / s; }
  friend constexpr bool operator==(const Vec4&, const Vec4&) = default;

  static constexpr Vec4 basis(std::size_t i) {
    Vec4 v;
    v.c[i] = 1.0;
    return v;
  }
};

enum class CausalClass { Spacelike, Timelike, Lightlike, Zero };

const char* to_string(CausalClass c);

/// u1v1 + u2v2 + u3v3 - u4v4
constexpr double mink_dot(const Vec4& u, const Vec4& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] - u[3] * v[3];
}

double euclid_norm(const Vec4& v);

CausalClass causal_class(const Vec4& v, double tol_null = kTolNull, double tol_zero = kTolZero);

/// Bivector components in the fixed basis order
/// e1^e2, e1^e3, e1^e4, e2^e3, e2^e4, e3^e4.
struct Bivector {
  std::array<double, 6> c{};

  enum Index : std::size_t { e12 = 0, e13, e14, e23, e24, e34 };

  constexpr Bivector() = default;
  constexpr Bivector(double b12, double b13, double b14, double b23, double b24, double b34)
      : c{b12, b13, b14, b23, b24, b34} {}

  constexpr double& operator[](std::size_t i) { return c[i]; }
  constexpr double operator[](std::size_t i) const { return c[i]; }

  constexpr Bivector& operator+=(const Bivector& o) {
    for (std::size_t i = 0; i < 6; ++i) c[i] += o.c[i];
    return *this;
  }
  constexpr Bivector& operator-=(const Bivector& o) {
    for (std::size_t i = 0; i < 6; ++i) c[i] -= o.c[i];
    return *this;
  }
  constexpr Bivector& operator*=(double s) {
    for (auto& v : c) v *= s;
    return *this;
  }
  friend constexpr Bivector operator+(Bivector a, const Bivector& b) { return a += b; }
  friend constexpr Bivector operator-(Bivector a, const Bivector& b) { return a -= b; }
  friend constexpr Bivector operator-(Bivector a) { return a *= -1.0; }
  friend constexpr Bivector operator*(double s, Bivector a) { return a *= s; }
  friend constexpr Bivector operator*(Bivector a, double s) { return a *= s; }
  friend constexpr bool operator==(const Bivector&, const Bivector&) = default;

  static constexpr Bivector basis(std::size_t i) {
    Bivector b;
    b.c[i] = 1.0;
    return b;
  }
};

using ComplexScalar = std::complex<double>;

/// Components are the 2x2 minors u_i v_j - u_j v_i.
constexpr Bivector wedge(const Vec4& u, const Vec4& v) {
  auto m = [&](std::size_t i, std::size_t j) { return u[i] * v[j] - u[j] * v[i]; };
  return {m(0, 1), m(0, 2), m(0, 3), m(1, 2), m(1, 3), m(2, 3)};
}

/// Metric signs of the basis bivectors: <e_i^e_j, e_i^e_j> = g_ii g_jj.
inline constexpr std::array<double, 6> kBivectorSigns{1.0, 1.0, -1.0, 1.0, -1.0, -1.0};

constexpr double biv_dot(const Bivector& a, const Bivector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < 6; ++i) s += kBivectorSigns[i] * a[i] * b[i];
  return s;
}

/// Coefficient of e1^e2^e3^e4 in a ^ b.
constexpr double wedge4(const Bivector& a, const Bivector& b) {
  using B = Bivector;
  return a[B::e12] * b[B::e34] + a[B::e34] * b[B::e12] - a[B::e13] * b[B::e24] -
         a[B::e24] * b[B::e13] + a[B::e14] * b[B::e23] + a[B::e23] * b[B::e14];
}

/// Hodge star, defined by <hodge(a), b> = wedge4(a, b). It is a signed
/// permutation of the basis components.
constexpr Bivector hodge(const Bivector& a) {
  using B = Bivector;
  return {a[B::e34], -a[B::e24], -a[B::e23], a[B::e14], a[B::e13], -a[B::e12]};
}

/// Multiplication by the complex structure i = -hodge.
constexpr Bivector mul_i(const Bivector& a) { return -hodge(a); }

inline ComplexScalar h_form(const Bivector& a, const Bivector& b) {
  return {biv_dot(a, b), wedge4(a, b)};
}

/// Unit simple bivectors: the oriented spacelike 2-planes.
bool in_grassmannian(const Bivector& eta, double tol);

double euclid_norm(const Bivector& b);

}  // namespace cnnd
