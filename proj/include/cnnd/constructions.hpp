#pragma once

// Surface factories: translation surfaces, graphs (x, y, f, g) with the
// criterion EG - F^2 = G and its PDE, ruled surfaces, split-complex
// derivatives and the two closed-form solution families.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cnnd/geometry.hpp"

namespace cnnd {

CurveExprs parse_curve(const std::array<std::string, 4>& src);

SurfaceDef translation_surface(const CurveExprs& alpha, const CurveExprs& delta, const Vec4& Z = Vec4{1, 0, 0, 0});

/// Sampled checks of the standing hypotheses on the generating curves.
struct TranslationDiagnostics {
  double max_alpha_delta = 0.0;  // max |<alpha'(x), delta'(y)>|
  double max_delta_e1 = 0.0;     // max |<delta'(y), e1>|
  double max_alpha_e1 = 0.0;     // max |<alpha'(x), e1>|
  bool curves_orthogonal = false, delta_perp_e1 = false, alpha_perp_e1 = false;
};

TranslationDiagnostics translation_diagnostics(const SurfaceDef& s, const std::vector<double>& xs,
                                               const std::vector<double>& ys, double tol = kTolNull);

/// |<e1, alpha'(x)>^2 - <alpha'(x), alpha'(x)>| <= tol.
bool translation_cnnd_criterion(const SurfaceDef& s, double x, double tol = kTolNull);

SurfaceDef graph_surface(const Expr& f, const Expr& g, const Vec4& Z = Vec4{1, 0, 0, 0});

enum class CriterionStatus { Holds, HoldsDegenerate, Fails };

const char* to_string(CriterionStatus s);

struct GraphCriterion {
  CriterionStatus status = CriterionStatus::Fails;
  /// G - (EG - F^2) for Z = e1, E - (EG - F^2) for Z = e2.
  double residual = 0.0;
  /// Tangential part of Z.
  Vec4 z_top;
};

/// Z must be e1 or e2. Throws NotSpacelike.
GraphCriterion graph_cnnd_criterion(const SurfaceDef& s, double x, double y, double tol = kTolNull);

/// (1+fy^2) gx^2 - 2 fx fy gx gy - (1-gy^2) fx^2
double pde_residual(const Expr& f, const Expr& g, double x, double y);
double pde_residual(double fx, double fy, double gx, double gy);

/// u + sigma v with sigma^2 = 1.
struct SplitComplex {
  double u = 0.0, v = 0.0;

  friend constexpr SplitComplex operator+(SplitComplex a, SplitComplex b) { return {a.u + b.u, a.v + b.v}; }
  friend constexpr SplitComplex operator-(SplitComplex a, SplitComplex b) { return {a.u - b.u, a.v - b.v}; }
  friend constexpr SplitComplex operator*(SplitComplex a, SplitComplex b) {
    return {a.u * b.u + a.v * b.v, a.u * b.v + a.v * b.u};
  }
  constexpr SplitComplex conj() const { return {u, -v}; }
  /// z * conj(z) = u^2 - v^2; may be negative.
  constexpr double modulus2() const { return u * u - v * v; }
};

struct SplitDerivatives {
  SplitComplex dz, dzbar;
};

/// Derivatives of h = f + sigma g along d/dz = (d/dx + sigma d/dy) / 2 and its conjugate.
SplitDerivatives split_ops(const Expr& f, const Expr& g, double x, double y);

/// f = (alpha(x+y) + k) / 2, g = (alpha(x+y) - k) / 2 for a curve alpha(t).
std::pair<Expr, Expr> family1(const Expr& alpha, double k);

struct Family2 {
  Expr f, g;
  bool symbolic_integral = false;
  /// max |pde_residual| over the sample grid.
  double max_residual = 0.0;
};

struct Rect {
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
};

/// f = (alpha^2 + x^2 - y^2 + C + k(x - y)) / (2 alpha), g with the last
/// three terms negated, where alpha and C (an antiderivative of c) are
/// evaluated at x + y. The residual report uses an n x n grid over the domain.
/// Throws AlphaVanishes when |alpha| < 1e-8 on the range of x + y.
Family2 family2(const Expr& alpha, const Expr& c, double k, const Rect& domain, int n = 7);

/// psi(x, y) = alpha(y) + x * Z0.
SurfaceDef ruled_surface(const CurveExprs& alpha, const Vec4& Z0, const Vec4& Z);
/// psi(x, y) = alpha(y) + x * D(y).
SurfaceDef ruled_surface(const CurveExprs& alpha, const CurveExprs& direction, const Vec4& Z);

}  // namespace cnnd
