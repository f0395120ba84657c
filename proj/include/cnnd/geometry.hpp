#pragma once

// Pointwise geometry of a spacelike surface whose normal part of Z is
// lightlike: fundamental forms, the adapted frame (Ztop, W, Zperp, Wprime),
// curvature scalars and the Levi-Civita data needed by the identity checks.

#include <string>
#include <utility>
#include <vector>

#include "cnnd/surface.hpp"

namespace cnnd {

/// Tangent vector in coordinates: x * psi_x + y * psi_y.
struct Tangent {
  double x = 0.0, y = 0.0;

  friend constexpr Tangent operator+(Tangent a, Tangent b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Tangent operator-(Tangent a, Tangent b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Tangent operator*(double s, Tangent a) { return {s * a.x, s * a.y}; }
};

struct FirstForm {
  double E = 0.0, F = 0.0, G = 0.0, det = 0.0;

  double dot(Tangent u, Tangent v) const { return E * u.x * v.x + F * (u.x * v.y + u.y * v.x) + G * u.y * v.y; }
  double norm(Tangent u) const;
  /// Coordinates c with [E F; F G] c = (r1, r2).
  Tangent solve(double r1, double r2) const;
};

struct SecondForm {
  Vec4 Bxx, Bxy, Byy;

  /// B(u, v), bilinear in coordinate tangents.
  Vec4 operator()(Tangent u, Tangent v) const {
    return (u.x * v.x) * Bxx + (u.x * v.y + u.y * v.x) * Bxy + (u.y * v.y) * Byy;
  }
};

/// Minimum EG - F^2 accepted as spacelike.
inline constexpr double kTolSpacelike = 1e-12;

struct LocalGeometry {
  SurfacePoint pt;
  FirstForm I;
  SecondForm II;

  Vec4 ambient(Tangent u) const { return u.x * pt.px + u.y * pt.py; }
  /// Tangential coordinates of an ambient vector.
  Tangent tangential(const Vec4& v) const { return I.solve(mink_dot(v, pt.px), mink_dot(v, pt.py)); }
  Vec4 normal_part(const Vec4& v) const { return v - ambient(tangential(v)); }
};

/// Throws NotSpacelike.
LocalGeometry local_geometry(const SurfaceDef& s, double x, double y);

std::pair<FirstForm, SecondForm> fundamental_forms(const SurfaceDef& s, double x, double y);

struct CnndFrame {
  Vec4 Ztop, W, Zperp, Wprime;
  double a = 0.0, b = 0.0, betaZ = 0.0, betaW = 0.0;
  /// Coordinate components of Ztop and W.
  Tangent ztop, w;
  /// +1 when W is positively oriented with respect to (psi_x, psi_y),
  /// -1 when it had to be flipped so the ambient 4-frame has determinant +1.
  int orientation = 1;

  /// Orthonormal normal frame: n3 spacelike, n4 timelike.
  Vec4 n3() const;
  Vec4 n4() const;
  /// Frame coordinates (s, t) -> coordinate tangent s*Ztop + t*W.
  Tangent tangent(double s, double t) const { return s * ztop + t * w; }
};

/// Euclidean least-squares coefficient c of v ~ c*d (d nonzero) and the
/// residual norm |v - c*d|. Null directions admit no metric projection.
std::pair<double, double> fit_along(const Vec4& v, const Vec4& d);

/// Determinant of the 4x4 matrix whose rows are the given vectors.
double det4(const Vec4& r0, const Vec4& r1, const Vec4& r2, const Vec4& r3);

/// <Zperp, Zperp> for the unit-normalized Z; no lightlike requirement.
double zperp_norm2(const SurfaceDef& s, double x, double y);

/// Throws NotSpacelike, NotCnnd, DegenerateZperp, BetaResidual.
CnndFrame cnnd_frame(const SurfaceDef& s, double x, double y, double tol = kTolNull);
CnndFrame cnnd_frame(const LocalGeometry& g, const Vec4& Z, double x, double y, double tol = kTolNull);

/// A_nu(u) through the inverse first form.
Tangent shape_operator(const FirstForm& I, const SecondForm& II, const Vec4& nu, Tangent u);

struct GeometryReport {
  double x = 0.0, y = 0.0;
  double K = 0.0, KN = 0.0;
  Vec4 Hvec;
  double H2 = 0.0;
  Vec4 Hstar;
  CnndFrame frame;
  Vec4 Bzz, Bzw, Bww;  // B in the frame (Ztop, W)
  FirstForm I;
  SecondForm II;

  /// B(u, u) for u = s*Ztop + t*W.
  Vec4 B(double s, double t) const { return (s * s) * Bzz + (2.0 * s * t) * Bzw + (t * t) * Bww; }
};

GeometryReport geometry_report(const SurfaceDef& s, double x, double y, double tol = kTolNull);

enum class ScalarField { A, B, BetaZ, BetaW, AlphaZtop, K, KN, CoordX, CoordY };

const char* to_string(ScalarField f);

double scalar_field(const SurfaceDef& s, ScalarField f, double x, double y);

/// Central difference along the coordinate displacement u, step kFdStep.
double directional_derivative(const SurfaceDef& s, ScalarField f, double x, double y, Tangent u);

/// Levi-Civita data from the first jets of the metric.
struct Connection {
  // gamma[k][i][j] with indices 0 = x, 1 = y.
  double gamma[2][2][2]{};
};

Connection christoffel(const SurfaceDef& s, double x, double y);

/// Ztop and W coordinate fields with exact first derivatives.
struct FrameFields {
  Jet1 ztop[2], w[2];
};

FrameFields frame_fields(const SurfaceDef& s, double x, double y, int orientation);

/// nabla_X Y for coordinate fields given by their Jet1 components.
Tangent covariant_derivative(const Connection& c, const Jet1 X[2], const Jet1 Y[2]);
Tangent lie_bracket(const Jet1 X[2], const Jet1 Y[2]);

}  // namespace cnnd
