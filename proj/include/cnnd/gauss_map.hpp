#pragma once

// Bivector Gauss map of a spacelike surface and the quantities derived from
// its differential: the complex quadratic form G*H, the real form delta, the
// invariant Delta, asymptotic and mean-curvature directions and the
// curvature ellipse.

#include <array>
#include <vector>

#include "cnnd/battery.hpp"
#include "cnnd/geometry.hpp"

namespace cnnd {

/// Below this |a| the point is treated as a = 0.
inline constexpr double kTolA = 1e-8;

/// +1 or -1 so that the Gauss map equals Ztop ^ W of the adapted frame;
/// +1 where no adapted frame exists.
int frame_orientation(const SurfaceDef& s, double x, double y);

/// orientation * (psi_x ^ psi_y) normalized to unit length.
Bivector gauss_map(const SurfaceDef& s, double x, double y);
Bivector gauss_map(const SurfaceDef& s, double x, double y, int orientation);

/// Exact derivative of the Gauss map along the coordinate tangent u.
Bivector dgauss(const SurfaceDef& s, double x, double y, Tangent u);
Bivector dgauss(const SurfaceDef& s, double x, double y, Tangent u, int orientation);

ComplexScalar gstar_h(const SurfaceDef& s, double x, double y, Tangent u, Tangent v);

/// The three pairings H(dG(Ztop),dG(Ztop)), H(dG(Ztop),dG(W)), H(dG(W),dG(W)).
struct GStarH {
  ComplexScalar zz, zw, ww;
  /// -det of the form: zw^2 - zz*ww.
  ComplexScalar discriminant() const { return zw * zw - zz * ww; }
};

GStarH gstar_h_frame(const SurfaceDef& s, double x, double y);

/// Throws AZero when |a| <= tol_a.
ComplexScalar gstar_h_discriminant(const SurfaceDef& s, double x, double y, double tol_a = kTolA);

double delta_form(const SurfaceDef& s, double x, double y, Tangent u);

struct DeltaInvariant {
  double delta_z = 0.0, delta_w = 0.0, mixed = 0.0;
  /// mixed^2 - delta_z * delta_w
  double value() const { return mixed * mixed - delta_z * delta_w; }
};

DeltaInvariant delta_invariant(const SurfaceDef& s, double x, double y);

enum class DirectionKind { TwoDistinct, Double, All };

const char* to_string(DirectionKind k);

/// Directions in frame coordinates (s, t) meaning s*Ztop + t*W, unit
/// Euclidean length, first nonzero coordinate positive.
struct DirectionSet {
  DirectionKind kind = DirectionKind::All;
  std::vector<std::array<double, 2>> directions;
  /// K vanished with a != 0, so the general formula was reduced to {Ztop, W}.
  bool reduced = false;
};

DirectionSet asymptotic_directions(const GeometryReport& rep, double tol = kTolA);

/// Throws DegenerateFormula when a != 0 but K and KN both vanish.
DirectionSet mean_curvature_directions(const GeometryReport& rep, double tol = kTolA);

/// Determinant of two normal vectors in the basis (n3, -n4) of the frame.
double mixed_product(const CnndFrame& f, const Vec4& v1, const Vec4& v2);

/// Coordinates (<v, Wprime>, <v, Zperp>) of a normal vector in the basis
/// (Zperp, Wprime).
std::array<double, 2> null_coords(const CnndFrame& f, const Vec4& v);

struct EllipseSample {
  double theta = 0.0;
  std::array<double, 2> formula;  // center + cos 2t * coeff_cos + sin 2t * coeff_sin
  std::array<double, 2> direct;   // null_coords of B(u, u)
  Vec4 B;                         // B(u, u), u = cos t Ztop + sin t W
  /// Literal implicit equation with denominator 2||H|^2 - K|; NaN when gated off.
  double implicit_literal = 0.0;
  /// Same with the denominator ||H|^2 - K| that the norm of Hstar gives.
  double implicit_corrected = 0.0;
};

struct EllipseData {
  std::array<double, 2> center{};
  std::array<double, 2> coeff_cos{}, coeff_sin{};
  bool degenerate = false;
  double halflength = 0.0;  // degenerate case only
  std::vector<EllipseSample> samples;
};

/// nsamples angles theta = pi * k / nsamples.
EllipseData curvature_ellipse(const GeometryReport& rep, int nsamples, double tol = 1e-6);

struct AdaptedBasis {
  Bivector E1, E2, E3;
};

AdaptedBasis adapted_basis(const CnndFrame& f);

/// z_k = H(eta, E_k).
std::array<ComplexScalar, 3> e_coords(const AdaptedBasis& b, const Bivector& eta);

/// Residuals of the Gauss-map identities at one point, ordered as
/// gauss_identity_names(); NaN where an identity does not apply.
const std::vector<std::string>& gauss_identity_names();
std::vector<double> gauss_identity_residuals(const SurfaceDef& s, double x, double y);

BatteryReport gauss_suite(const SurfaceDef& s, const std::vector<GridPoint>& points, double tol);
BatteryReport gauss_suite_serial(const SurfaceDef& s, const std::vector<GridPoint>& points, double tol);

}  // namespace cnnd
