#pragma once

// Pointwise identity checks evaluated over a set of parameter points.
// Each identity is a residual that vanishes on surfaces whose normal part of
// Z is lightlike; NaN marks an identity that does not apply at a point.

#include <string>
#include <vector>

#include "cnnd/surface.hpp"

namespace cnnd {

struct GridPoint {
  double x = 0.0, y = 0.0;
};

/// Row-major grid (x outer, y inner); a count of 1 uses the range start.
std::vector<GridPoint> grid(double x0, double x1, int nx, double y0, double y1, int ny);

struct BatteryReport {
  std::vector<std::string> identities;
  std::vector<GridPoint> points;
  std::vector<std::vector<double>> residuals;  // [point][identity]
  /// Points where the normal part of Z vanishes; their rows are all NaN.
  std::vector<GridPoint> degenerate;
  double tol = 0.0;

  double max_residual(std::size_t identity) const;
  double max_residual() const;
  bool passed() const;
  /// One line per point per identity: x y identity residual PASS|FAIL|n/a.
  std::string text() const;
  /// Header x,y,identity,residual,pass.
  std::string csv() const;
  /// Per-identity maxima, one line each.
  std::string summary() const;
};

const std::vector<std::string>& identity_names();

/// Residuals at one point, ordered as identity_names().
std::vector<double> identity_residuals(const SurfaceDef& s, double x, double y);

/// Throws the first (in point order) per-point error, e.g. NotCnnd.
/// DegenerateZperp points are recorded in the report instead.
BatteryReport identity_battery(const SurfaceDef& s, const std::vector<GridPoint>& points, double tol);
BatteryReport identity_battery_serial(const SurfaceDef& s, const std::vector<GridPoint>& points, double tol);

/// Shared driver: evaluates fn at every point, in parallel or not.
template <class Fn>
std::vector<std::vector<double>> evaluate_points(const std::vector<GridPoint>& points, bool parallel, Fn&& fn);

}  // namespace cnnd

#include "cnnd/battery_impl.hpp"
