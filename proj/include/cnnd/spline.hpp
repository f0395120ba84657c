#pragma once

#include <vector>

namespace cnnd {

/// Clamped cubic spline on uniform knots.
class CubicSpline {
 public:
  /// values[i] at lo + i*h; slope_lo/slope_hi are the end derivatives.
  CubicSpline(double lo, double hi, std::vector<double> values, double slope_lo, double slope_hi);

  double lo() const { return lo_; }
  double hi() const { return hi_; }

  struct Sample {
    double value, d1, d2;
  };
  /// Evaluates inside [lo, hi]; outside, the end cubic is extrapolated.
  Sample operator()(double s) const;

 private:
  double lo_, hi_, h_;
  std::vector<double> y_, m_;  // values and second derivatives at knots
};

}  // namespace cnnd
