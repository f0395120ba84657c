#include "cnnd/spline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cnnd {

CubicSpline::CubicSpline(double lo, double hi, std::vector<double> values, double slope_lo,
                         double slope_hi)
    : lo_(lo), hi_(hi), y_(std::move(values)) {
  const std::size_t n = y_.size();
  if (n < 3 || !(hi > lo)) throw std::invalid_argument("spline needs at least 3 knots on a non-empty range");
  h_ = (hi - lo) / static_cast<double>(n - 1);

  // Tridiagonal system for the knot second derivatives (Thomas algorithm).
  std::vector<double> diag(n, 4.0), rhs(n), upper(n, 1.0), lower(n, 1.0);
  const double k = 6.0 / (h_ * h_);
  for (std::size_t i = 1; i + 1 < n; ++i) rhs[i] = k * (y_[i + 1] - 2.0 * y_[i] + y_[i - 1]);
  diag[0] = 2.0;
  rhs[0] = 6.0 / h_ * ((y_[1] - y_[0]) / h_ - slope_lo);
  diag[n - 1] = 2.0;
  rhs[n - 1] = 6.0 / h_ * (slope_hi - (y_[n - 1] - y_[n - 2]) / h_);

  for (std::size_t i = 1; i < n; ++i) {
    const double w = lower[i] / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  m_.assign(n, 0.0);
  m_[n - 1] = rhs[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) m_[i] = (rhs[i] - upper[i] * m_[i + 1]) / diag[i];
}

CubicSpline::Sample CubicSpline::operator()(double s) const {
  const auto last = static_cast<long>(y_.size()) - 2;
  const long i = std::clamp(static_cast<long>(std::floor((s - lo_) / h_)), 0L, last);
  const double x0 = lo_ + static_cast<double>(i) * h_;
  const double b = (s - x0) / h_;
  const double a = 1.0 - b;
  const double yi = y_[i], yj = y_[i + 1], mi = m_[i], mj = m_[i + 1];
  const double h2 = h_ * h_ / 6.0;
  return {a * yi + b * yj + ((a * a * a - a) * mi + (b * b * b - b) * mj) * h2,
          (yj - yi) / h_ - (3.0 * a * a - 1.0) / 6.0 * h_ * mi + (3.0 * b * b - 1.0) / 6.0 * h_ * mj,
          a * mi + b * mj};
}

}  // namespace cnnd
