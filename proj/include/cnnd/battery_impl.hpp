#pragma once

#include <exception>

namespace cnnd {

template <class Fn>
std::vector<std::vector<double>> evaluate_points(const std::vector<GridPoint>& points, bool parallel, Fn&& fn) {
  const long n = static_cast<long>(points.size());
  std::vector<std::vector<double>> out(points.size());
  std::vector<std::exception_ptr> errors(points.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = fn(points[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace cnnd
