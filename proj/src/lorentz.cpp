#include "cnnd/lorentz.hpp"

#include <cmath>

namespace cnnd {

const char* to_string(CausalClass c) {
  switch (c) {
    case CausalClass::Spacelike: return "Spacelike";
    case CausalClass::Timelike: return "Timelike";
    case CausalClass::Lightlike: return "Lightlike";
    case CausalClass::Zero: return "Zero";
  }
  return "?";
}

double euclid_norm(const Vec4& v) { return std::hypot(std::hypot(v[0], v[1]), std::hypot(v[2], v[3])); }

double euclid_norm(const Bivector& b) {
  double s = 0.0;
  for (double x : b.c) s += x * x;
  return std::sqrt(s);
}

CausalClass causal_class(const Vec4& v, double tol_null, double tol_zero) {
  if (euclid_norm(v) <= tol_zero) return CausalClass::Zero;
  const double n2 = mink_dot(v, v);
  if (std::abs(n2) <= tol_null) return CausalClass::Lightlike;
  return n2 > 0.0 ? CausalClass::Spacelike : CausalClass::Timelike;
}

bool in_grassmannian(const Bivector& eta, double tol) {
  return std::abs(biv_dot(eta, eta) - 1.0) <= tol && std::abs(wedge4(eta, eta)) <= tol;
}

}  // namespace cnnd
