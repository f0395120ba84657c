#pragma once

#include <array>
#include <optional>

#include "cnnd/expr.hpp"
#include "cnnd/lorentz.hpp"

namespace cnnd {

enum class SurfaceKind { Explicit, Graph, Translation, Ruled };

const char* to_string(SurfaceKind k);

using CurveExprs = std::array<Expr, 4>;

/// A parametrization (x, y) -> psi in R^{3,1} together with the constant
/// vector Z whose normal part is tested for being lightlike.
struct SurfaceDef {
  SurfaceKind kind = SurfaceKind::Explicit;
  std::array<Expr, 4> psi;
  Vec4 Z{1, 0, 0, 0};
  // Translation surfaces keep their generating curves for diagnostics.
  std::optional<CurveExprs> alpha, delta;
};

SurfaceDef explicit_surface(std::array<Expr, 4> psi, const Vec4& Z);

/// Parse four surface-context expressions.
SurfaceDef explicit_surface(const std::array<std::string, 4>& src, const Vec4& Z);

/// psi and its partials at a point.
struct SurfacePoint {
  std::array<Jet2, 4> jet;
  Vec4 psi, px, py, pxx, pxy, pyy;
};

SurfacePoint evaluate(const SurfaceDef& s, double x, double y);

}  // namespace cnnd
