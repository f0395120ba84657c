#include "cnnd/surface.hpp"

namespace cnnd {

const char* to_string(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::Explicit: return "explicit";
    case SurfaceKind::Graph: return "graph";
    case SurfaceKind::Translation: return "translation";
    case SurfaceKind::Ruled: return "ruled";
  }
  return "?";
}

SurfaceDef explicit_surface(std::array<Expr, 4> psi, const Vec4& Z) {
  SurfaceDef s;
  s.kind = SurfaceKind::Explicit;
  s.psi = std::move(psi);
  s.Z = Z;
  return s;
}

SurfaceDef explicit_surface(const std::array<std::string, 4>& src, const Vec4& Z) {
  std::array<Expr, 4> psi;
  for (std::size_t i = 0; i < 4; ++i) psi[i] = parse(src[i]);
  return explicit_surface(std::move(psi), Z);
}

SurfacePoint evaluate(const SurfaceDef& s, double x, double y) {
  SurfacePoint p;
  for (std::size_t i = 0; i < 4; ++i) {
    const Jet2 j = eval_jet(s.psi[i], x, y);
    p.jet[i] = j;
    p.psi[i] = j.v;
    p.px[i] = j.dx;
    p.py[i] = j.dy;
    p.pxx[i] = j.dxx;
    p.pxy[i] = j.dxy;
    p.pyy[i] = j.dyy;
  }
  return p;
}

}  // namespace cnnd
