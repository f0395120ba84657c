#include "cnnd/tasks.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "cnnd/constructions.hpp"
#include "cnnd/errors.hpp"
#include "cnnd/gauss_map.hpp"
#include "cnnd/geometry.hpp"

namespace cnnd {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string num(double v) { return std::isnan(v) ? "nan" : shortest_repr(v); }

std::string at(double x, double y) { return "(" + num(x) + ", " + num(y) + ")"; }

void write_file(const RunConfig& rc, const std::string& name, const std::string& content) {
  std::filesystem::create_directories(rc.out_dir);
  const auto path = std::filesystem::path(rc.out_dir) / name;
  std::ofstream f(path, std::ios::binary);
  f << content;
  if (!f) throw Error("cannot write " + path.string());
}

double max_finite(double m, double v) { return std::isnan(v) ? m : std::max(m, std::abs(v)); }

struct AnalyzeRow {
  std::string status = "ok";
  double z2 = kNaN, K = kNaN, KN = kNaN, H2 = kNaN, a = kNaN, b = kNaN, bz = kNaN, bw = kNaN;
};

AnalyzeRow analyze_point(const SurfaceDef& s, double x, double y) {
  AnalyzeRow r;
  try {
    r.z2 = zperp_norm2(s, x, y);
    const GeometryReport g = geometry_report(s, x, y);
    r.K = g.K;
    r.KN = g.KN;
    r.H2 = g.H2;
    r.a = g.frame.a;
    r.b = g.frame.b;
    r.bz = g.frame.betaZ;
    r.bw = g.frame.betaW;
  } catch (const NotCnnd&) {
    r.status = "NotCnnd";
  } catch (const DegenerateZperp&) {
    r.status = "DegenerateZperp";
  } catch (const NotSpacelike&) {
    r.status = "NotSpacelike";
  } catch (const BetaResidual&) {
    r.status = "BetaResidual";
  } catch (const Error&) {
    r.status = "error";
  }
  return r;
}

int analyze(const RunConfig& rc, std::ostream& out) {
  const auto pts = rc.points();
  const long n = static_cast<long>(pts.size());
  std::vector<AnalyzeRow> rows(pts.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < n; ++k) rows[k] = analyze_point(rc.surface, pts[k].x, pts[k].y);

  std::ostringstream csv;
  csv << "x,y,status,zperp_norm2,K,KN,H2,a,b,betaZ,betaW\n";
  int failures = 0, degenerate = 0;
  for (long k = 0; k < n; ++k) {
    const AnalyzeRow& r = rows[k];
    csv << num(pts[k].x) << ',' << num(pts[k].y) << ',' << r.status << ',' << num(r.z2) << ',' << num(r.K) << ','
        << num(r.KN) << ',' << num(r.H2) << ',' << num(r.a) << ',' << num(r.b) << ',' << num(r.bz) << ','
        << num(r.bw) << '\n';
    if (r.status == "ok") continue;
    if (r.status == "DegenerateZperp")
      ++degenerate;
    else
      ++failures;
    out << r.status << " at " << at(pts[k].x, pts[k].y) << " zperp_norm2 " << num(r.z2) << '\n';
  }
  write_file(rc, "analyze.csv", csv.str());
  out << "analyze: " << n << " points, " << failures << " failed, " << degenerate << " degenerate\n";
  return failures ? 1 : 0;
}

int verify(const RunConfig& rc, std::ostream& out) {
  const auto pts = rc.points();
  BatteryReport battery, suite;
  try {
    battery = identity_battery(rc.surface, pts, rc.tol);
    suite = gauss_suite(rc.surface, pts, rc.tol);
  } catch (const PointError& e) {
    out << "verify: " << e.what() << '\n' << "verify: FAIL\n";
    return 1;
  }
  write_file(rc, "battery.csv", battery.csv());
  write_file(rc, "gauss_suite.csv", suite.csv());
  out << "identity battery\n" << battery.summary() << "gauss suite\n" << suite.summary();
  const bool ok = battery.passed() && suite.passed();
  out << "verify: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? 0 : 1;
}

int ellipse(const RunConfig& rc, std::ostream& out) {
  const GridPoint p = *rc.point;
  GeometryReport rep;
  try {
    rep = geometry_report(rc.surface, p.x, p.y);
  } catch (const PointError& e) {
    out << "ellipse: " << e.what() << '\n';
    return 1;
  }
  const EllipseData e = curvature_ellipse(rep, rc.samples);

  std::ostringstream csv;
  csv << "theta,x_Zperp,y_Wprime,direct_x,direct_y,B1,B2,B3,B4,implicit_literal,implicit_corrected\n";
  double max_dev = 0.0, max_lit = 0.0, max_cor = 0.0;
  for (const auto& s : e.samples) {
    csv << num(s.theta) << ',' << num(s.formula[0]) << ',' << num(s.formula[1]) << ',' << num(s.direct[0]) << ','
        << num(s.direct[1]);
    for (std::size_t i = 0; i < 4; ++i) csv << ',' << num(s.B[i]);
    csv << ',' << num(s.implicit_literal) << ',' << num(s.implicit_corrected) << '\n';
    max_dev = std::max({max_dev, std::abs(s.formula[0] - s.direct[0]), std::abs(s.formula[1] - s.direct[1])});
    max_lit = max_finite(max_lit, s.implicit_literal);
    max_cor = max_finite(max_cor, s.implicit_corrected);
  }
  write_file(rc, "ellipse.csv", csv.str());

  out << "point " << at(p.x, p.y) << '\n';
  out << "center " << num(e.center[0]) << ' ' << num(e.center[1]) << '\n';
  out << "coeff_cos " << num(e.coeff_cos[0]) << ' ' << num(e.coeff_cos[1]) << '\n';
  out << "coeff_sin " << num(e.coeff_sin[0]) << ' ' << num(e.coeff_sin[1]) << '\n';
  if (e.degenerate) out << "degenerate halflength " << num(e.halflength) << '\n';
  out << "max formula-direct " << num(max_dev) << '\n';
  out << "max implicit_literal " << num(max_lit) << '\n';
  out << "max implicit_corrected " << num(max_cor) << '\n';
  const bool ok = max_dev <= rc.tol && max_cor <= rc.tol;
  out << "ellipse: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? 0 : 1;
}

struct GaussRow {
  std::string status = "ok";
  Bivector G;
  ComplexScalar hgg{kNaN, kNaN};
  std::array<ComplexScalar, 3> z{ComplexScalar{kNaN, kNaN}, ComplexScalar{kNaN, kNaN}, ComplexScalar{kNaN, kNaN}};
  ComplexScalar zsum{kNaN, kNaN};
  bool spacelike = false;
};

GaussRow gauss_point(const SurfaceDef& s, double x, double y) {
  GaussRow r;
  for (std::size_t i = 0; i < 6; ++i) r.G[i] = kNaN;
  try {
    r.G = gauss_map(s, x, y);
    r.hgg = h_form(r.G, r.G);
    r.spacelike = true;
    const CnndFrame f = cnnd_frame(s, x, y);
    if (std::abs(f.a) > kTolA) {
      r.z = e_coords(adapted_basis(f), r.G);
      r.zsum = r.z[0] * r.z[0] + r.z[1] * r.z[1] + r.z[2] * r.z[2];
    }
  } catch (const NotCnnd&) {
    r.status = "NotCnnd";
  } catch (const DegenerateZperp&) {
    r.status = "DegenerateZperp";
  } catch (const NotSpacelike&) {
    r.status = "NotSpacelike";
  } catch (const BetaResidual&) {
    r.status = "BetaResidual";
  } catch (const Error&) {
    r.status = "error";
  }
  return r;
}

int gauss(const RunConfig& rc, std::ostream& out) {
  const auto pts = rc.point ? std::vector<GridPoint>{*rc.point} : rc.points();
  const long n = static_cast<long>(pts.size());
  std::vector<GaussRow> rows(pts.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < n; ++k) rows[k] = gauss_point(rc.surface, pts[k].x, pts[k].y);

  std::ostringstream csv;
  csv << "x,y,status,G12,G13,G14,G23,G24,G34,HGG_re,HGG_im,z1_re,z1_im,z2_re,z2_im,z3_re,z3_im,zsum_re,zsum_im\n";
  double max_h = 0.0, max_z = 0.0;
  int failures = 0;
  for (long k = 0; k < n; ++k) {
    const GaussRow& r = rows[k];
    csv << num(pts[k].x) << ',' << num(pts[k].y) << ',' << r.status;
    for (std::size_t i = 0; i < 6; ++i) csv << ',' << num(r.G[i]);
    csv << ',' << num(r.hgg.real()) << ',' << num(r.hgg.imag());
    for (const auto& z : r.z) csv << ',' << num(z.real()) << ',' << num(z.imag());
    csv << ',' << num(r.zsum.real()) << ',' << num(r.zsum.imag()) << '\n';
    if (r.spacelike) max_h = std::max(max_h, std::abs(r.hgg - 1.0));
    if (!std::isnan(r.zsum.real())) max_z = std::max(max_z, std::abs(r.zsum - 1.0));
    if (r.status != "ok" && r.status != "DegenerateZperp") {
      ++failures;
      out << r.status << " at " << at(pts[k].x, pts[k].y) << '\n';
    }
  }
  write_file(rc, "gauss.csv", csv.str());
  out << "max |H(G,G) - 1| " << num(max_h) << '\n';
  out << "max |z1^2 + z2^2 + z3^2 - 1| " << num(max_z) << '\n';
  const bool ok = failures == 0 && max_h <= rc.tol && max_z <= rc.tol;
  out << "gauss: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? 0 : 1;
}

int pde_check(const RunConfig& rc, std::ostream& out) {
  const auto pts = rc.points();
  const auto res = residual_grid(*rc.f, *rc.g, pts, true);
  std::ostringstream csv;
  csv << "x,y,residual\n";
  double m = 0.0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    csv << num(pts[k].x) << ',' << num(pts[k].y) << ',' << num(res[k]) << '\n';
    m = std::isnan(res[k]) ? std::numeric_limits<double>::infinity() : std::max(m, std::abs(res[k]));
  }
  write_file(rc, "pde_residual.csv", csv.str());
  out << "max |residual| " << num(m) << '\n';
  const bool ok = m <= rc.tol;
  out << "pde-check: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? 0 : 1;
}

int pde_solve_task(const RunConfig& rc, std::ostream& out) {
  GraphPDEProblem p;
  p.f = *rc.f;
  p.x0 = rc.x0;
  p.x1 = rc.x1;
  p.y0 = rc.y0;
  p.y1 = rc.y1;
  p.nx = rc.nx;
  p.ny = rc.ny;
  p.max_iter = rc.max_iter;
  p.damping = rc.damping;
  p.tol_resid = rc.tol_resid;
  p.init = rc.init;
  const std::optional<Expr> reference = rc.exact ? rc.exact : rc.g;
  const Expr& b = rc.boundary ? *rc.boundary : *reference;
  const double hy = (rc.y1 - rc.y0) / (rc.ny - 1);
  for (int j = 0; j < rc.ny; ++j) p.boundary.push_back(eval(b, rc.x0, rc.y0 + j * hy));

  PdeSolution sol;
  try {
    sol = pde_solve(p);
  } catch (const Diverged& e) {
    write_file(rc, "pde_log.txt", std::string("failure ") + e.what() + '\n');
    out << "pde-solve: " << e.what() << "\npde-solve: FAIL\n";
    return 1;
  } catch (const SingularJacobian& e) {
    write_file(rc, "pde_log.txt", std::string("failure ") + e.what() + '\n');
    out << "pde-solve: " << e.what() << "\npde-solve: FAIL\n";
    return 1;
  }
  std::string log = sol.log();
  if (reference) {
    double err = 0.0;
    for (int i = 0; i < sol.nx; ++i)
      for (int j = 0; j < sol.ny; ++j) err = std::max(err, std::abs(sol.at(i, j) - eval(*reference, sol.xs[i], sol.ys[j])));
    log += "max_error " + num(err) + '\n';
  }
  write_file(rc, "pde_solution.csv", sol.csv());
  write_file(rc, "pde_log.txt", log);
  out << log << "pde-solve: " << (sol.success ? "PASS" : "FAIL") << '\n';
  return sol.success ? 0 : 1;
}

}  // namespace

int run_task(const RunConfig& rc, std::ostream& out) {
  switch (rc.task) {
    case Task::Analyze: return analyze(rc, out);
    case Task::Verify: return verify(rc, out);
    case Task::Ellipse: return ellipse(rc, out);
    case Task::Gauss: return gauss(rc, out);
    case Task::PdeCheck: return pde_check(rc, out);
    case Task::PdeSolve: return pde_solve_task(rc, out);
  }
  return 1;
}

int run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  RunConfig rc;
  try {
    std::vector<std::string> overrides = opts.overrides;
    if (opts.task) overrides.push_back(std::string("task.name=") + to_string(*opts.task));
    if (opts.out_dir) overrides.push_back("output.dir=" + *opts.out_dir);
    rc = load_run_config(opts.config_path, overrides);
  } catch (const Error& e) {
    err << opts.config_path << ": " << e.what() << '\n';
    return 2;
  }
  try {
    return run_task(rc, out);
  } catch (const std::exception& e) {
    err << to_string(rc.task) << ": " << e.what() << '\n';
    return 1;
  }
}

}  // namespace cnnd
