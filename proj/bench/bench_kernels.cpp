// Serial reference against the OpenMP kernels. Second argument: 0 serial, 1 parallel.

#include <benchmark/benchmark.h>

#include <cmath>

#include "cnnd/battery.hpp"
#include "cnnd/constructions.hpp"
#include "cnnd/gauss_map.hpp"
#include "cnnd/pde.hpp"

using namespace cnnd;

namespace {

SurfaceDef twisted_cone() {
  return explicit_surface(std::array<std::string, 4>{"x", "(x + 0.3*x^2)*cos(y) + sin(y)",
                                                     "(x + 0.3*x^2)*sin(y) - cos(y)", "x + 0.3*x^2 + y"},
                          Vec4{1, 0, 0, 0});
}

void BM_Battery(benchmark::State& st) {
  const SurfaceDef s = twisted_cone();
  const int n = static_cast<int>(st.range(0));
  const auto pts = grid(0.5, 1.5, n, 0, 1, n);
  for (auto _ : st) {
    auto r = st.range(1) ? identity_battery(s, pts, 1e-5) : identity_battery_serial(s, pts, 1e-5);
    benchmark::DoNotOptimize(r);
  }
  st.SetItemsProcessed(st.iterations() * n * n);
}

void BM_GaussSuite(benchmark::State& st) {
  const SurfaceDef s = twisted_cone();
  const int n = static_cast<int>(st.range(0));
  const auto pts = grid(0.5, 1.5, n, 0, 1, n);
  for (auto _ : st) {
    auto r = st.range(1) ? gauss_suite(s, pts, 1e-6) : gauss_suite_serial(s, pts, 1e-6);
    benchmark::DoNotOptimize(r);
  }
  st.SetItemsProcessed(st.iterations() * n * n);
}

void BM_ResidualGrid(benchmark::State& st) {
  const auto [f, g] = family1(parse("sin(t)", ExprContext::Curve), 1.0);
  const int n = static_cast<int>(st.range(0));
  const auto pts = grid(-1, 1, n, -1, 1, n);
  for (auto _ : st) benchmark::DoNotOptimize(residual_grid(f, g, pts, st.range(1) != 0));
  st.SetItemsProcessed(st.iterations() * n * n);
}

GraphPDEProblem pde_problem(int n) {
  GraphPDEProblem p;
  p.f = parse("sin(x) * y + x^2 / 3");
  p.nx = p.ny = n;
  p.boundary.assign(static_cast<std::size_t>(n), 0.0);
  return p;
}

void BM_Jacobian(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const GraphPdeSystem sys(pde_problem(n));
  std::vector<double> g(static_cast<std::size_t>(n) * n);
  for (std::size_t k = 0; k < g.size(); ++k) g[k] = std::sin(0.01 * k);
  for (auto _ : st) benchmark::DoNotOptimize(sys.jacobian(g, st.range(1) != 0));
  st.SetItemsProcessed(st.iterations() * n * n);
}

void BM_Residuals(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const GraphPdeSystem sys(pde_problem(n));
  std::vector<double> g(static_cast<std::size_t>(n) * n);
  for (std::size_t k = 0; k < g.size(); ++k) g[k] = std::sin(0.01 * k);
  for (auto _ : st) benchmark::DoNotOptimize(sys.node_residuals(g, st.range(1) != 0));
  st.SetItemsProcessed(st.iterations() * n * n);
}

}  // namespace

BENCHMARK(BM_Battery)->ArgsProduct({{7, 21}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GaussSuite)->ArgsProduct({{7, 21}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ResidualGrid)->ArgsProduct({{101, 401}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Jacobian)->ArgsProduct({{101, 401}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Residuals)->ArgsProduct({{101, 401}, {0, 1}})->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
