#pragma once

// Task runners behind the command line tool. Each writes its CSV files into
// the output directory and a short report to the given stream.
//
//   analyze    analyze.csv       x,y,status,zperp_norm2,K,KN,H2,a,b,betaZ,betaW
//   verify     battery.csv, gauss_suite.csv   x,y,identity,residual,pass
//   ellipse    ellipse.csv       theta,x_Zperp,y_Wprime,direct_x,direct_y,B1,B2,B3,B4,
//                                implicit_literal,implicit_corrected
//   gauss      gauss.csv         x,y,status,G12,G13,G14,G23,G24,G34,HGG_re,HGG_im,
//                                z1_re,z1_im,z2_re,z2_im,z3_re,z3_im,zsum_re,zsum_im
//   pde-check  pde_residual.csv  x,y,residual
//   pde-solve  pde_solution.csv  x,y,g,residual   and pde_log.txt
//
// Floats are written as shortest round-trip decimals, missing values as nan.
// Exit codes: 0 success, 1 failed verification or solver failure, 2 config
// or parse error.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cnnd/config.hpp"

namespace cnnd {

struct RunOptions {
  std::string config_path;
  std::vector<std::string> overrides;  // section.key=value
  std::optional<Task> task;            // replaces task.name
  std::optional<std::string> out_dir;  // replaces output.dir
};

/// Runs one task; returns 0 or 1 and throws on errors it cannot classify.
int run_task(const RunConfig& rc, std::ostream& out);

/// Loads the config, runs the task and maps errors to exit codes.
int run(const RunOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace cnnd
