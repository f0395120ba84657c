// cnnd analyze|verify|ellipse|gauss|pde-check|pde-solve --config PATH [--set section.key=value]... [--out DIR]

#include <CLI11.hpp>
#include <iostream>

#include "cnnd/tasks.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Surfaces in R^{3,1} with a canonical null direction"};
  app.require_subcommand(1);

  cnnd::RunOptions opts;
  std::string out_dir;
  for (const char* name : {"analyze", "verify", "ellipse", "gauss", "pde-check", "pde-solve"}) {
    auto* sub = app.add_subcommand(name, std::string("run the ") + name + " task");
    sub->add_option("--config", opts.config_path, "config file")->required();
    sub->add_option("--set", opts.overrides, "override one key, section.key=value");
    sub->add_option("--out", out_dir, "output directory");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  opts.task = cnnd::task_from_string(app.get_subcommands().front()->get_name());
  if (!out_dir.empty()) opts.out_dir = out_dir;
  return cnnd::run(opts, std::cout, std::cerr);
}
