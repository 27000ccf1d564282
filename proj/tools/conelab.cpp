// Command-line driver: runs one scenario and prints its report.
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "conelab/report/scenarios.hpp"

int main(int argc, char** argv) {
  using namespace conelab;
  CLI::App app{"Run a conic LP duality scenario and print a report"};
  report::ScenarioConfig cfg;
  std::string format = "json";
  std::map<std::string, std::string> raw;

  app.add_option("--scenario", cfg.scenario, "sublinear-checks | pathology | soc | hilbert | kretschmer | "
                                             "kretschmer-gap | unbounded | discontinuity")
      ->required();
  for (const char* name : {"alpha", "delta", "gamma", "cells", "mode", "levels", "eps", "eta0", "eta1", "trunc",
                           "witness-m", "b-file", "y"}) {
    app.add_option_function<std::string>(std::string("--") + name, [&raw, name](const std::string& v) { raw[name] = v; });
  }
  double tol = -1;
  app.add_option("--tol", tol, "Tolerance for floating comparisons");
  app.add_option("--seed", cfg.seed, "Sampling seed");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  cfg.params = raw;
  if (app.count("--tol")) cfg.tol = tol;
  cfg.format = format == "csv" ? report::Format::csv : report::Format::json;

  try {
    const auto rep = report::run(cfg);
    std::cout << report::render(rep, cfg.format);
    for (const auto& c : rep.checks)
      if (!c.pass) std::cerr << "check failed: " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    return rep.pass() ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "conelab: " << e.what() << "\n";
    return 2;
  }
}
