// dwedge: batch front-end for the doublewedge (N-D cross product) library.
//
// Usage: dwedge <subcommand> --in <scenario file> [--h <step>] [--dt <step>]
//               [--seed <u64>] [--out <file>]
//
// Exit codes: 0 success, 2 parse error, 3 dimension error,
// 4 numerical failure, 5 I/O error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dwedge/scenario.hpp"

namespace {

struct Options {
  std::string kind;
  std::string in_path;
  std::string out_path;
  double h = 0.0;
  double dt = 0.0;
  std::uint64_t seed = 0;
  bool h_set = false, dt_set = false, seed_set = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dwedge::IoError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw dwedge::IoError("failed reading '" + path + "'");
  return buf.str();
}

int run_subcommand(const Options& opt) {
  std::string text;
  if (!opt.in_path.empty()) {
    text = read_file(opt.in_path);
  } else if (opt.kind == "verify") {
    text = "kind = verify\n";
  } else {
    throw dwedge::IoError("subcommand '" + opt.kind + "' requires --in");
  }

  auto t0 = std::chrono::steady_clock::now();
  dwedge::Scenario scenario = dwedge::parse_scenario(text);
  if (scenario.kind != opt.kind) {
    throw dwedge::ParseError("scenario kind '" + scenario.kind +
                                 "' does not match subcommand '" + opt.kind +
                                 "'",
                             0, 0);
  }
  if (opt.h_set) scenario.scalars["h"] = opt.h;
  if (opt.dt_set) scenario.scalars["dt"] = opt.dt;
  if (opt.seed_set) scenario.seed = opt.seed;

  dwedge::Report report = dwedge::run(scenario);
  auto t1 = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  report.add("elapsed_ms", dwedge::format_double(ms));

  if (opt.out_path.empty()) {
    std::cout << report.to_text();
  } else {
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) {
      throw dwedge::IoError("cannot open output file '" + opt.out_path + "'");
    }
    out << report.to_text();
    if (!out) throw dwedge::IoError("failed writing '" + opt.out_path + "'");
  }
  return report.verify_failed ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"doublewedge (N-D cross product) calculator"};
  app.set_help_flag("--help", "print help");  // frees -h / --h for the step size
  app.require_subcommand(1);

  Options opt;
  for (const char* kind : {"moment", "inertia", "angular-momentum", "power",
                           "volume", "curl", "lorentz", "verify"}) {
    CLI::App* sub = app.add_subcommand(kind, "");
    sub->add_option("--in", opt.in_path, "scenario file");
    sub->add_option("--out", opt.out_path, "output file (default stdout)");
    sub->add_option("--h", opt.h, "finite-difference step")
        ->each([&opt](const std::string&) { opt.h_set = true; });
    sub->add_option("--dt", opt.dt, "time step")
        ->each([&opt](const std::string&) { opt.dt_set = true; });
    sub->add_option("--seed", opt.seed, "RNG seed for verify")
        ->each([&opt](const std::string&) { opt.seed_set = true; });
    sub->callback([&opt, kind] { opt.kind = kind; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    return run_subcommand(opt);
  } catch (const dwedge::ParseError& e) {
    std::cout << "error = " << e.what() << "\n";
    return 2;
  } catch (const dwedge::DimensionError& e) {
    std::cout << "error = " << e.what() << "\n";
    return 3;
  } catch (const dwedge::NumericalError& e) {
    std::cout << "error = " << e.what() << "\n";
    return 4;
  } catch (const dwedge::IoError& e) {
    std::cout << "error = " << e.what() << "\n";
    return 5;
  }
}
