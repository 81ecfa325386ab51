#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "concave/commands.hpp"

using namespace concave;

namespace {

std::optional<std::string> opt_path(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

int finish(const CommandResult& r) {
  std::fputs(r.text.c_str(), stdout);
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coefficient bodies, Hankel determinant bounds and region plots for concave maps with a pole"};
  app.require_subcommand(1);

  std::vector<double> ps;
  int grid = 24;
  int iters = 200;
  std::int64_t samples = 1000;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "csv";
  std::string what = "both";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "RNG seed")->capture_default_str();
    sub->add_option("--out", out, "Output file (stdout when omitted)");
  };

  auto* bounds = app.add_subcommand("bounds", "Table of lower bound, estimate and upper bounds of M(p)");
  bounds->add_option("--p", ps, "Comma separated pole locations")->delimiter(',')->required();
  bounds->add_option("--grid", grid, "Angles per parameter in the search grid")->capture_default_str();
  bounds->add_option("--iters", iters, "Nelder-Mead iterations per start")->capture_default_str();
  add_common(bounds);

  auto* region = app.add_subcommand("region", "Export Omega_p and the Hankel value cloud");
  region->add_option("--p", ps, "Pole location")->delimiter(',')->required()->expected(1);
  region->add_option("--what", what, "omega, hankel or both")
      ->check(CLI::IsMember({"omega", "hankel", "both"}))
      ->capture_default_str();
  region->add_option("--format", format, "csv, svg or json")
      ->check(CLI::IsMember({"csv", "svg", "json"}))
      ->capture_default_str();
  region->add_option("--samples", samples, "Cloud size")->capture_default_str();
  add_common(region);

  auto* verify = app.add_subcommand("verify", "Run every invariant check against the oracles");
  verify->add_option("--p", ps, "Comma separated pole locations (default 0.2,0.5,0.8)")->delimiter(',');
  verify->add_option("--samples", samples, "Random samples per family and p")->capture_default_str();
  add_common(verify);

  auto* extremal = app.add_subcommand("extremal", "Numerical estimate of M(p) with its maximizer");
  extremal->add_option("--p", ps, "Pole location")->delimiter(',')->required()->expected(1);
  extremal->add_option("--grid", grid, "Angles per parameter in the search grid")->capture_default_str();
  extremal->add_option("--iters", iters, "Nelder-Mead iterations per start")->capture_default_str();
  add_common(extremal);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (grid < 2 || iters < 0 || samples < 1) {
    std::cerr << "error: --grid must be >= 2, --iters >= 0, --samples >= 1\n";
    return kExitUsage;
  }

  SearchOptions opts;
  opts.grid = grid;
  opts.refine_iters = iters;
  opts.seed = seed;

  try {
    if (*bounds) return finish(cmd_bounds(ps, opts, opt_path(out)));
    if (*region) {
      static const std::map<std::string, RegionWhat> whats{
          {"omega", RegionWhat::omega}, {"hankel", RegionWhat::hankel}, {"both", RegionWhat::both}};
      static const std::map<std::string, RegionFormat> formats{
          {"csv", RegionFormat::csv}, {"svg", RegionFormat::svg}, {"json", RegionFormat::json}};
      return finish(cmd_region(ps.front(), whats.at(what), formats.at(format), samples, seed, opt_path(out)));
    }
    if (*verify) {
      if (ps.empty()) ps = {0.2, 0.5, 0.8};
      for (double p : ps) PoleParam{p};
      const CommandResult r = cmd_verify(ps, samples, seed, opt_path(out));
      if (r.exit_code != kExitOk) std::cerr << "verification failed\n";
      return finish(r);
    }
    if (*extremal) return finish(cmd_extremal(ps.front(), opts, opt_path(out)));
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
