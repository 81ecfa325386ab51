#include "concave/commands.hpp"

#include <algorithm>

#include "concave/hankel.hpp"
#include "concave/oracle.hpp"
#include "concave/region.hpp"

namespace concave {

namespace {

CommandResult emit(std::string text, const std::optional<std::string>& out, int code = kExitOk) {
  if (out) {
    write_file(*out, text);
    return {code, ""};
  }
  return {code, std::move(text)};
}

}  // namespace

std::vector<BoundsRow> bounds_rows(std::vector<double> p_values, const SearchOptions& opts) {
  std::sort(p_values.begin(), p_values.end());
  std::vector<BoundsRow> rows;
  for (double p : p_values) {
    const PoleParam pp(p);
    const ExtremalReport rep = estimate_M(pp, opts);
    rows.push_back({p, 1.0 / (3.0 * p), rep.lower, rep.m_estimate, rep.upper, 1.0 / (3.0 * p) + 2.0 / 3.0});
  }
  return rows;
}

CommandResult cmd_bounds(const std::vector<double>& p_values, const SearchOptions& opts,
                         const std::optional<std::string>& csv_path) {
  const auto rows = bounds_rows(p_values, opts);
  if (csv_path) write_file(*csv_path, bounds_csv(rows));
  return {kExitOk, bounds_table(rows)};
}

std::string region_document(double p, RegionWhat what, RegionFormat format, std::int64_t samples,
                            std::uint64_t seed) {
  const PoleParam pp(p);
  std::optional<RegionSample> hankel, omega;
  if (what != RegionWhat::omega) hankel = sample_region_H(pp, samples, seed);
  if (what != RegionWhat::hankel) omega = sample_omega_boundary(pp, kOmegaBoundaryPoints);
  const RegionSample* h = hankel ? &*hankel : nullptr;
  const RegionSample* o = omega ? &*omega : nullptr;

  switch (format) {
    case RegionFormat::csv:
      return region_csv(h, o);
    case RegionFormat::svg:
      return region_svg(h, o);
    case RegionFormat::json: {
      nlohmann::json j;
      j["regions"] = nlohmann::json::array();
      if (h) j["regions"].push_back(region_json(*h));
      if (o) j["regions"].push_back(region_json(*o));
      return j.dump(1) + "\n";
    }
  }
  return {};
}

CommandResult cmd_region(double p, RegionWhat what, RegionFormat format, std::int64_t samples, std::uint64_t seed,
                         const std::optional<std::string>& out) {
  return emit(region_document(p, what, format, samples, seed), out);
}

CommandResult cmd_verify(const std::vector<double>& p_values, std::int64_t samples, std::uint64_t seed,
                         const std::optional<std::string>& out) {
  const VerifyReport rep = verify_all(p_values, samples, seed);
  return emit(verify_json(rep).dump(1) + "\n", out, rep.pass() ? kExitOk : kExitVerifyFailed);
}

CommandResult cmd_extremal(double p, const SearchOptions& opts, const std::optional<std::string>& out) {
  const ExtremalReport rep = estimate_M(PoleParam(p), opts);
  return emit(extremal_json(rep).dump(1) + "\n", out);
}

}  // namespace concave
