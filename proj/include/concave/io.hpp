#pragma once

// CSV / JSON / SVG emission. Numbers use the shortest decimal form that
// round-trips to the same double.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "concave/errors.hpp"
#include "concave/extremal.hpp"
#include "concave/oracle.hpp"
#include "concave/region.hpp"

namespace concave {

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

std::string format_double(double x);

struct CsvPoint {
  Complex z;
  std::string kind;  // cloud, boundary, omega_boundary
};

/// `re,im,kind` rows; either region may be null.
std::string region_csv(const RegionSample* hankel, const RegionSample* omega);
/// Throws IoError on a malformed document.
std::vector<CsvPoint> parse_region_csv(std::string_view text);

nlohmann::json region_json(const RegionSample& region);
RegionSample region_from_json(const nlohmann::json& j);

/// Cloud as dots, Omega_p boundary stroked, unit circle for reference,
/// viewport [-1.5, 1.5]^2.
std::string region_svg(const RegionSample* hankel, const RegionSample* omega);

struct BoundsRow {
  double p = 0.0;
  double one_over_3p = 0.0;
  double lower = 0.0;
  double m_estimate = 0.0;
  double upper = 0.0;
  double outer_upper = 0.0;  // 1/(3p) + 2/3
};

std::string bounds_csv(const std::vector<BoundsRow>& rows);
std::string bounds_table(const std::vector<BoundsRow>& rows);

nlohmann::json verify_json(const VerifyReport& report);
nlohmann::json extremal_json(const ExtremalReport& report);

void write_file(const std::string& path, std::string_view contents);

}  // namespace concave
