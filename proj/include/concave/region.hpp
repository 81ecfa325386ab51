#pragma once

// Sampled planar regions: point clouds with a closed boundary polyline, the
// winding-number containment test, and the Omega_p family.

#include <cstdint>
#include <string>
#include <vector>

#include "concave/exec.hpp"
#include "concave/moebius.hpp"
#include "concave/types.hpp"

namespace concave {

inline constexpr double kBoundaryTol = 1e-9;
inline constexpr int kBoundaryBins = 256;

struct RegionMeta {
  std::string kind;  // "omega" or "hankel"
  double p = 0.0;
  std::int64_t resolution = 0;  // n_theta or n_samples
  std::int64_t bins = 0;
  std::uint64_t seed = 0;
};

struct RegionSample {
  std::vector<Complex> points;
  /// Closed polyline: front() == back().
  std::vector<Complex> boundary;
  RegionMeta meta;
};

enum class Containment { inside, boundary, outside };

/// Winding-number test against region.boundary; points within tol of the
/// polyline report boundary. Throws DegenerateBoundary for < 3 distinct vertices.
Containment contains(const RegionSample& region, Complex z, double tol = kBoundaryTol);

/// Winding number of a closed polyline around z (z off the polyline).
int winding_number(const std::vector<Complex>& closed, Complex z);

/// Distance from z to the polyline.
double distance_to_polyline(const std::vector<Complex>& polyline, Complex z);

/// Symmetric Hausdorff distance, vertices of each against segments of the other.
double polyline_hausdorff(const std::vector<Complex>& a, const std::vector<Complex>& b);

/// Closed polyline omega_map(e^{i theta_j}), theta_j = 2 pi j / n_theta.
RegionSample sample_omega_boundary(const PoleParam& pp, int n_theta);

/// Exact membership in Omega_p: solve omega_map(z) = w and test |z| <= 1.
Containment omega_contains(const PoleParam& pp, Complex w, double tol = kBoundaryTol);

struct MonotoneCheck {
  bool holds = false;
  int contacts = 0;  // samples of the smaller region found on the larger one's boundary
};

/// Omega_{p_large} inside Omega_{p_small}, tested on n_theta boundary samples.
MonotoneCheck check_omega_monotone(double p_small, double p_large, int n_theta);

/// Direction-binned radial maxima about the centroid, closed.
std::vector<Complex> radial_boundary(const std::vector<Complex>& points, int bins = kBoundaryBins);

/// Cloud of H = Phi_p(sigma)/(18 P^3) over quasi-random sigma, with
/// dedicated slices |sigma_i| = 1 and the point sigma = (1,0,0).
RegionSample sample_region_H(const PoleParam& pp, std::int64_t n_samples, std::uint64_t seed,
                             Exec exec = Exec::parallel);

/// Reference sigma of cloud sample i (shared by serial and OpenMP kernels).
ParamTriple cloud_sigma(std::int64_t i, std::uint64_t seed);

}  // namespace concave
