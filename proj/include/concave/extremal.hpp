#pragma once

// Numerical estimate of M(p) = sup |Phi_p(sigma)| / (18 P^3) over the closed
// polydisk: a coarse polar grid in all six real coordinates followed by
// Nelder-Mead refinement from the best grid points.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "concave/exec.hpp"
#include "concave/moebius.hpp"
#include "concave/types.hpp"

namespace concave {

struct SearchOptions {
  int grid = 24;          // angles per parameter
  int moduli = 8;         // moduli per parameter, 0 and 1 included
  int refine_iters = 200; // Nelder-Mead iterations per start
  int starts = 16;        // best grid points used as starts
  int random_starts = 4;  // extra seeded starts
  int slice_samples = 1024; // samples of the real slice (t, -1, 0); 0 disables it
  std::uint64_t seed = 1;
  Exec exec = Exec::parallel;
};

struct ExtremalReport {
  double p = 0.0;
  double m_estimate = 0.0;
  ParamTriple arg_sigma;
  double lower = 0.0;        // h_p(7/(4P))
  double upper = 0.0;        // (P^2 + 2P - 2)/(3P)
  double slice_value = 0.0;  // same as lower; kept for the report layout
  double sigma2_slope = 0.0; // |d Phi_p / d sigma2| / (18 P^3) at the maximizer
  std::int64_t iterations = 0;
  int grid = 0;
  std::uint64_t seed = 0;
};

ExtremalReport estimate_M(const PoleParam& pp, const SearchOptions& opts);
ExtremalReport estimate_M(const PoleParam& pp, int grid, int refine_iters, std::uint64_t seed,
                          Exec exec = Exec::parallel);

// ---- kernels --------------------------------------------------------------

struct GridSpec {
  int angles = 24;
  int moduli = 8;

  std::int64_t per_parameter() const { return static_cast<std::int64_t>(angles) * moduli; }
  std::int64_t size() const { return per_parameter() * per_parameter() * per_parameter(); }
  ParamTriple point(std::int64_t index) const;
  /// False for grid points that duplicate another one: a zero modulus with a
  /// nonzero angle, or parameters following a unimodular one (they no longer
  /// enter Phi_p).
  bool canonical(std::int64_t index) const;
};

struct GridCandidate {
  double value = 0.0;  // |Phi_p| / (18 P^3)
  std::int64_t index = 0;
};

/// Best `keep` grid points ordered by (value desc, index asc).
std::vector<GridCandidate> scan_grid_serial(const PoleParam& pp, const GridSpec& spec, int keep);
std::vector<GridCandidate> scan_grid_parallel(const PoleParam& pp, const GridSpec& spec, int keep);

/// max over |sigma2| <= 1 of |Phi_p| / (18 P^3), attained at `sigma2`.
struct Sigma2Optimum {
  double value = 0.0;
  Complex sigma2{};
  double slope = 0.0;
};
Sigma2Optimum maximize_over_sigma2(const PoleParam& pp, Complex sigma0, Complex sigma1);

/// Minimizes f from x0 with a fixed iteration budget; returns the best vertex
/// and its value. Deterministic.
struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
};
SimplexResult nelder_mead(const std::function<double(std::span<const double>)>& f, std::vector<double> x0,
                          std::span<const double> steps, int iterations);

}  // namespace concave
