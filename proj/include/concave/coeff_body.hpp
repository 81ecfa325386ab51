#pragma once

// Order-2 coefficient body of the self-maps of the disk fixing p: the
// w-parametrization, the sigma-parametrization, the change of variables
// between them, and membership by inverting the Schwarz/Dieudonne chain.

#include <cstddef>

#include "concave/moebius.hpp"
#include "concave/series.hpp"
#include "concave/types.hpp"

namespace concave {

/// Decision tolerance on the moduli |w_i| recovered by membership_x2.
inline constexpr double kMembershipTol = 1e-9;
/// Agreement required between c and the canonical boundary map once the
/// chain terminates on the unit circle.
inline constexpr double kBoundaryConsistencyTol = 1e-8;

CoeffTriple c_from_w(const PoleParam& pp, const ParamTriple& w);
CoeffTriple c_from_sigma(const PoleParam& pp, const ParamTriple& sigma);

/// sigma0 = [w0, p^2], sigma_j = (|1 - p^2 w0|^2 / (1 - p^2 w0)^2) w_j.
ParamTriple sigma_from_w(const PoleParam& pp, const ParamTriple& w);
ParamTriple w_from_sigma(const PoleParam& pp, const ParamTriple& sigma);

/// |1 + p^2 sigma0| / (1 + p^2 sigma0); unimodular on the closed disk.
Complex epsilon_factor(const PoleParam& pp, Complex sigma0);

TauTriple tau_from_w(const PoleParam& pp, const ParamTriple& w);
/// Taylor data of psi = T_p o phi o T_p at p from that of phi at 0, and back.
TauTriple tau_from_c(const PoleParam& pp, const CoeffTriple& c);
CoeffTriple c_from_tau(const PoleParam& pp, const TauTriple& tau);

enum class BodyPosition { inside, boundary, outside };

struct Membership {
  BodyPosition position = BodyPosition::outside;
  /// Recovered parameters; entries after a unimodular one are reported as 0.
  /// Only meaningful unless position == outside.
  ParamTriple w;
};

Membership membership_x2(const PoleParam& pp, const CoeffTriple& c, double tol = kMembershipTol);

/// phi = T_p o psi o T_p with psi = blaschke_psi(pp, w); phi(p) = p.
class PhiMap {
 public:
  PhiMap(const PoleParam& pp, const ParamTriple& w) : p_(pp.p()), psi_(pp, w) {}
  Complex operator()(Complex z) const;

 private:
  double p_;
  BlaschkePsi psi_;
};

/// phi is analytic on the whole disk, so the default circle is |z| = 1/2.
inline constexpr double kPhiSampleRadius = 0.5;
inline constexpr std::size_t kOracleSamples = 256;

/// Taylor series of PhiMap about 0 with n_terms coefficients.
TruncatedSeries phi_series_from_w(const PoleParam& pp, const ParamTriple& w, std::size_t n_terms,
                                  double radius = kPhiSampleRadius,
                                  std::size_t n_samples = kOracleSamples);

}  // namespace concave
