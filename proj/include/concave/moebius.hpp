#pragma once

// Disk automorphisms, the rotation conjugates rho_zeta fixing p, the first-
// and second-order Dieudonne disks, and the degree <= 3 Blaschke maps that
// realize the coefficient body.

#include <cstddef>

#include "concave/series.hpp"
#include "concave/types.hpp"

namespace concave {

/// Threshold for a vanishing Moebius denominator.
inline constexpr double kMoebiusEpsilon = 1e-15;

/// Pole location p in (0,1) together with P = p + 1/p > 2.
class PoleParam {
 public:
  /// Throws InvalidInput unless 0 < p < 1.
  explicit PoleParam(double p);

  double p() const { return p_; }
  double P() const { return P_; }

 private:
  double p_;
  double P_;
};

/// Closed disk |z - center| <= radius.
struct DiskRegion {
  Complex center{};
  double radius = 0.0;

  bool contains(Complex z, double tol = 0.0) const { return std::abs(z - center) <= radius + tol; }
};

/// [z, w] = (z - w) / (1 - conj(w) z).
Complex pseudo_hyperbolic(Complex z, Complex w);

/// T_a(z) = (a - z) / (1 - conj(a) z) = -[z, a]; an involution swapping 0 and a.
Complex mobius_T(Complex a, Complex z);

/// rho_zeta(z) = T_p(zeta T_p(z)), evaluated in closed form.
Complex rho_eval(const PoleParam& pp, Complex zeta, Complex z);

/// Taylor coefficients alpha_0..alpha_{n_terms-1} of rho_zeta, |zeta| <= 1.
TruncatedSeries rho_coeffs(const PoleParam& pp, Complex zeta, std::size_t n_terms);

/// Region of psi'(z0) over self-maps with psi(0) = 0, psi(z0) = tau0.
DiskRegion dieudonne_disk1(Complex z0, Complex tau0);

/// Left side of the second-order Dieudonne inequality; psi''(z0)/2 = tau2 is
/// attainable iff lhs <= rhs. Both throw InvalidInput unless 0 < |z0| < 1 and
/// |tau0| < |z0|.
double dieudonne2_lhs(Complex z0, Complex tau0, Complex tau1, Complex tau2);
double dieudonne2_rhs(Complex z0, Complex tau0);

/// psi(z) = z * omega([z, p]) with omega(u) = [u [w2 u, -w1], -w0].
/// psi(0) = 0, psi(p) = p w0, and |psi(z)| <= |z| on the closed disk.
class BlaschkePsi {
 public:
  BlaschkePsi(const PoleParam& pp, const ParamTriple& w) : p_(pp.p()), w_(w) {}

  Complex operator()(Complex z) const;

  /// Series of psi(p + h) in powers of h, composed through truncated series.
  TruncatedSeries series_at_pole(std::size_t order) const;

  /// (psi(p), psi'(p), psi''(p)/2) read off series_at_pole.
  TauTriple taus() const;

  const ParamTriple& params() const { return w_; }

 private:
  double p_;
  ParamTriple w_;
};

inline BlaschkePsi blaschke_psi(const PoleParam& pp, const ParamTriple& w) { return BlaschkePsi(pp, w); }

/// Central-difference estimate of (f(z0), f'(z0), f''(z0)/2); spot checks only.
TauTriple finite_difference_taus(const ComplexFn& f, Complex z0, double step = 1e-5);

}  // namespace concave
