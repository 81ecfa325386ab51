#include "concave/coeff_body.hpp"

#include <cmath>

namespace concave {

CoeffTriple c_from_w(const PoleParam& pp, const ParamTriple& w) {
  const double p = pp.p();
  const double q = 1.0 - p * p;
  const Complex d = 1.0 - p * p * w.x0;
  const double a0 = 1.0 - std::norm(w.x0);
  const double a1 = 1.0 - std::norm(w.x1);

  CoeffTriple c;
  c.c0 = (p - p * w.x0) / d;
  c.c1 = (q * q * w.x0 + p * q * a0 * w.x1) / (d * d);
  // The w2 term enters with a minus sign; this is what psi = z omega([z,p]) produces.
  const Complex bracket = p * q * (1.0 - w.x0) * w.x0 - q * (1.0 + p * p * w.x0) * a0 * w.x1 +
                          p * (std::conj(w.x0) - p * p) * a0 * w.x1 * w.x1 - p * d * a0 * a1 * w.x2;
  c.c2 = q * bracket / (d * d * d);
  return c;
}

CoeffTriple c_from_sigma(const PoleParam& pp, const ParamTriple& sigma) {
  const double P = pp.P();
  const Complex s0 = sigma.x0;
  const Complex s1 = sigma.x1;
  const double a0 = 1.0 - std::norm(s0);
  const double a1 = 1.0 - std::norm(s1);
  const Complex bracket = 1.0 + (P * P - 2.0) * s0 + s0 * s0;

  CoeffTriple c;
  c.c0 = (1.0 - s0) / P;
  c.c1 = bracket / (P * P) + a0 * s1 / P;
  c.c2 = (1.0 - s0) * bracket / (P * P * P) - (P * P - 2.0 + 2.0 * s0) * a0 * s1 / (P * P) +
         a0 * std::conj(s0) * s1 * s1 / P - a0 * a1 * sigma.x2 / P;
  return c;
}

ParamTriple sigma_from_w(const PoleParam& pp, const ParamTriple& w) {
  const double p2 = pp.p() * pp.p();
  const Complex d = 1.0 - p2 * w.x0;
  const Complex rot = std::conj(d) / d;  // |d|^2 / d^2
  return {(w.x0 - p2) / d, rot * w.x1, rot * w.x2};
}

ParamTriple w_from_sigma(const PoleParam& pp, const ParamTriple& sigma) {
  const double p2 = pp.p() * pp.p();
  const Complex w0 = (sigma.x0 + p2) / (1.0 + p2 * sigma.x0);
  const Complex d = 1.0 - p2 * w0;
  const Complex rot = d / std::conj(d);
  return {w0, rot * sigma.x1, rot * sigma.x2};
}

Complex epsilon_factor(const PoleParam& pp, Complex sigma0) {
  const Complex d = 1.0 + pp.p() * pp.p() * sigma0;
  return std::abs(d) / d;
}

TauTriple tau_from_w(const PoleParam& pp, const ParamTriple& w) {
  const double p = pp.p();
  const double q = 1.0 - p * p;
  const double a0 = 1.0 - std::norm(w.x0);
  const double a1 = 1.0 - std::norm(w.x1);
  return {p * w.x0, w.x0 + p * a0 * w.x1 / q,
          a0 / (q * q) * ((1.0 - p * std::conj(w.x0) * w.x1) * w.x1 + p * a1 * w.x2)};
}

TauTriple tau_from_c(const PoleParam& pp, const CoeffTriple& c) {
  const double p = pp.p();
  const Complex d = 1.0 - p * c.c0;
  return {(p - c.c0) / d, c.c1 / (d * d),
          (-d * c.c2 + p * c.c1 * (d - c.c1)) / ((1.0 - p * p) * d * d * d)};
}

CoeffTriple c_from_tau(const PoleParam& pp, const TauTriple& tau) {
  const double p = pp.p();
  const double q = 1.0 - p * p;
  const Complex d = 1.0 - p * tau.t0;
  return {(p - tau.t0) / d, q * q * tau.t1 / (d * d),
          (-q * q * q * d * tau.t2 + p * q * q * tau.t1 * (d - tau.t1 + p * p * tau.t1)) / (d * d * d)};
}

namespace {

double max_gap(const CoeffTriple& a, const CoeffTriple& b) {
  return std::max({std::abs(a.c0 - b.c0), std::abs(a.c1 - b.c1), std::abs(a.c2 - b.c2)});
}

// The chain stopped on the unit circle: the remaining parameters are
// unidentifiable, so c must coincide with the canonical map.
Membership settle_boundary(const PoleParam& pp, const CoeffTriple& c, const ParamTriple& w) {
  if (max_gap(c, c_from_w(pp, w)) <= kBoundaryConsistencyTol) return {BodyPosition::boundary, w};
  return {BodyPosition::outside, w};
}

}  // namespace

Membership membership_x2(const PoleParam& pp, const CoeffTriple& c, double tol) {
  const double p = pp.p();
  const double q = 1.0 - p * p;
  if (!(std::abs(c.c0) < 1.0)) return {};

  const TauTriple tau = tau_from_c(pp, c);
  ParamTriple w;
  w.x0 = tau.t0 / p;
  const double m0 = std::abs(w.x0);
  if (m0 > 1.0 + tol) return {BodyPosition::outside, w};
  if (m0 >= 1.0 - tol) return settle_boundary(pp, c, {w.x0 / m0, 0.0, 0.0});

  const double a0 = 1.0 - std::norm(w.x0);
  w.x1 = q * (tau.t1 - w.x0) / (p * a0);
  const double m1 = std::abs(w.x1);
  if (m1 > 1.0 + tol) return {BodyPosition::outside, w};
  if (m1 >= 1.0 - tol) return settle_boundary(pp, c, {w.x0, w.x1 / m1, 0.0});

  const double a1 = 1.0 - std::norm(w.x1);
  w.x2 = (q * q * tau.t2 - a0 * (1.0 - p * std::conj(w.x0) * w.x1) * w.x1) / (p * a0 * a1);
  const double m2 = std::abs(w.x2);
  if (m2 > 1.0 + tol) return {BodyPosition::outside, w};
  if (m2 >= 1.0 - tol) return {BodyPosition::boundary, w};
  return {BodyPosition::inside, w};
}

Complex PhiMap::operator()(Complex z) const {
  const Complex inner = (p_ - z) / (1.0 - p_ * z);
  const Complex mid = psi_(inner);
  return (p_ - mid) / (1.0 - p_ * mid);
}

TruncatedSeries phi_series_from_w(const PoleParam& pp, const ParamTriple& w, std::size_t n_terms,
                                  double radius, std::size_t n_samples) {
  const PhiMap phi(pp, w);
  return taylor_from_samples([&phi](Complex z) { return phi(z); }, radius, n_terms, n_samples);
}

}  // namespace concave
