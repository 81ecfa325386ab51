#include "concave/moebius.hpp"

#include <cmath>

#include "concave/errors.hpp"

namespace concave {

PoleParam::PoleParam(double p) : p_(p), P_(0.0) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidInput("pole parameter p must lie in (0,1)");
  P_ = p + 1.0 / p;
}

Complex pseudo_hyperbolic(Complex z, Complex w) {
  const Complex den = 1.0 - std::conj(w) * z;
  if (std::abs(den) <= kMoebiusEpsilon) throw DegenerateDenominator();
  return (z - w) / den;
}

Complex mobius_T(Complex a, Complex z) {
  const Complex den = 1.0 - std::conj(a) * z;
  if (std::abs(den) <= kMoebiusEpsilon) throw DegenerateDenominator();
  return (a - z) / den;
}

Complex rho_eval(const PoleParam& pp, Complex zeta, Complex z) {
  const double p = pp.p();
  const Complex num = (zeta - p * p) * z + (1.0 - zeta) * p;
  const Complex den = -(1.0 - zeta) * p * z + 1.0 - p * p * zeta;
  return num / den;
}

TruncatedSeries rho_coeffs(const PoleParam& pp, Complex zeta, std::size_t n_terms) {
  if (n_terms == 0) throw InvalidInput("rho_coeffs: n_terms must be positive");
  const double p = pp.p();
  const double q = 1.0 - p * p;
  const Complex den = 1.0 - p * p * zeta;
  TruncatedSeries out(n_terms - 1);
  out[0] = (1.0 - zeta) * p / den;
  // alpha_k = zeta (1-p^2)^2 ((1-zeta) p)^{k-1} / den^{k+1}
  Complex term = zeta * q * q / (den * den);
  const Complex ratio = (1.0 - zeta) * p / den;
  for (std::size_t k = 1; k < n_terms; ++k) {
    out[k] = term;
    term *= ratio;
  }
  return out;
}

DiskRegion dieudonne_disk1(Complex z0, Complex tau0) {
  const double r0 = std::abs(z0);
  const double t0 = std::abs(tau0);
  if (!(r0 > 0.0 && r0 < 1.0)) throw InvalidInput("dieudonne_disk1: need 0 < |z0| < 1");
  if (t0 > r0) throw InvalidInput("dieudonne_disk1: need |tau0| <= |z0|");
  return {tau0 / z0, (r0 * r0 - t0 * t0) / (r0 * (1.0 - r0 * r0))};
}

namespace {

void check_second_order(Complex z0, Complex tau0) {
  const double r0 = std::abs(z0);
  if (!(r0 > 0.0 && r0 < 1.0)) throw InvalidInput("dieudonne2: need 0 < |z0| < 1");
  if (!(std::abs(tau0) < r0)) throw InvalidInput("dieudonne2: need |tau0| < |z0|");
}

}  // namespace

double dieudonne2_lhs(Complex z0, Complex tau0, Complex tau1, Complex tau2) {
  check_second_order(z0, tau0);
  const double r2 = std::norm(z0);
  const double gap = r2 - std::norm(tau0);
  const Complex d = tau1 - tau0 / z0;
  const Complex inner = tau2 - d / (z0 * (1.0 - r2)) + std::conj(tau0) * d * d / gap;
  return std::abs(inner) + std::abs(z0) * std::norm(d) / gap;
}

double dieudonne2_rhs(Complex z0, Complex tau0) {
  check_second_order(z0, tau0);
  const double r2 = std::norm(z0);
  return std::abs(z0) * (1.0 - std::norm(tau0 / z0)) / ((1.0 - r2) * (1.0 - r2));
}

Complex BlaschkePsi::operator()(Complex z) const {
  // Written out rather than via pseudo_hyperbolic: with |w0| = 1 the last
  // factor is the constant w0 and its denominator may vanish only on |z| = 1.
  const Complex u = (z - p_) / (1.0 - p_ * z);
  const Complex v = (w_.x2 * u + w_.x1) / (1.0 + std::conj(w_.x1) * w_.x2 * u);
  const Complex uv = u * v;
  return z * (uv + w_.x0) / (1.0 + std::conj(w_.x0) * uv);
}

TruncatedSeries BlaschkePsi::series_at_pole(std::size_t order) const {
  const auto h = TruncatedSeries::identity(order);
  // [p + h, p] = h / ((1 - p^2) - p h)
  TruncatedSeries den = TruncatedSeries::constant(1.0 - p_ * p_, order);
  if (order >= 1) den[1] = -p_;
  const TruncatedSeries u = series_mul(h, series_reciprocal(den));
  const TruncatedSeries v =
      series_mul(w_.x1 + w_.x2 * u, series_reciprocal(1.0 + (std::conj(w_.x1) * w_.x2) * u));
  const TruncatedSeries uv = series_mul(u, v);
  const TruncatedSeries omega = series_mul(w_.x0 + uv, series_reciprocal(1.0 + std::conj(w_.x0) * uv));
  return series_mul(Complex(p_) + h, omega);
}

TauTriple BlaschkePsi::taus() const {
  const TruncatedSeries s = series_at_pole(2);
  return {s[0], s[1], s[2]};
}

TauTriple finite_difference_taus(const ComplexFn& f, Complex z0, double step) {
  const Complex fp = f(z0 + step);
  const Complex fm = f(z0 - step);
  const Complex f0 = f(z0);
  return {f0, (fp - fm) / (2.0 * step), (fp - 2.0 * f0 + fm) / (2.0 * step * step)};
}

}  // namespace concave
