#include "concave/hankel.hpp"

#include <cmath>

#include "concave/errors.hpp"

namespace concave {

ACoeffs a_from_c(const PoleParam& pp, const CoeffTriple& c) {
  const double P = pp.P();
  const Complex c0 = c.c0;
  const Complex c1 = c.c1;
  const Complex c2 = c.c2;
  return {P - c0, P * P + (-c1 + c0 * c0 - 4.0 * P * c0 - 2.0) / 3.0,
          P * P * P + (-c2 + c0 * c1 + 6.0 * c0 - 9.0 * P - 9.0 * P * P * c0 + 3.0 * P * c0 * c0 - 3.0 * P * c1) / 6.0};
}

Complex hankel2(const ACoeffs& a) { return a.a2 * a.a4 - a.a3 * a.a3; }

Complex hankel18_from_c(const PoleParam& pp, const CoeffTriple& c) {
  const double P = pp.P();
  const Complex c0 = c.c0;
  const Complex c1 = c.c1;
  return 3.0 * (c0 - P) * c.c2 - 2.0 * c1 * c1 + (c0 * c0 - 4.0 * P * c0 + 3.0 * P * P - 8.0) * c1 -
         (c0 * c0 - P * c0 + 1.0) * (2.0 * c0 * c0 - 5.0 * P * c0 + 3.0 * P * P + 8.0);
}

AffineInSigma2 phi_p_affine(const PoleParam& pp, Complex s0, Complex s1, const PhiTranscription& tr) {
  const auto& k = tr.k;
  const double P = pp.P();
  const double P2 = P * P;
  const double a0 = 1.0 - std::norm(s0);
  const double a1 = 1.0 - std::norm(s1);

  const Complex line0 = k[0] * P * (k[1] + (k[2] * P2 + k[3]) * s0 + k[4] * s0 * s0);
  const Complex line1 = k[5] * (k[6] + k[7] * P2 + k[8] * P2 * P2 + (k[9] * P2 + k[10]) * s0 + k[11] * s0 * s0) * a0 * s1;
  const Complex line2 =
      k[12] * P * (k[13] * a0 + k[14] * std::conj(s0) * (k[15] * P2 + k[16] + k[17] * s0)) * a0 * s1 * s1;
  const Complex slope = k[18] * P * (k[19] * P2 + k[20] + k[21] * s0) * a0 * a1;
  return {line0 + line1 + line2, slope};
}

Complex phi_p(const PoleParam& pp, const ParamTriple& sigma, const PhiTranscription& tr) {
  const auto [base, slope] = phi_p_affine(pp, sigma.x0, sigma.x1, tr);
  return base + slope * sigma.x2;
}

Complex A_n(const PoleParam& pp, Complex zeta, int n) {
  if (n < 1) throw InvalidInput("A_n: n must be >= 1");
  const double p = pp.p();
  return (1.0 - std::pow(p, 2 * n) * zeta) / (std::pow(p, n - 1) * (1.0 - p * p * zeta));
}

Complex H_F(const PoleParam& pp, Complex zeta) {
  const double p = pp.p();
  const double q = 1.0 - p * p;
  const Complex d = 1.0 - p * p * zeta;
  return -q * q * zeta / (d * d);
}

Complex koebe(Complex z) { return z / ((1.0 - z) * (1.0 - z)); }

DiskRegion aw_disk(const PoleParam& pp, int n) {
  if (n < 2) throw InvalidInput("aw_disk: n must be >= 2");
  const double p = pp.p();
  const double den = std::pow(p, n - 1) * (1.0 - std::pow(p, 4));
  return {(1.0 - std::pow(p, 2 * n + 2)) / den, (p * p - std::pow(p, 2 * n)) / den};
}

Complex omega_map(const PoleParam& pp, Complex z) {
  const double t = pp.P() * pp.P();
  return -(1.0 + (t - 2.0) * z + z * z) / t;
}

double h_p(const PoleParam& pp, double t, const HpTranscription& tr) {
  const double P = pp.P();
  double acc = 0.0;
  for (int i = 4; i >= 0; --i) {
    const auto& row = tr.m[i];
    const double coeff = (((row[4] * P + row[3]) * P + row[2]) * P + row[1]) * P + row[0];
    acc = acc * t + coeff;
  }
  return acc / (18.0 * P * P * P);
}

double h_p_prime(const PoleParam& pp, double t) {
  const double P = pp.P();
  const double P2 = P * P;
  const double P3 = P2 * P;
  const double val = -4.0 * (P + 3.0) * t * t * t - 3.0 * (3.0 * P3 + 9.0 * P2 - 3.0 * P - 6.0) * t * t -
                     2.0 * (6.0 * P2 * P2 - 21.0 * P2 - 17.0 * P) * t + 3.0 * (7.0 * P3 + 3.0 * P2 - 13.0 * P - 2.0);
  return val / (18.0 * P3);
}

double g_poly(double x) {
  // -7/48 x + 143/72 x^2 - 121/128 x^3 - 427/1152 x^4 + 343/384 x^5 + 5831/4608 x^6 - 2401/1536 x^7
  constexpr double c[8] = {0.0,           -7.0 / 48.0,   143.0 / 72.0,   -121.0 / 128.0,
                           -427.0 / 1152.0, 343.0 / 384.0, 5831.0 / 4608.0, -2401.0 / 1536.0};
  double acc = 0.0;
  for (int i = 7; i >= 0; --i) acc = acc * x + c[i];
  return acc;
}

double lower_bound_M(const PoleParam& pp, const HpTranscription& tr) {
  return h_p(pp, 7.0 / (4.0 * pp.P()), tr);
}

BCoeffs B_coeffs(const PoleParam& pp, double y) {
  const double P = pp.P();
  const double P2 = P * P;
  const double a = 1.0 - y * y;
  return {18.0 * P * (1.0 + (P2 - 2.0) * y + y * y),
          3.0 * (1.0 - 7.0 * P2 + 2.0 * P2 * P2 + (3.0 * P2 - 2.0) * y + y * y) * a,
          P * (2.0 * a + 3.0 * y * (P2 - 1.0 + y)) * a, 3.0 * P * (P2 - 1.0 + y) * a};
}

double B_sum_in_t(const PoleParam& pp, double t) {
  const double P = pp.P();
  const double P2 = P * P;
  return 18.0 * P2 * P + 6.0 * P2 * (P2 - P - 2.0) * 2.0 * t - 3.0 * P * (2.0 * P2 * P + P2 + 2.0 * P - 4.0) * t * t +
         3.0 * (3.0 * P2 + P + 2.0) * t * t * t - 3.0 * t * t * t * t;
}

double G_p(const PoleParam& pp, double t) {
  const double P = pp.P();
  const double P2 = P * P;
  return 6.0 * (P2 * P2 + 2.0 * P2 * P - 2.0 * P2) + 3.0 * (-3.0 * P2 * P - 6.0 * P2 + 4.0 * P + 1.0) * t * t +
         3.0 * P * (3.0 * P + 1.0) * t * t * t;
}

double upper_bound_M(const PoleParam& pp) {
  const double P = pp.P();
  return (P * P + 2.0 * P - 2.0) / (3.0 * P);
}

}  // namespace concave
