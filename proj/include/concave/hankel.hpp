#pragma once

// Closed-form functionals: the coefficient map c -> (a2,a3,a4), the second
// Hankel determinant, Phi_p, the extremal family F_zeta, the region Omega_p,
// and the polynomials bounding M(p) = sup |a2 a4 - a3^2|.

#include <array>

#include "concave/moebius.hpp"
#include "concave/types.hpp"

namespace concave {

struct ACoeffs {
  Complex a2{};
  Complex a3{};
  Complex a4{};
};

ACoeffs a_from_c(const PoleParam& pp, const CoeffTriple& c);

/// a2 a4 - a3^2.
Complex hankel2(const ACoeffs& a);

/// 18 H written directly in c0, c1, c2.
Complex hankel18_from_c(const PoleParam& pp, const CoeffTriple& c);

/// Numeric constants of Phi_p in order of appearance:
///
///   k0 P [k1 + (k2 P^2 + k3) s0 + k4 s0^2]
/// + k5 [k6 + k7 P^2 + k8 P^4 + (k9 P^2 + k10) s0 + k11 s0^2] (1-|s0|^2) s1
/// + k12 P [k13 (1-|s0|^2) + k14 conj(s0) (k15 P^2 + k16 + k17 s0)] (1-|s0|^2) s1^2
/// + k18 P (k19 P^2 + k20 + k21 s0) (1-|s0|^2) (1-|s1|^2) s2
///
/// Kept as data so that the transcription can be perturbed in tests.
struct PhiTranscription {
  std::array<double, 22> k{-18, 1, 1, -2, 1,               //
                           3,   1, -7, 2, 3, -2, 1,        //
                           -1,  2, 3, 1, -1, 1,            //
                           3,   1, -1, 1};
};

/// Phi_p(sigma) = 18 P^3 H(f) for the concave function generated by sigma.
Complex phi_p(const PoleParam& pp, const ParamTriple& sigma, const PhiTranscription& tr = {});

/// Phi_p is affine in sigma2: Phi_p = base + slope * sigma2.
struct AffineInSigma2 {
  Complex base{};
  Complex slope{};
};
AffineInSigma2 phi_p_affine(const PoleParam& pp, Complex sigma0, Complex sigma1,
                            const PhiTranscription& tr = {});

/// Taylor coefficient A_n(zeta) of F_zeta.
Complex A_n(const PoleParam& pp, Complex zeta, int n);
/// H(F_zeta) = -(1-p^2)^2 zeta / (1 - p^2 zeta)^2.
Complex H_F(const PoleParam& pp, Complex zeta);
/// z / (1 - z)^2.
Complex koebe(Complex z);

/// {a_n(f)} over the concave class, n >= 2.
DiskRegion aw_disk(const PoleParam& pp, int n);

/// -P^{-2} [1 + (P^2 - 2) z + z^2]; Omega_p is the image of the closed disk.
Complex omega_map(const PoleParam& pp, Complex z);

/// 18 P^3 h_p(t) = sum_{i,j} m[i][j] P^j t^i, i = power of t, j = power of P.
struct HpTranscription {
  std::array<std::array<double, 5>, 5> m{{
      {3, 20, -21, 0, 6},   // t^0
      {-6, -39, 9, 21, 0},  // t^1
      {0, 17, 21, 0, -6},   // t^2
      {6, 3, -9, -3, 0},    // t^3
      {-3, -1, 0, 0, 0},    // t^4
  }};
};

/// -Phi_p(t, -1, 0) / (18 P^3) as a quartic in t.
double h_p(const PoleParam& pp, double t, const HpTranscription& tr = {});
double h_p_prime(const PoleParam& pp, double t);

/// Degree-7 correction in h_p(7/(4P)) = P/3 + g(1/P).
double g_poly(double x);

/// h_p(7/(4P)).
double lower_bound_M(const PoleParam& pp, const HpTranscription& tr = {});

struct BCoeffs {
  double b0 = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  double b3 = 0.0;
};

/// Moduli bounds of the four lines of Phi_p at |sigma0| = y.
BCoeffs B_coeffs(const PoleParam& pp, double y);
/// B0 + B1 + B3 expanded in t = 1 - y.
double B_sum_in_t(const PoleParam& pp, double t);
double G_p(const PoleParam& pp, double t);
/// (P^2 + 2P - 2) / (3P) = G_p(0) / (18 P^3).
double upper_bound_M(const PoleParam& pp);

}  // namespace concave
