#include <doctest.h>

#include <cmath>

#include "concave/coeff_body.hpp"
#include "concave/hankel.hpp"
#include "concave/sampling.hpp"

using namespace concave;

namespace {

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_SUITE("hankel") {

TEST_CASE("a_from_c") {
  const PoleParam pp(0.5);
  const ACoeffs k = a_from_c(pp, {0.5, 0.0, 0.0});
  CHECK(close(k.a2, 2.0, 1e-14));
  CHECK(close(k.a3, 4.0, 1e-14));
  CHECK(close(k.a4, 8.0, 1e-13));

  const ACoeffs id = a_from_c(pp, {0.0, 1.0, 0.0});
  CHECK(close(id.a2, 2.5, 1e-14));
  CHECK(close(id.a3, 5.25, 1e-14));
  CHECK(close(id.a4, 10.625, 1e-13));
  CHECK(close(id.a3, A_n(pp, 1.0, 3), 1e-13));
  CHECK(close(id.a4, A_n(pp, 1.0, 4), 1e-13));

  const Complex c0(0.3, -0.4);
  CHECK(close(a_from_c(pp, {c0, 0.2, 0.1}).a2, 2.5 - c0, 1e-15));
}

TEST_CASE("hankel2") {
  CHECK(close(hankel2({2.0, 4.0, 8.0}), 0.0, 0.0));
  CHECK(close(hankel2({1.0, 1.0, 1.0}), 0.0, 0.0));
  const PoleParam pp(0.5);
  CHECK(close(hankel2({A_n(pp, 1.0, 2), A_n(pp, 1.0, 3), A_n(pp, 1.0, 4)}), -1.0, 1e-12));
}

TEST_CASE("phi_p") {
  const PoleParam pp(0.5);
  const double P = pp.P();
  const Complex s(0.3, 0.6);
  CHECK(close(phi_p(pp, {s, 0.0, 0.0}), -18.0 * P * (1.0 + (P * P - 2.0) * s + s * s), 1e-12));
  CHECK(close(phi_p(pp, {-0.25, 0.0, 0.0}), 0.0, 1e-13));
  CHECK(close(phi_p(pp, {0.0, 0.0, 0.0}) / (18.0 * P * P * P), -0.16, 1e-15));
}

TEST_CASE("phi_p is affine in sigma2") {
  const PoleParam pp(0.3);
  const Complex s0(0.2, -0.5), s1(-0.6, 0.1);
  const AffineInSigma2 aff = phi_p_affine(pp, s0, s1);
  for (const Complex s2 : {Complex(0.0), Complex(1.0), Complex(0.3, 0.8)})
    CHECK(close(phi_p(pp, {s0, s1, s2}), aff.base + aff.slope * s2, 1e-11));
}

TEST_CASE("phi_p equals 18 P^3 H along the chains") {
  for (double p : {0.2, 0.5, 0.8}) {
    const PoleParam pp(p);
    const double P3 = 18.0 * pp.P() * pp.P() * pp.P();
    for (std::uint64_t i = 0; i < 200; ++i) {
      Rng rng(9, family_key("phi-test"), i);
      const ParamTriple w = rng.polydisk();
      const Complex lhs = phi_p(pp, sigma_from_w(pp, w)) / P3;
      const Complex rhs = hankel18_from_c(pp, c_from_w(pp, w)) / 18.0;
      CHECK(close(lhs, rhs, 1e-10));
    }
  }
}

TEST_CASE("F family") {
  const PoleParam pp(0.5);
  for (const Complex zeta : {Complex(0.0), Complex(0.4, -0.3), Complex(-1.0), std::polar(1.0, 1.3)}) {
    CHECK(close(A_n(pp, zeta, 1), 1.0, 1e-15));
    const Complex direct = hankel2({A_n(pp, zeta, 2), A_n(pp, zeta, 3), A_n(pp, zeta, 4)});
    CHECK(close(direct, H_F(pp, zeta), 1e-12));
  }
  CHECK(close(A_n(pp, 1.0, 2), 2.5, 1e-15));
  CHECK(close(H_F(pp, 0.0), 0.0, 0.0));
  CHECK(close(H_F(pp, 1.0), -1.0, 1e-15));
  CHECK(close(koebe(0.5), 2.0, 1e-15));
}

TEST_CASE("aw_disk") {
  const PoleParam pp(0.5);
  const DiskRegion d = aw_disk(pp, 2);
  CHECK(close(d.center, 2.1, 1e-15));
  CHECK(d.radius == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(std::abs(std::abs(A_n(pp, 1.0, 2) - d.center) - d.radius) < 1e-14);
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng(10, family_key("aw-test"), i);
    const Complex zeta = rng.disk();
    for (int n = 2; n <= 5; ++n) CHECK(aw_disk(pp, n).contains(A_n(pp, zeta, n), 1e-12));
    const Complex u = rng.unit_circle();
    for (int n = 2; n <= 5; ++n) {
      const DiskRegion dn = aw_disk(pp, n);
      CHECK(std::abs(std::abs(A_n(pp, u, n) - dn.center) - dn.radius) < 1e-12 * std::max(1.0, std::abs(dn.center)));
    }
  }
}

TEST_CASE("omega_map") {
  const PoleParam pp(0.5);
  for (double p : {0.1, 0.5, 0.9}) CHECK(close(omega_map(PoleParam(p), 1.0), -1.0, 1e-15));
  CHECK(close(omega_map(pp, -1.0), 0.36, 1e-15));
  CHECK(close(omega_map(pp, 0.0), -0.16, 1e-16));
  // f_t(z) = Phi_p(z, 0, 0) / (18 P^3)
  for (int k = 0; k < 16; ++k) {
    const Complex z = std::polar(0.9, 0.4 * k);
    CHECK(close(omega_map(pp, z), phi_p(pp, {z, 0.0, 0.0}) / (18.0 * std::pow(pp.P(), 3)), 1e-14));
  }
}

TEST_CASE("h_p") {
  for (double p : {0.1, 0.37, 0.5, 0.93}) {
    const PoleParam pp(p);
    const double P = pp.P();
    CHECK(std::abs(h_p(pp, 1.0) - 1.0) < 1e-12);
    CHECK(std::abs(h_p_prime(pp, 1.0) + 2.0 * (P - 2.0) * (P + 1.0) / (3.0 * P)) < 1e-12);
  }
  CHECK(h_p_prime(PoleParam(0.5), 1.0) == doctest::Approx(-0.4666666666666667));
  const PoleParam pp(0.5);
  for (std::uint64_t i = 0; i < 100; ++i) {
    const double t = Rng(11, family_key("hp-test"), i).uniform();
    CHECK(std::abs(h_p(pp, t) + phi_p(pp, {t, -1.0, 0.0}).real() / (18.0 * std::pow(pp.P(), 3))) < 1e-11);
    const double h = 1e-6;
    CHECK(std::abs((h_p(pp, t + h) - h_p(pp, t - h)) / (2 * h) - h_p_prime(pp, t)) < 1e-6);
  }
}

TEST_CASE("lower_bound_M") {
  for (int k = 1; k <= 9; ++k) {
    const PoleParam pp(0.1 * k);
    const double p = pp.p();
    CHECK(std::abs(lower_bound_M(pp) - (1.0 / (3.0 * p) + p / 3.0 + g_poly(1.0 / pp.P()))) < 1e-11);
  }
  const double m = lower_bound_M(PoleParam(0.5));
  CHECK(m == doctest::Approx(1.0345576).epsilon(1e-7));
  CHECK(m > 1.0);
  for (int i = 1; i < 1000; ++i) {
    const double x = 0.5 * i / 1000.0;
    CHECK(x / 3.0 + g_poly(x) > 0.0);
  }
}

TEST_CASE("B coefficients and the upper bound") {
  for (int k = 1; k <= 9; ++k) {
    const PoleParam pp(0.1 * k);
    const double P = pp.P();
    for (int j = 0; j <= 200; ++j) {
      const BCoeffs b = B_coeffs(pp, j / 200.0);
      CHECK(b.b2 - b.b3 <= 0.0);
    }
    CHECK(G_p(pp, 0.0) == doctest::Approx(6 * P * P * P * P + 12 * P * P * P - 12 * P * P).epsilon(1e-14));
    CHECK(upper_bound_M(pp) == doctest::Approx(G_p(pp, 0.0) / (18 * P * P * P)).epsilon(1e-14));
    CHECK(upper_bound_M(pp) < 1.0 / (3.0 * pp.p()) + 2.0 / 3.0);
  }
  CHECK(upper_bound_M(PoleParam(0.5)) == doctest::Approx(9.25 / 7.5).epsilon(1e-15));
}

}  // TEST_SUITE
