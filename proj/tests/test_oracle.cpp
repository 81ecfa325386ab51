#include <doctest.h>

#include "concave/coeff_body.hpp"
#include "concave/errors.hpp"
#include "concave/hankel.hpp"
#include "concave/oracle.hpp"
#include "concave/sampling.hpp"

using namespace concave;

TEST_SUITE("oracle") {

TEST_CASE("fprime_series for the constant map") {
  const PoleParam pp(0.5);
  const auto fp = fprime_series(pp, TruncatedSeries::constant(0.5, 5));
  const double want[] = {1, 4, 12, 32, 80, 192};
  for (std::size_t k = 0; k < 6; ++k) CHECK(std::abs(fp[k] - Complex(want[k])) < 1e-11);
  const ACoeffs a = a_from_phi(pp, phi_series_from_w(pp, {0.0, 0.0, 0.0}, kOracleOrder));
  CHECK(std::abs(a.a2 - Complex(2.0)) < 1e-12);
  CHECK(std::abs(a.a3 - Complex(4.0)) < 1e-12);
  CHECK(std::abs(a.a4 - Complex(8.0)) < 1e-12);
}

TEST_CASE("fprime_series for rho_zeta reproduces F_zeta") {
  const PoleParam pp(0.4);
  for (const Complex zeta : {Complex(1.0), std::polar(1.0, 2.3), Complex(0.2, -0.5)}) {
    const auto fp = fprime_series(pp, rho_coeffs(pp, zeta, kOracleOrder + 1));
    CHECK(std::abs(fp[0] - Complex(1.0)) < 1e-15);
    for (int n = 2; n <= 6; ++n) CHECK(std::abs(fp[n - 1] - double(n) * A_n(pp, zeta, n)) < 1e-9 * std::abs(A_n(pp, zeta, n)) + 1e-12);
  }
}

TEST_CASE("a_from_phi requires order 3") {
  CHECK_THROWS_AS(a_from_phi(PoleParam(0.5), TruncatedSeries::constant(0.5, 2)), InvalidInput);
}

TEST_CASE("FPrimeEvaluator matches the series inside |z| < p") {
  const PoleParam pp(0.6);
  const ParamTriple w{Complex(0.3, 0.2), -0.5, Complex(0.0, 0.8)};
  const FPrimeEvaluator fe(pp, PhiMap(pp, w));
  const auto series = fprime_series(pp, phi_series_from_w(pp, w, 30));
  for (const Complex z : {Complex(0.0), Complex(0.1, 0.05), Complex(-0.12, 0.1)})
    CHECK(std::abs(fe(z) - series.evaluate(z)) < 1e-8);
}

TEST_CASE("three Hankel routes agree") {
  for (double p : {0.2, 0.5, 0.8}) {
    const PoleParam pp(p);
    for (std::uint64_t i = 0; i < 300; ++i) {
      Rng rng(12, family_key("routes-test"), i);
      CHECK(hankel_routes(pp, rng.polydisk()).max_disagreement() < 1e-8);
    }
  }
}

TEST_CASE("verify_all passes on the default p values") {
  const VerifyReport rep = verify_all({0.2, 0.5, 0.8}, 1000, 1);
  for (const auto& f : rep.families) {
    INFO(f.name << " residual " << f.worst_residual);
    CHECK(f.pass);
  }
  REQUIRE(rep.find("hankel.phi_consistency") != nullptr);
  CHECK(rep.find("hankel.phi_consistency")->worst_residual < 1e-10);
  CHECK(rep.find("no.such.family") == nullptr);
}

TEST_CASE("verify_all is deterministic and exec-independent") {
  const VerifyReport a = verify_all({0.3}, 150, 42, Exec::serial);
  const VerifyReport b = verify_all({0.3}, 150, 42, Exec::parallel);
  REQUIRE(a.families.size() == b.families.size());
  for (std::size_t i = 0; i < a.families.size(); ++i) {
    CHECK(a.families[i].name == b.families[i].name);
    CHECK(a.families[i].worst_residual == b.families[i].worst_residual);
  }
  CHECK_THROWS_AS(verify_all({0.3}, 0, 1), InvalidInput);
}

TEST_CASE("a tampered transcription is caught") {
  Transcriptions hp_bad;
  hp_bad.hp.m[2][1] += 1e-3;
  const VerifyReport a = verify_all({0.5}, 200, 1, Exec::parallel, hp_bad);
  CHECK_FALSE(a.pass());
  CHECK_FALSE(a.find("hankel.h_p_vs_phi")->pass);

  Transcriptions phi_bad;
  phi_bad.phi.k[7] += 1e-3;
  const VerifyReport b = verify_all({0.5}, 200, 1, Exec::parallel, phi_bad);
  CHECK_FALSE(b.find("oracle.triple_path")->pass);
}

}  // TEST_SUITE
