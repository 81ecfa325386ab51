#pragma once

// Independent reconstruction of f from phi through
//   f'(z) = p^2 / ((z-p)^2 (1-pz)^2) * exp( int_0^z -2 phi(t) / (1 - t phi(t)) dt ),
// and a batch verifier over every invariant family of the library.

#include <cstdint>
#include <string>
#include <vector>

#include "concave/coeff_body.hpp"
#include "concave/exec.hpp"
#include "concave/hankel.hpp"
#include "concave/series.hpp"

namespace concave {

inline constexpr std::size_t kOracleOrder = 8;

/// Series of f' about 0 at the order of phi; the constant term is 1.
TruncatedSeries fprime_series(const PoleParam& pp, const TruncatedSeries& phi);

/// (a2, a3, a4) of f = int f'. Requires order(phi) >= 3.
ACoeffs a_from_phi(const PoleParam& pp, const TruncatedSeries& phi);

/// Pointwise f'(z) for |z| < p; the exponent integral uses Gauss-Legendre
/// quadrature along [0, z].
class FPrimeEvaluator {
 public:
  FPrimeEvaluator(const PoleParam& pp, ComplexFn phi) : p_(pp.p()), phi_(std::move(phi)) {}
  Complex operator()(Complex z) const;

 private:
  double p_;
  ComplexFn phi_;
};

/// H computed three ways from the same w: through sigma and Phi_p, through
/// c_from_w and the a-map, and through the series of phi and f'.
struct HankelRoutes {
  Complex via_sigma{};
  Complex via_w{};
  Complex via_series{};

  double max_disagreement() const;
};
HankelRoutes hankel_routes(const PoleParam& pp, const ParamTriple& w, const PhiTranscription& tr = {});

struct Transcriptions {
  PhiTranscription phi;
  HpTranscription hp;
};

struct VerifyFamily {
  std::string name;
  std::int64_t samples = 0;
  double worst_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<double> p_values;
  std::uint64_t seed = 0;
  std::int64_t n_random = 0;
  std::vector<VerifyFamily> families;

  bool pass() const;
  const VerifyFamily* find(const std::string& name) const;
};

/// Runs every invariant family for each p; families are reported in a fixed
/// order with the worst residual across all p.
VerifyReport verify_all(const std::vector<double>& p_values, std::int64_t n_random, std::uint64_t seed,
                        Exec exec = Exec::parallel, const Transcriptions& tr = {});

}  // namespace concave
