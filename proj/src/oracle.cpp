#include "concave/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>

#include <boost/math/quadrature/gauss.hpp>

#include "concave/errors.hpp"
#include "concave/sampling.hpp"

namespace concave {

TruncatedSeries fprime_series(const PoleParam& pp, const TruncatedSeries& phi) {
  const double p = pp.p();
  const std::size_t n = phi.order();

  // p^2 / ((z-p)^2 (1-pz)^2) = 1 / ((1 - z/p)^2 (1 - pz)^2)
  TruncatedSeries a = TruncatedSeries::constant(1.0, n);
  TruncatedSeries b = TruncatedSeries::constant(1.0, n);
  if (n >= 1) {
    a[1] = -1.0 / p;
    b[1] = -p;
  }
  const TruncatedSeries ab = series_mul(a, b);
  const TruncatedSeries prefactor = series_reciprocal(series_mul(ab, ab));

  const TruncatedSeries integrand = Complex(-2.0) * series_mul(phi, series_reciprocal(Complex(1.0) + (-phi.times_z())));
  const TruncatedSeries exponent = series_integrate(integrand).truncated(n);
  return series_mul(prefactor, series_exp(exponent));
}

ACoeffs a_from_phi(const PoleParam& pp, const TruncatedSeries& phi) {
  if (phi.order() < 3) throw InvalidInput("a_from_phi: phi must have order >= 3");
  const TruncatedSeries f = series_integrate(fprime_series(pp, phi));
  return {f[2], f[3], f[4]};
}

Complex FPrimeEvaluator::operator()(Complex z) const {
  using Rule = boost::math::quadrature::gauss<double, 20>;
  static const auto& nodes = Rule::abscissa();
  static const auto& weights = Rule::weights();
  auto integrand = [&](double s) {
    const Complex t = s * z;
    const Complex ph = phi_(t);
    return -2.0 * ph / (1.0 - t * ph);
  };
  // int_0^1 g(s) ds with s = (1 + x) / 2; the 20-point rule stores x > 0 only.
  Complex acc = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    acc += weights[i] * (integrand(0.5 * (1.0 + nodes[i])) + integrand(0.5 * (1.0 - nodes[i])));
  const Complex exponent = 0.5 * z * acc;
  const Complex d1 = z - p_;
  const Complex d2 = 1.0 - p_ * z;
  return p_ * p_ / (d1 * d1 * d2 * d2) * std::exp(exponent);
}

double HankelRoutes::max_disagreement() const {
  return std::max({std::abs(via_sigma - via_w), std::abs(via_sigma - via_series), std::abs(via_w - via_series)});
}

HankelRoutes hankel_routes(const PoleParam& pp, const ParamTriple& w, const PhiTranscription& tr) {
  const double P = pp.P();
  HankelRoutes r;
  r.via_sigma = phi_p(pp, sigma_from_w(pp, w), tr) / (18.0 * P * P * P);
  r.via_w = hankel2(a_from_c(pp, c_from_w(pp, w)));
  r.via_series = hankel2(a_from_phi(pp, phi_series_from_w(pp, w, kOracleOrder + 1)));
  return r;
}

bool VerifyReport::pass() const {
  return std::all_of(families.begin(), families.end(), [](const VerifyFamily& f) { return f.pass; });
}

const VerifyFamily* VerifyReport::find(const std::string& name) const {
  for (const auto& f : families)
    if (f.name == name) return &f;
  return nullptr;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Residual = std::function<double(const PoleParam&, Rng&)>;

struct FamilySpec {
  const char* name;
  double tolerance;
  Residual residual;
};

double max_abs(const CoeffTriple& a, const CoeffTriple& b) {
  return std::max({std::abs(a.c0 - b.c0), std::abs(a.c1 - b.c1), std::abs(a.c2 - b.c2)});
}

double max_abs(const TauTriple& a, const TauTriple& b) {
  return std::max({std::abs(a.t0 - b.t0), std::abs(a.t1 - b.t1), std::abs(a.t2 - b.t2)});
}

double max_abs(const ParamTriple& a, const ParamTriple& b) {
  return std::max({std::abs(a.x0 - b.x0), std::abs(a.x1 - b.x1), std::abs(a.x2 - b.x2)});
}

TruncatedSeries random_series(Rng& rng, std::size_t order, double radius) {
  TruncatedSeries s(order);
  for (std::size_t k = 0; k <= order; ++k) s[k] = rng.disk(radius);
  return s;
}

double cube(double x) { return x * x * x; }

std::vector<FamilySpec> build_families(const Transcriptions& tr) {
  std::vector<FamilySpec> fam;

  fam.push_back({"series.reciprocal", 1e-12, [](const PoleParam&, Rng& rng) {
                   TruncatedSeries a = random_series(rng, kOracleOrder, 1.0);
                   const double m0 = std::pow(10.0, rng.uniform(-1.0, 1.0));
                   a[0] = std::polar(m0, rng.uniform(0.0, 6.283185307179586));
                   for (std::size_t k = 1; k <= a.order(); ++k) a[k] *= 0.5 * m0;
                   const TruncatedSeries one = series_mul(a, series_reciprocal(a));
                   double r = std::abs(one[0] - 1.0);
                   for (std::size_t k = 1; k <= one.order(); ++k) r = std::max(r, std::abs(one[k]));
                   return r;
                 }});

  fam.push_back({"series.exp_derivative", 1e-10, [](const PoleParam&, Rng& rng) {
                   const TruncatedSeries d = random_series(rng, kOracleOrder, 1.0);
                   const TruncatedSeries e = series_exp(series_integrate(d));
                   const TruncatedSeries lhs = e.derivative();
                   const TruncatedSeries rhs = series_mul(e, d);
                   double r = 0.0;
                   for (std::size_t k = 0; k <= lhs.order(); ++k) r = std::max(r, std::abs(lhs[k] - rhs[k]));
                   return r;
                 }});

  fam.push_back({"series.taylor_polynomial", 1e-11, [](const PoleParam&, Rng& rng) {
                   const TruncatedSeries poly = random_series(rng, kOracleOrder, 1.0);
                   const double radius = rng.uniform(0.3, 1.0);
                   const TruncatedSeries got = taylor_from_samples(
                       [&poly](Complex z) { return poly.evaluate(z); }, radius, kOracleOrder + 1, 4 * (kOracleOrder + 1));
                   double r = 0.0;
                   for (std::size_t k = 0; k <= poly.order(); ++k) r = std::max(r, std::abs(got[k] - poly[k]));
                   return r;
                 }});

  fam.push_back({"moebius.involution", 1e-12, [](const PoleParam&, Rng& rng) {
                   const Complex a = rng.disk(0.999);
                   const Complex z = rng.disk(0.999);
                   return std::abs(mobius_T(a, mobius_T(a, z)) - z);
                 }});

  fam.push_back({"moebius.rho_vs_dft", 1e-9, [](const PoleParam& pp, Rng& rng) {
                   const Complex zeta = rng.disk_with_boundary();
                   const TruncatedSeries closed = rho_coeffs(pp, zeta, 6);
                   const TruncatedSeries dft = taylor_from_samples(
                       [&](Complex z) { return rho_eval(pp, zeta, z); }, pp.p() / 2.0, 6, kOracleSamples);
                   double r = 0.0;
                   for (std::size_t k = 0; k < 6; ++k) r = std::max(r, std::abs(closed[k] - dft[k]));
                   return r;
                 }});

  fam.push_back({"moebius.dieudonne_first_order", 1e-8, [](const PoleParam& pp, Rng& rng) {
                   const TauTriple t = blaschke_psi(pp, rng.polydisk()).taus();
                   Complex t0 = t.t0;
                   if (std::abs(t0) > pp.p() * (1.0 + 1e-12)) return kInf;
                   if (std::abs(t0) > pp.p()) t0 *= pp.p() / std::abs(t0);
                   const DiskRegion disk = dieudonne_disk1(pp.p(), t0);
                   return std::max(0.0, std::abs(t.t1 - disk.center) - disk.radius);
                 }});

  fam.push_back({"moebius.dieudonne_second_order", 1e-8, [](const PoleParam& pp, Rng& rng) {
                   const TauTriple t = blaschke_psi(pp, rng.polydisk()).taus();
                   if (std::abs(t.t0) >= pp.p() * (1.0 - 1e-9)) return 0.0;  // rotation conjugates only
                   return std::max(0.0, dieudonne2_lhs(pp.p(), t.t0, t.t1, t.t2) - dieudonne2_rhs(pp.p(), t.t0));
                 }});

  fam.push_back({"moebius.dieudonne_equality", 1e-8, [](const PoleParam& pp, Rng& rng) {
                   const ParamTriple w{rng.disk(0.95), rng.disk(0.95), rng.unit_circle()};
                   const TauTriple t = blaschke_psi(pp, w).taus();
                   return std::abs(dieudonne2_lhs(pp.p(), t.t0, t.t1, t.t2) - dieudonne2_rhs(pp.p(), t.t0));
                 }});

  fam.push_back({"moebius.tau_finite_difference", 1e-5, [](const PoleParam& pp, Rng& rng) {
                   const BlaschkePsi psi = blaschke_psi(pp, rng.polydisk());
                   return max_abs(psi.taus(), finite_difference_taus([&psi](Complex z) { return psi(z); }, pp.p()));
                 }});

  fam.push_back({"coeff_body.tau_closed_form", 1e-10, [](const PoleParam& pp, Rng& rng) {
                   const ParamTriple w = rng.polydisk();
                   return max_abs(blaschke_psi(pp, w).taus(), tau_from_w(pp, w));
                 }});

  fam.push_back({"coeff_body.tau_to_c", 1e-11, [](const PoleParam& pp, Rng& rng) {
                   const ParamTriple w = rng.polydisk();
                   return max_abs(c_from_tau(pp, tau_from_w(pp, w)), c_from_w(pp, w));
                 }});

  fam.push_back({"coeff_body.chain_equivalence", 1e-11, [](const PoleParam& pp, Rng& rng) {
                   const ParamTriple w = rng.polydisk();
                   return max_abs(c_from_w(pp, w), c_from_sigma(pp, sigma_from_w(pp, w)));
                 }});

  fam.push_back({"coeff_body.sigma_round_trip", 1e-13, [](const PoleParam& pp, Rng& rng) {
                   const ParamTriple w = rng.polydisk();
                   return max_abs(w_from_sigma(pp, sigma_from_w(pp, w)), w);
                 }});

  fam.push_back({"coeff_body.fixed_point", 1e-12, [](const PoleParam& pp, Rng& rng) {
                   return std::abs(PhiMap(pp, rng.polydisk())(pp.p()) - pp.p());
                 }});

  fam.push_back({"coeff_body.self_map", 1e-12, [](const PoleParam& pp, Rng& rng) {
                   const PhiMap phi(pp, rng.polydisk());
                   return std::max(0.0, std::abs(phi(rng.disk_with_boundary(0.5))) - 1.0);
                 }});

  fam.push_back({"coeff_body.membership_round_trip", 1e-9, [](const PoleParam& pp, Rng& rng) {
                   const ParamTriple w{rng.disk(0.99), rng.disk(0.99), rng.disk(0.99)};
                   const Membership m = membership_x2(pp, c_from_w(pp, w));
                   if (m.position != BodyPosition::inside) return kInf;
                   return max_abs(m.w, w);
                 }});

  fam.push_back({"coeff_body.series_oracle", 1e-8, [](const PoleParam& pp, Rng& rng) {
                   const ParamTriple w = rng.polydisk();
                   const TruncatedSeries s = phi_series_from_w(pp, w, 3);
                   return max_abs(CoeffTriple{s[0], s[1], s[2]}, c_from_w(pp, w));
                 }});

  fam.push_back({"hankel.phi_consistency", 1e-10, [tr](const PoleParam& pp, Rng& rng) {
                   const ParamTriple s = rng.polydisk();
                   const Complex h = hankel2(a_from_c(pp, c_from_sigma(pp, s)));
                   const Complex phi = phi_p(pp, s, tr.phi) / (18.0 * cube(pp.P()));
                   return std::abs(h - phi) / std::max(1.0, std::abs(h));
                 }});

  fam.push_back({"hankel.eq_H", 1e-10, [](const PoleParam& pp, Rng& rng) {
                   const CoeffTriple c = c_from_sigma(pp, rng.polydisk());
                   const Complex h18 = 18.0 * hankel2(a_from_c(pp, c));
                   return std::abs(h18 - hankel18_from_c(pp, c)) / std::max(1.0, std::abs(h18));
                 }});

  fam.push_back({"hankel.F_closed_form", 1e-12, [](const PoleParam& pp, Rng& rng) {
                   const Complex zeta = rng.disk_with_boundary();
                   const double p = pp.p();
                   const Complex direct = hankel2({A_n(pp, zeta, 2), A_n(pp, zeta, 3), A_n(pp, zeta, 4)});
                   const Complex koebe_form = -(1.0 - p * p) * (1.0 - p * p) / (p * p) * koebe(p * p * zeta);
                   return std::max(std::abs(direct - H_F(pp, zeta)), std::abs(koebe_form - H_F(pp, zeta)));
                 }});

  fam.push_back({"hankel.aw_disk", 1e-12, [](const PoleParam& pp, Rng& rng) {
                   const bool on_circle = rng.uniform() < 0.5;
                   const Complex zeta = on_circle ? rng.unit_circle() : rng.disk();
                   double r = 0.0;
                   for (int n = 2; n <= 4; ++n) {
                     const DiskRegion d = aw_disk(pp, n);
                     const double dist = std::abs(A_n(pp, zeta, n) - d.center);
                     const double miss = on_circle ? std::abs(dist - d.radius) : std::max(0.0, dist - d.radius);
                     r = std::max(r, miss / std::max(1.0, std::abs(d.center)));
                   }
                   return r;
                 }});

  fam.push_back({"hankel.omega_vs_phi", 1e-12, [tr](const PoleParam& pp, Rng& rng) {
                   const Complex s0 = rng.disk_with_boundary();
                   return std::abs(omega_map(pp, s0) - phi_p(pp, {s0, 0.0, 0.0}, tr.phi) / (18.0 * cube(pp.P())));
                 }});

  fam.push_back({"hankel.h_p_vs_phi", 1e-11, [tr](const PoleParam& pp, Rng& rng) {
                   const double t = rng.uniform();
                   return std::abs(h_p(pp, t, tr.hp) + phi_p(pp, {t, -1.0, 0.0}, tr.phi) / (18.0 * cube(pp.P())));
                 }});

  fam.push_back({"hankel.lower_bound_identity", 1e-10, [tr](const PoleParam&, Rng& rng) {
                   const PoleParam q(rng.uniform(0.01, 0.99));
                   const double rhs = 1.0 / (3.0 * q.p()) + q.p() / 3.0 + g_poly(1.0 / q.P());
                   return std::abs(lower_bound_M(q, tr.hp) - rhs);
                 }});

  fam.push_back({"hankel.h_p_anchors", 1e-12, [tr](const PoleParam&, Rng& rng) {
                   const PoleParam q(rng.uniform(0.01, 0.99));
                   const double P = q.P();
                   return std::max(std::abs(h_p(q, 1.0, tr.hp) - 1.0),
                                   std::abs(h_p_prime(q, 1.0) + 2.0 * (P - 2.0) * (P + 1.0) / (3.0 * P)));
                 }});

  fam.push_back({"hankel.h_p_prime_fd", 1e-6, [tr](const PoleParam& pp, Rng& rng) {
                   const double t = rng.uniform(0.01, 0.99);
                   const double h = 1e-5;
                   const double fd = (h_p(pp, t + h, tr.hp) - h_p(pp, t - h, tr.hp)) / (2.0 * h);
                   return std::abs(fd - h_p_prime(pp, t));
                 }});

  fam.push_back({"hankel.lower_bound_positivity", 0.0, [](const PoleParam&, Rng& rng) {
                   const double x = rng.uniform(1e-6, 0.5);
                   return std::max(0.0, -(x / 3.0 + g_poly(x)));
                 }});

  fam.push_back({"hankel.B2_minus_B3", 0.0, [](const PoleParam& pp, Rng& rng) {
                   const BCoeffs b = B_coeffs(pp, rng.uniform());
                   return std::max(0.0, b.b2 - b.b3);
                 }});

  fam.push_back({"hankel.B_sum_and_G", 1e-12, [](const PoleParam& pp, Rng& rng) {
                   const double y = rng.uniform();
                   const BCoeffs b = B_coeffs(pp, y);
                   const double scale = 18.0 * cube(pp.P());
                   const double sum = b.b0 + b.b1 + b.b3;
                   return std::max(std::abs(sum - B_sum_in_t(pp, 1.0 - y)) / scale,
                                   std::max(0.0, sum - G_p(pp, 1.0 - y)) / scale);
                 }});

  fam.push_back({"hankel.upper_bound", 1e-12, [tr](const PoleParam& pp, Rng& rng) {
                   const Complex h = phi_p(pp, rng.polydisk(), tr.phi) / (18.0 * cube(pp.P()));
                   return std::max(0.0, std::abs(h) - upper_bound_M(pp));
                 }});

  fam.push_back({"oracle.fprime_normalization", 1e-12, [](const PoleParam& pp, Rng& rng) {
                   return std::abs(fprime_series(pp, phi_series_from_w(pp, rng.polydisk(), kOracleOrder + 1))[0] - 1.0);
                 }});

  fam.push_back({"oracle.fprime_dft", 1e-7, [](const PoleParam& pp, Rng& rng) {
                   const ParamTriple w = rng.polydisk();
                   const TruncatedSeries series = fprime_series(pp, phi_series_from_w(pp, w, kOracleOrder + 1));
                   const FPrimeEvaluator fprime(pp, PhiMap(pp, w));
                   const TruncatedSeries dft = taylor_from_samples([&fprime](Complex z) { return fprime(z); },
                                                                   pp.p() / 2.0, kOracleOrder + 1, kOracleSamples);
                   double r = 0.0;
                   for (std::size_t k = 0; k <= kOracleOrder; ++k)
                     r = std::max(r, std::abs(series[k] - dft[k]) / std::max(1.0, std::abs(series[k])));
                   return r;
                 }});

  fam.push_back({"oracle.triple_path", 1e-8, [tr](const PoleParam& pp, Rng& rng) {
                   return hankel_routes(pp, rng.polydisk(), tr.phi).max_disagreement();
                 }});

  return fam;
}

}  // namespace

VerifyReport verify_all(const std::vector<double>& p_values, std::int64_t n_random, std::uint64_t seed, Exec exec,
                        const Transcriptions& tr) {
  if (n_random < 1) throw InvalidInput("verify_all: need at least one sample");
  VerifyReport rep;
  rep.p_values = p_values;
  rep.seed = seed;
  rep.n_random = n_random;

  std::vector<PoleParam> poles;
  for (double p : p_values) poles.emplace_back(p);

  for (const FamilySpec& spec : build_families(tr)) {
    VerifyFamily out;
    out.name = spec.name;
    out.tolerance = spec.tolerance;
    const std::uint64_t key = family_key(spec.name);
    for (const PoleParam& pp : poles) {
      const std::uint64_t stream = seed ^ splitmix64(std::bit_cast<std::uint64_t>(pp.p()));
      const double worst = max_over(exec, n_random, [&](std::int64_t i) {
        Rng rng(stream, key, static_cast<std::uint64_t>(i));
        const double r = spec.residual(pp, rng);
        return std::isnan(r) ? kInf : r;
      });
      out.worst_residual = std::max(out.worst_residual, worst);
      out.samples += n_random;
    }
    out.pass = out.worst_residual <= out.tolerance;
    rep.families.push_back(std::move(out));
  }
  return rep;
}

}  // namespace concave
