// Acceptance checks: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "concave/coeff_body.hpp"
#include "concave/commands.hpp"
#include "concave/extremal.hpp"
#include "concave/hankel.hpp"
#include "concave/oracle.hpp"
#include "concave/region.hpp"
#include "concave/sampling.hpp"

using namespace concave;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double finite_or_inf(double x) { return std::isnan(x) ? kInf : x; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("criterion %d %-28s %s  %s\n", id, title, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), f, a, b, c);
  return buf;
}

std::vector<double> hundredths() {
  std::vector<double> ps;
  for (int k = 1; k <= 99; ++k) ps.push_back(k / 100.0);
  return ps;
}

// ---- 1 ---------------------------------------------------------------------

void bound_reproduction() {
  bool ok = true;
  double worst_time = 0.0;
  std::string detail;
  for (int k = 1; k <= 9; ++k) {
    const PoleParam pp(k / 10.0);
    const auto t0 = std::chrono::steady_clock::now();
    const ExtremalReport r = estimate_M(pp, SearchOptions{});
    const double dt = seconds_since(t0);
    worst_time = std::max(worst_time, dt);
    const double p = pp.p();
    const bool row = r.m_estimate > 1.0 && r.m_estimate > 1.0 / (3.0 * p) && r.m_estimate <= r.upper + 1e-6 && dt < 60.0;
    if (!row) {
      ok = false;
      detail += fmt("[p=%.1f m=%.9f upper=%.9f] ", p, r.m_estimate, r.upper);
    }
  }
  report(1, "bound reproduction", ok, detail + fmt("slowest p %.2fs", worst_time));
}

// ---- 2, 3 ------------------------------------------------------------------

double lower_identity_residual(const HpTranscription& tr) {
  double worst = 0.0;
  for (double p : hundredths()) {
    const PoleParam pp(p);
    const double rhs = 1.0 / (3.0 * p) + p / 3.0 + g_poly(1.0 / pp.P());
    worst = std::max(worst, finite_or_inf(std::abs(lower_bound_M(pp, tr) - rhs)));
  }
  return worst;
}

void lower_identity() {
  const double r = lower_identity_residual({});
  report(2, "lower-bound identity", r < 1e-10, fmt("worst %.3g over 99 p", r));
}

void anchors() {
  double value = 0.0, slope = 0.0, fd = 0.0;
  for (double p : hundredths()) {
    const PoleParam pp(p);
    const double P = pp.P();
    const double want = -2.0 * (P - 2.0) * (P + 1.0) / (3.0 * P);
    value = std::max(value, std::abs(h_p(pp, 1.0) - 1.0));
    slope = std::max(slope, std::abs(h_p_prime(pp, 1.0) - want));
    const double h = 1e-5;
    fd = std::max(fd, std::abs((h_p(pp, 1.0 + h) - h_p(pp, 1.0 - h)) / (2.0 * h) - want));
  }
  report(3, "h_p anchors", value < 1e-12 && slope < 1e-12 && fd < 1e-6,
         fmt("|h-1| %.3g  |h'-closed| %.3g  finite diff %.3g", value, slope, fd));
}

// ---- 4 and the mutation harness ---------------------------------------------

struct RouteSamples {
  PoleParam pp;
  std::vector<ParamTriple> sigma;
  std::vector<Complex> via_w;
  std::vector<Complex> via_series;
};

constexpr std::int64_t kRouteSamples = 10000;

std::vector<RouteSamples> route_samples() {
  std::vector<RouteSamples> out;
  for (double p : {0.2, 0.5, 0.8}) {
    RouteSamples s{PoleParam(p), {}, {}, {}};
    s.sigma.resize(kRouteSamples);
    s.via_w.resize(kRouteSamples);
    s.via_series.resize(kRouteSamples);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < kRouteSamples; ++i) {
      Rng rng(2024, family_key("acceptance-routes"), static_cast<std::uint64_t>(i) + static_cast<std::uint64_t>(p * 1e6));
      const ParamTriple w = rng.polydisk();
      const HankelRoutes r = hankel_routes(s.pp, w);
      s.sigma[i] = sigma_from_w(s.pp, w);
      s.via_w[i] = r.via_w;
      s.via_series[i] = r.via_series;
    }
    out.push_back(std::move(s));
  }
  return out;
}

double triple_path_residual(const std::vector<RouteSamples>& samples, const PhiTranscription& tr) {
  double worst = 0.0;
  for (const auto& s : samples) {
    const double scale = 18.0 * std::pow(s.pp.P(), 3);
    worst = std::max(worst, max_over(Exec::parallel, kRouteSamples, [&](std::int64_t i) {
                       const Complex via_sigma = phi_p(s.pp, s.sigma[i], tr) / scale;
                       return finite_or_inf(std::max({std::abs(via_sigma - s.via_w[i]),
                                                      std::abs(via_sigma - s.via_series[i]),
                                                      std::abs(s.via_w[i] - s.via_series[i])}));
                     }));
  }
  return worst;
}

void triple_path(const std::vector<RouteSamples>& samples, double build_seconds) {
  const auto t0 = std::chrono::steady_clock::now();
  const double r = triple_path_residual(samples, {});
  const double dt = build_seconds + seconds_since(t0);
  report(4, "triple-path Hankel", r < 1e-8 && dt < 30.0, fmt("worst %.3g on 3x1e4 samples, %.2fs", r, dt));
}

// ---- 5 ---------------------------------------------------------------------

void f_family() {
  double h_err = 0.0, disk_miss = 0.0, rim = 0.0;
  for (double p : {0.2, 0.5, 0.8}) {
    const PoleParam pp(p);
    for (std::uint64_t i = 0; i < 1000; ++i) {
      Rng rng(5, family_key("acceptance-F"), i);
      const Complex zeta = rng.disk();
      const Complex h = hankel2({A_n(pp, zeta, 2), A_n(pp, zeta, 3), A_n(pp, zeta, 4)});
      const Complex closed = -(1.0 - p * p) * (1.0 - p * p) * zeta / ((1.0 - p * p * zeta) * (1.0 - p * p * zeta));
      h_err = std::max(h_err, finite_or_inf(std::abs(h - closed)));
      const Complex u = rng.unit_circle();
      for (int n = 2; n <= 4; ++n) {
        const DiskRegion d = aw_disk(pp, n);
        disk_miss = std::max(disk_miss, std::max(0.0, std::abs(A_n(pp, zeta, n) - d.center) - d.radius));
        rim = std::max(rim, std::abs(std::abs(A_n(pp, u, n) - d.center) - d.radius));
      }
    }
  }
  report(5, "closed-form F family", h_err < 1e-12 && disk_miss < 1e-12 && rim < 1e-12,
         fmt("|H-closed| %.3g  disk miss %.3g  rim %.3g", h_err, disk_miss, rim));
}

// ---- 6 ---------------------------------------------------------------------

std::vector<Complex> limit_curve(bool cardioid) {
  std::vector<Complex> out;
  for (int k = 0; k <= 4096; ++k) {
    const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * k / 4096);
    out.push_back(cardioid ? -(1.0 + z) * (1.0 + z) / 4.0 : -z);
  }
  return out;
}

void omega_monotone() {
  const double ps[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  bool pairs = true;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) pairs = pairs && check_omega_monotone(ps[i], ps[j], 512).holds;
  const double hc = polyline_hausdorff(sample_omega_boundary(PoleParam(0.95), 512).boundary, limit_curve(true));
  const double hu = polyline_hausdorff(sample_omega_boundary(PoleParam(0.05), 512).boundary, limit_curve(false));
  report(6, "Omega_p monotonicity", pairs && hc <= 0.02 && hu <= 0.02,
         std::string(pairs ? "10/10 pairs nested" : "nesting violated") +
             fmt("  Hausdorff cardioid %.4f  circle %.4f", hc, hu));
}

// ---- 7 ---------------------------------------------------------------------

void round_trip() {
  double worst = 0.0;
  int not_inside = 0;
  for (double p : {0.2, 0.5, 0.8}) {
    const PoleParam pp(p);
    for (std::uint64_t i = 0; i < 1000; ++i) {
      Rng rng(7, family_key("acceptance-membership"), i);
      const ParamTriple w{rng.disk(), rng.disk(), rng.disk()};
      const Membership m = membership_x2(pp, c_from_w(pp, w));
      if (m.position != BodyPosition::inside) ++not_inside;
      worst = std::max(worst, finite_or_inf(std::max({std::abs(m.w.x0 - w.x0), std::abs(m.w.x1 - w.x1),
                                                      std::abs(m.w.x2 - w.x2)})));
    }
  }
  // psi(z) = z^2 about z0 = 1/2, Taylor data read off by sampling
  const auto t = taylor_from_samples([](Complex z) { return z * z; }, 0.25, 3, 64, 0.5);
  const double gap = std::abs(dieudonne2_lhs(0.5, t[0], t[1], t[2]) - dieudonne2_rhs(0.5, t[0]));
  report(7, "coefficient-body round trip", worst < 1e-9 && not_inside == 0 && gap < 1e-9,
         fmt("worst %.3g on 3x1e3 samples, %.0f not inside, z^2 gap %.3g", worst, not_inside, gap));
}

// ---- 8 ---------------------------------------------------------------------

void determinism() {
  const std::vector<double> ps{0.2, 0.5, 0.8};
  const bool v = cmd_verify(ps, 1000, 1, std::nullopt).text == cmd_verify(ps, 1000, 1, std::nullopt).text;
  const bool e = cmd_extremal(0.5, SearchOptions{}, std::nullopt).text ==
                 cmd_extremal(0.5, SearchOptions{}, std::nullopt).text;
  report(8, "determinism", v && e, std::string("verify ") + (v ? "identical" : "differs") + ", extremal " +
                                       (e ? "identical" : "differs"));
}

// ---- 9 ---------------------------------------------------------------------

void mutation(const std::vector<RouteSamples>& samples) {
  int caught = 0, total = 0;
  std::string missed;
  const PhiTranscription phi0;
  for (std::size_t i = 0; i < phi0.k.size(); ++i) {
    PhiTranscription tr = phi0;
    tr.k[i] += 1e-3;
    ++total;
    if (!(lower_identity_residual({}) < 1e-10) || !(triple_path_residual(samples, tr) < 1e-8)) ++caught;
    else missed += " phi[" + std::to_string(i) + "]";
  }
  const HpTranscription hp0;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      HpTranscription tr = hp0;
      tr.m[i][j] += 1e-3;
      ++total;
      if (!(lower_identity_residual(tr) < 1e-10) || !(triple_path_residual(samples, phi0) < 1e-8)) ++caught;
      else missed += " h[" + std::to_string(i) + "][" + std::to_string(j) + "]";
    }
  }
  report(9, "mutation sensitivity", caught == total,
         std::to_string(caught) + "/" + std::to_string(total) + " perturbations caught" + missed);
}

}  // namespace

int main() {
  bound_reproduction();
  lower_identity();
  anchors();
  const auto t0 = std::chrono::steady_clock::now();
  const auto samples = route_samples();
  triple_path(samples, seconds_since(t0));
  f_family();
  omega_monotone();
  round_trip();
  determinism();
  mutation(samples);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
