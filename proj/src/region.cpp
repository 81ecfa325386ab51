#include "concave/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "concave/errors.hpp"
#include "concave/hankel.hpp"
#include "concave/sampling.hpp"

namespace concave {

namespace {

double segment_distance(Complex a, Complex b, Complex z) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  const double s = std::clamp(((z - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(z - (a + s * ab));
}

// > 0 when z lies left of the directed line a -> b.
double is_left(Complex a, Complex b, Complex z) {
  return (b.real() - a.real()) * (z.imag() - a.imag()) - (z.real() - a.real()) * (b.imag() - a.imag());
}

std::size_t distinct_vertices(const std::vector<Complex>& poly) {
  std::vector<std::pair<double, double>> v;
  v.reserve(poly.size());
  for (const Complex& z : poly) v.emplace_back(z.real(), z.imag());
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

double radical_inverse(std::uint64_t n, std::uint64_t base) {
  double inv = 1.0 / static_cast<double>(base);
  double f = inv;
  double r = 0.0;
  while (n > 0) {
    r += f * static_cast<double>(n % base);
    n /= base;
    f *= inv;
  }
  return r;
}

}  // namespace

int winding_number(const std::vector<Complex>& closed, Complex z) {
  int wn = 0;
  const std::size_t n = closed.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Complex a = closed[i];
    const Complex b = closed[i + 1];
    if (a.imag() <= z.imag()) {
      if (b.imag() > z.imag() && is_left(a, b, z) > 0.0) ++wn;
    } else if (b.imag() <= z.imag() && is_left(a, b, z) < 0.0) {
      --wn;
    }
  }
  return wn;
}

double distance_to_polyline(const std::vector<Complex>& polyline, Complex z) {
  if (polyline.empty()) return std::numeric_limits<double>::infinity();
  if (polyline.size() == 1) return std::abs(z - polyline.front());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i)
    best = std::min(best, segment_distance(polyline[i], polyline[i + 1], z));
  return best;
}

double polyline_hausdorff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double h = 0.0;
  for (const Complex& z : a) h = std::max(h, distance_to_polyline(b, z));
  for (const Complex& z : b) h = std::max(h, distance_to_polyline(a, z));
  return h;
}

Containment contains(const RegionSample& region, Complex z, double tol) {
  if (distinct_vertices(region.boundary) < 3) throw DegenerateBoundary();
  std::vector<Complex> closed = region.boundary;
  if (closed.front() != closed.back()) closed.push_back(closed.front());
  if (distance_to_polyline(closed, z) <= tol) return Containment::boundary;
  return winding_number(closed, z) != 0 ? Containment::inside : Containment::outside;
}

RegionSample sample_omega_boundary(const PoleParam& pp, int n_theta) {
  if (n_theta < 16) throw InvalidInput("sample_omega_boundary: n_theta must be >= 16");
  RegionSample out;
  out.boundary.reserve(static_cast<std::size_t>(n_theta) + 1);
  for (int j = 0; j < n_theta; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / n_theta;
    out.boundary.push_back(omega_map(pp, std::polar(1.0, theta)));
  }
  out.boundary.push_back(out.boundary.front());
  out.meta = {"omega", pp.p(), n_theta, 0, 0};
  return out;
}

Containment omega_contains(const PoleParam& pp, Complex w, double tol) {
  // omega_map(z) = w  <=>  z^2 + (t - 2) z + (1 + t w) = 0 with t = P^2.
  const double t = pp.P() * pp.P();
  const Complex b = t - 2.0;
  const Complex c = 1.0 + t * w;
  Complex sq = std::sqrt(b * b - 4.0 * c);
  if ((std::conj(b) * sq).real() < 0.0) sq = -sq;
  const Complex q = -0.5 * (b + sq);
  const double m = (q == 0.0) ? 0.0 : std::min(std::abs(q), std::abs(c / q));
  if (m < 1.0 - tol) return Containment::inside;
  if (m <= 1.0 + tol) return Containment::boundary;
  return Containment::outside;
}

MonotoneCheck check_omega_monotone(double p_small, double p_large, int n_theta) {
  if (!(0.0 < p_small && p_small < p_large && p_large < 1.0))
    throw InvalidInput("check_omega_monotone: need 0 < p_small < p_large < 1");
  const PoleParam small(p_small);
  const RegionSample inner = sample_omega_boundary(PoleParam(p_large), n_theta);
  MonotoneCheck out{true, 0};
  for (std::size_t j = 0; j + 1 < inner.boundary.size(); ++j) {
    switch (omega_contains(small, inner.boundary[j])) {
      case Containment::inside: break;
      case Containment::boundary: ++out.contacts; break;
      case Containment::outside: out.holds = false; break;
    }
  }
  return out;
}

std::vector<Complex> radial_boundary(const std::vector<Complex>& points, int bins) {
  if (points.empty() || bins < 3) return {};
  Complex centroid = 0.0;
  for (const Complex& z : points) centroid += z;
  centroid /= static_cast<double>(points.size());

  std::vector<int> best(static_cast<std::size_t>(bins), -1);
  std::vector<double> radius(static_cast<std::size_t>(bins), -1.0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Complex d = points[i] - centroid;
    const double angle = std::arg(d) + std::numbers::pi;
    auto bin = static_cast<std::size_t>(angle / (2.0 * std::numbers::pi) * bins);
    bin = std::min(bin, static_cast<std::size_t>(bins - 1));
    const double r = std::abs(d);
    if (r > radius[bin]) {  // first index wins ties
      radius[bin] = r;
      best[bin] = static_cast<int>(i);
    }
  }
  std::vector<Complex> out;
  for (int b : best)
    if (b >= 0) out.push_back(points[static_cast<std::size_t>(b)]);
  if (!out.empty()) out.push_back(out.front());
  return out;
}

ParamTriple cloud_sigma(std::int64_t i, std::uint64_t seed) {
  if (i == 0) return {1.0, 0.0, 0.0};  // F_1, where H = -1
  // Halton point with a seed-dependent Cranley-Patterson shift.
  Rng shift(seed, family_key("cloud-shift"), 0);
  constexpr std::uint64_t bases[6] = {2, 3, 5, 7, 11, 13};
  double u[6];
  for (int d = 0; d < 6; ++d) {
    u[d] = radical_inverse(static_cast<std::uint64_t>(i), bases[d]) + shift.uniform();
    u[d] -= std::floor(u[d]);
  }
  const double two_pi = 2.0 * std::numbers::pi;
  double r0 = std::sqrt(u[0]);
  double r1 = std::sqrt(u[2]);
  double r2 = std::sqrt(u[4]);
  switch (i % 5) {
    case 2: r2 = 1.0; break;
    case 3: r1 = 1.0; break;
    case 4: r0 = 1.0; break;  // traces the boundary of Omega_p
    default: break;
  }
  return {std::polar(r0, two_pi * u[1]), std::polar(r1, two_pi * u[3]), std::polar(r2, two_pi * u[5])};
}

RegionSample sample_region_H(const PoleParam& pp, std::int64_t n_samples, std::uint64_t seed, Exec exec) {
  if (n_samples < 1) throw InvalidInput("sample_region_H: n_samples must be >= 1");
  const double scale = 1.0 / (18.0 * pp.P() * pp.P() * pp.P());
  RegionSample out;
  out.points.resize(static_cast<std::size_t>(n_samples));
  auto* pts = out.points.data();
  if (exec == Exec::serial) {
    for (std::int64_t i = 0; i < n_samples; ++i) pts[i] = phi_p(pp, cloud_sigma(i, seed)) * scale;
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n_samples; ++i) pts[i] = phi_p(pp, cloud_sigma(i, seed)) * scale;
  }
  out.boundary = radial_boundary(out.points, kBoundaryBins);
  out.meta = {"hankel", pp.p(), n_samples, kBoundaryBins, seed};
  return out;
}

}  // namespace concave
