#include "concave/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "concave/errors.hpp"

namespace concave {

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

TruncatedSeries TruncatedSeries::constant(Complex c, std::size_t order) {
  TruncatedSeries s(order);
  s[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
  TruncatedSeries s(order);
  if (order >= 1) s[1] = 1.0;
  return s;
}

Complex TruncatedSeries::evaluate(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  std::vector<Complex> c(order + 1, 0.0);
  std::copy_n(coeffs_.begin(), std::min(coeffs_.size(), c.size()), c.begin());
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (order() == 0) return TruncatedSeries(0);
  TruncatedSeries d(order() - 1);
  for (std::size_t k = 1; k <= order(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return d;
}

TruncatedSeries TruncatedSeries::times_z() const {
  TruncatedSeries s(order());
  for (std::size_t k = 1; k <= order(); ++k) s[k] = coeffs_[k - 1];
  return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries r(n);
  for (std::size_t k = 0; k <= n; ++k) r[k] = a[k] + b[k];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries r(n);
  for (std::size_t k = 0; k <= n; ++k) r[k] = a[k] - b[k];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a) { return Complex(-1.0) * a; }

TruncatedSeries operator*(Complex s, const TruncatedSeries& a) {
  TruncatedSeries r(a.order());
  for (std::size_t k = 0; k <= a.order(); ++k) r[k] = s * a[k];
  return r;
}

TruncatedSeries operator+(Complex s, const TruncatedSeries& a) {
  TruncatedSeries r = a;
  r[0] += s;
  return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries r(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j <= k; ++j) acc += a[j] * b[k - j];
    r[k] = acc;
  }
  return r;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a, double epsilon) {
  if (std::abs(a[0]) <= epsilon) throw ZeroConstantTerm();
  const std::size_t n = a.order();
  TruncatedSeries r(n);
  const Complex inv0 = 1.0 / a[0];
  r[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * r[k - j];
    r[k] = -acc * inv0;
  }
  return r;
}

TruncatedSeries series_exp(const TruncatedSeries& a, double epsilon) {
  if (std::abs(a[0]) > epsilon) throw NonzeroConstantTerm();
  const std::size_t n = a.order();
  TruncatedSeries e(n);
  e[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * a[j] * e[k - j];
    e[k] = acc / static_cast<double>(k);
  }
  return e;
}

TruncatedSeries series_integrate(const TruncatedSeries& a) {
  TruncatedSeries b(a.order() + 1);
  for (std::size_t k = 1; k <= b.order(); ++k) b[k] = a[k - 1] / static_cast<double>(k);
  return b;
}

TruncatedSeries taylor_from_samples(const ComplexFn& eval, double radius, std::size_t n_terms,
                                    std::size_t n_samples, Complex center) {
  if (!(radius > 0.0)) throw InvalidInput("taylor_from_samples: radius must be positive");
  if (n_terms == 0) throw InvalidInput("taylor_from_samples: n_terms must be positive");
  if (n_samples < 4 * n_terms) throw InvalidInput("taylor_from_samples: need n_samples >= 4 n_terms");

  std::vector<Complex> roots(n_samples);
  std::vector<Complex> values(n_samples);
  for (std::size_t j = 0; j < n_samples; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_samples);
    roots[j] = std::polar(1.0, angle);
    values[j] = eval(center + radius * roots[j]);
  }

  TruncatedSeries out(n_terms - 1);
  double scale = 1.0;
  for (std::size_t k = 0; k < n_terms; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < n_samples; ++j) acc += values[j] * std::conj(roots[(j * k) % n_samples]);
    out[k] = acc / (static_cast<double>(n_samples) * scale);
    scale *= radius;
  }
  return out;
}

}  // namespace concave
