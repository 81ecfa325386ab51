#pragma once

// Truncated power series about z = 0.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "concave/types.hpp"

namespace concave {

using ComplexFn = std::function<Complex(Complex)>;

/// Threshold below which a constant term is treated as zero.
inline constexpr double kSeriesEpsilon = 1e-14;

/// Coefficients c_0..c_N of a power series truncated at order N.
class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order = 0) : coeffs_(order + 1) {}
  /// Takes ownership of c_0..c_N; an empty vector becomes the zero constant.
  explicit TruncatedSeries(std::vector<Complex> coeffs);

  static TruncatedSeries constant(Complex c, std::size_t order);
  /// The series z (order >= 1) or 0 (order 0).
  static TruncatedSeries identity(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }

  const Complex& operator[](std::size_t k) const { return coeffs_[k]; }
  Complex& operator[](std::size_t k) { return coeffs_[k]; }

  /// Horner evaluation of the truncated polynomial.
  Complex evaluate(Complex z) const;
  TruncatedSeries truncated(std::size_t order) const;
  /// Term-wise derivative; the order drops by one (an order-0 series stays order 0).
  TruncatedSeries derivative() const;
  /// z * (*this), same order.
  TruncatedSeries times_z() const;

 private:
  std::vector<Complex> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);
TruncatedSeries operator*(Complex s, const TruncatedSeries& a);
TruncatedSeries operator+(Complex s, const TruncatedSeries& a);

/// Cauchy product truncated at min(order(a), order(b)).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// 1/a. Throws ZeroConstantTerm when |a_0| <= epsilon.
TruncatedSeries series_reciprocal(const TruncatedSeries& a, double epsilon = kSeriesEpsilon);

/// exp(a) via k e_k = sum_{j=1..k} j a_j e_{k-j}. Throws NonzeroConstantTerm when |a_0| > epsilon.
TruncatedSeries series_exp(const TruncatedSeries& a, double epsilon = kSeriesEpsilon);

/// Antiderivative vanishing at 0; the order increases by one.
TruncatedSeries series_integrate(const TruncatedSeries& a);

/// Taylor coefficients 0..n_terms-1 of eval about `center`, by the trapezoidal
/// rule for Cauchy's integral on the circle |z - center| = radius.
/// Requires n_samples >= 4 n_terms and radius > 0; eval must be analytic on a
/// disk strictly larger than the sampling circle.
TruncatedSeries taylor_from_samples(const ComplexFn& eval, double radius, std::size_t n_terms,
                                    std::size_t n_samples, Complex center = 0.0);

}  // namespace concave
