#include "concave/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <omp.h>

#include "concave/errors.hpp"
#include "concave/hankel.hpp"
#include "concave/sampling.hpp"

namespace concave {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool better(const GridCandidate& a, const GridCandidate& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.index < b.index;
}

// Bounded top-k: heap.front() is the worst kept candidate.
void offer(std::vector<GridCandidate>& heap, std::size_t keep, GridCandidate c) {
  if (heap.size() < keep) {
    heap.push_back(c);
    std::push_heap(heap.begin(), heap.end(), better);
  } else if (better(c, heap.front())) {
    std::pop_heap(heap.begin(), heap.end(), better);
    heap.back() = c;
    std::push_heap(heap.begin(), heap.end(), better);
  }
}

double grid_value(const PoleParam& pp, const GridSpec& spec, std::int64_t i, double scale) {
  return std::abs(phi_p(pp, spec.point(i))) * scale;
}

// Moduli are searched as r = sin^2(x): the unit circle becomes a ridge
// instead of a clamped plateau the simplex can wander onto.
Complex polar_folded(double x, double theta) {
  const double s = std::sin(x);
  return std::polar(s * s, theta);
}

double unfold(double r) { return std::asin(std::sqrt(std::clamp(r, 0.0, 1.0))); }

}  // namespace

ParamTriple GridSpec::point(std::int64_t index) const {
  const std::int64_t n = per_parameter();
  Complex out[3];
  for (int d = 0; d < 3; ++d) {
    const std::int64_t local = index % n;
    index /= n;
    const auto m = static_cast<double>(local / angles) / (moduli - 1);
    const double theta = kTwoPi * static_cast<double>(local % angles) / angles;
    out[d] = std::polar(m, theta);
  }
  return {out[0], out[1], out[2]};
}

bool GridSpec::canonical(std::int64_t index) const {
  const std::int64_t n = per_parameter();
  bool frozen = false;
  for (int d = 0; d < 3; ++d) {
    const std::int64_t local = index % n;
    index /= n;
    if (frozen && local != 0) return false;
    const std::int64_t m = local / angles;
    if (m == 0 && local != 0) return false;
    if (m == moduli - 1) frozen = true;
  }
  return true;
}

std::vector<GridCandidate> scan_grid_serial(const PoleParam& pp, const GridSpec& spec, int keep) {
  const double scale = 1.0 / (18.0 * pp.P() * pp.P() * pp.P());
  std::vector<GridCandidate> heap;
  const std::int64_t n = spec.size();
  for (std::int64_t i = 0; i < n; ++i)
    if (spec.canonical(i)) offer(heap, static_cast<std::size_t>(keep), {grid_value(pp, spec, i, scale), i});
  std::sort(heap.begin(), heap.end(), better);
  return heap;
}

std::vector<GridCandidate> scan_grid_parallel(const PoleParam& pp, const GridSpec& spec, int keep) {
  const double scale = 1.0 / (18.0 * pp.P() * pp.P() * pp.P());
  const std::int64_t n = spec.size();
  std::vector<std::vector<GridCandidate>> partial(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    auto& heap = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
    if (spec.canonical(i)) offer(heap, static_cast<std::size_t>(keep), {grid_value(pp, spec, i, scale), i});
  }
  std::vector<GridCandidate> merged;
  for (const auto& h : partial) merged.insert(merged.end(), h.begin(), h.end());
  std::sort(merged.begin(), merged.end(), better);
  if (merged.size() > static_cast<std::size_t>(keep)) merged.resize(static_cast<std::size_t>(keep));
  return merged;
}

Sigma2Optimum maximize_over_sigma2(const PoleParam& pp, Complex sigma0, Complex sigma1) {
  const double scale = 1.0 / (18.0 * pp.P() * pp.P() * pp.P());
  const auto [base, slope] = phi_p_affine(pp, sigma0, sigma1);
  const double ab = std::abs(base);
  const double as = std::abs(slope);
  Complex s2 = 0.0;
  if (as > 0.0) s2 = (ab > 0.0 ? base / ab : Complex(1.0)) * (as / slope);
  return {(ab + as) * scale, s2, as * scale};
}

SimplexResult nelder_mead(const std::function<double(std::span<const double>)>& f, std::vector<double> x0,
                          std::span<const double> steps, int iterations) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> simplex(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += steps[i];
  std::vector<double> fv(n + 1);
  for (std::size_t i = 0; i <= n; ++i) fv[i] = f(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  auto sort_simplex = [&] {
    for (std::size_t i = 0; i <= n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    std::vector<std::vector<double>> s(n + 1);
    std::vector<double> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      s[i] = simplex[order[i]];
      v[i] = fv[order[i]];
    }
    simplex = std::move(s);
    fv = std::move(v);
  };
  auto blend = [&](const std::vector<double>& c, const std::vector<double>& x, double t) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = c[i] + t * (x[i] - c[i]);
    return out;
  };

  sort_simplex();
  int it = 0;
  for (; it < iterations; ++it) {
    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j] / static_cast<double>(n);

    const auto xr = blend(centroid, simplex[n], -1.0);
    const double fr = f(xr);
    if (fr < fv[0]) {
      const auto xe = blend(centroid, simplex[n], -2.0);
      const double fe = f(xe);
      if (fe < fr) {
        simplex[n] = xe;
        fv[n] = fe;
      } else {
        simplex[n] = xr;
        fv[n] = fr;
      }
    } else if (fr < fv[n - 1]) {
      simplex[n] = xr;
      fv[n] = fr;
    } else {
      const bool outside = fr < fv[n];
      const auto xc = outside ? blend(centroid, xr, 0.5) : blend(centroid, simplex[n], 0.5);
      const double fc = f(xc);
      if (fc < (outside ? fr : fv[n])) {
        simplex[n] = xc;
        fv[n] = fc;
      } else {
        for (std::size_t i = 1; i <= n; ++i) {
          simplex[i] = blend(simplex[0], simplex[i], 0.5);
          fv[i] = f(simplex[i]);
        }
      }
    }
    sort_simplex();
  }
  return {simplex[0], fv[0], it};
}

ExtremalReport estimate_M(const PoleParam& pp, const SearchOptions& opts) {
  if (opts.grid < 8) throw InvalidInput("estimate_M: grid must be >= 8");
  if (opts.refine_iters < 0) throw InvalidInput("estimate_M: refine_iters must be >= 0");
  if (opts.moduli < 2) throw InvalidInput("estimate_M: need at least 2 moduli");

  const GridSpec spec{opts.grid, opts.moduli};
  const auto top = opts.exec == Exec::serial ? scan_grid_serial(pp, spec, opts.starts)
                                             : scan_grid_parallel(pp, spec, opts.starts);

  // Starts in (x0, arg s0, x1, arg s1) with |s_k| = sin^2(x_k); sigma2 is optimized in closed form.
  std::vector<std::vector<double>> starts;
  for (const auto& c : top) {
    const ParamTriple s = spec.point(c.index);
    starts.push_back({unfold(std::abs(s.x0)), std::arg(s.x0), unfold(std::abs(s.x1)), std::arg(s.x1)});
  }
  for (int i = 0; i < opts.random_starts; ++i) {
    Rng rng(opts.seed, family_key("extremal-start"), static_cast<std::uint64_t>(i));
    const double r0 = std::sqrt(rng.uniform());
    const double a0 = rng.uniform(0.0, kTwoPi);
    const double r1 = std::sqrt(rng.uniform());
    starts.push_back({unfold(r0), a0, unfold(r1), rng.uniform(0.0, kTwoPi)});
  }

  // The real slice (t, -1, 0) carries a narrow bump just inside |sigma0| = 1
  // that generic starts tend to miss; its best sample is one more start.
  if (opts.slice_samples > 0) {
    double best_t = 0.0, best_v = -1.0;
    for (int k = 0; k <= opts.slice_samples; ++k) {
      const double t = static_cast<double>(k) / opts.slice_samples;
      const double v = maximize_over_sigma2(pp, t, -1.0).value;
      if (v > best_v) {
        best_v = v;
        best_t = t;
      }
    }
    starts.push_back({unfold(best_t), 0.0, unfold(1.0), std::numbers::pi});
  }

  auto objective = [&pp](std::span<const double> x) {
    return -maximize_over_sigma2(pp, polar_folded(x[0], x[1]), polar_folded(x[2], x[3])).value;
  };
  const double steps[4] = {0.1, 0.25, 0.1, 0.25};

  const auto n_starts = static_cast<std::int64_t>(starts.size());
  std::vector<SimplexResult> results(starts.size());
  if (opts.exec == Exec::serial) {
    for (std::int64_t i = 0; i < n_starts; ++i) results[i] = nelder_mead(objective, starts[i], steps, opts.refine_iters);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n_starts; ++i) results[i] = nelder_mead(objective, starts[i], steps, opts.refine_iters);
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i)
    if (results[i].value < results[best].value) best = i;  // earliest start wins ties

  ExtremalReport rep;
  rep.p = pp.p();
  rep.grid = opts.grid;
  rep.seed = opts.seed;
  rep.lower = lower_bound_M(pp);
  rep.slice_value = rep.lower;
  rep.upper = upper_bound_M(pp);
  for (const auto& r : results) rep.iterations += r.iterations;

  const double grid_best = top.empty() ? 0.0 : top.front().value;
  if (!results.empty() && -results[best].value >= grid_best) {
    const auto& x = results[best].x;
    const Complex s0 = polar_folded(x[0], x[1]);
    const Complex s1 = polar_folded(x[2], x[3]);
    const Sigma2Optimum opt = maximize_over_sigma2(pp, s0, s1);
    rep.m_estimate = opt.value;
    rep.arg_sigma = {s0, s1, opt.sigma2};
    rep.sigma2_slope = opt.slope;
  } else {
    rep.m_estimate = grid_best;
    rep.arg_sigma = spec.point(top.front().index);
    rep.sigma2_slope = std::abs(phi_p_affine(pp, rep.arg_sigma.x0, rep.arg_sigma.x1).slope) / (18.0 * pp.P() * pp.P() * pp.P());
  }
  return rep;
}

ExtremalReport estimate_M(const PoleParam& pp, int grid, int refine_iters, std::uint64_t seed, Exec exec) {
  SearchOptions opts;
  opts.grid = grid;
  opts.refine_iters = refine_iters;
  opts.seed = seed;
  opts.exec = exec;
  return estimate_M(pp, opts);
}

}  // namespace concave
