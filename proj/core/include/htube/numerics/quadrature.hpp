#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace htube::numerics {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  std::size_t max_intervals = 20000;
  std::size_t initial_panels = 1;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment gk15(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double hl = 0.5 * (b - a);
  const double fc = f(c);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = hl * kXgk[j];
    fv1[j] = f(c - dx);
    fv2[j] = f(c + dx);
    const double s = fv1[j] + fv2[j];
    resk += kWgk[j] * s;
    if (j % 2 == 1) resg += kWg[j / 2] * s;
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  const double ahl = std::abs(hl);
  resasc *= ahl;
  double err = std::abs((resk - resg) * hl);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  return {a, b, resk * hl, err};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod quadrature: the segment with the largest
/// error estimate is bisected until the total error meets the tolerance.
template <class F>
QuadResult gauss_kronrod(F&& f, double a, double b, const QuadOptions& opts = {}) {
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::priority_queue<detail::Segment> heap;
  const std::size_t panels = std::max<std::size_t>(1, opts.initial_panels);
  double total = 0.0, err = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double lo = a + (b - a) * static_cast<double>(i) / panels;
    const double hi = i + 1 == panels ? b : a + (b - a) * static_cast<double>(i + 1) / panels;
    auto s = detail::gk15(f, lo, hi);
    total += s.value;
    err += s.error;
    heap.push(s);
  }
  out.evaluations = 15 * panels;
  auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };
  while (err > target() && heap.size() < opts.max_intervals) {
    const auto worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= std::min(worst.a, worst.b) || mid >= std::max(worst.a, worst.b)) break;
    heap.pop();
    const auto left = detail::gk15(f, worst.a, mid);
    const auto right = detail::gk15(f, mid, worst.b);
    out.evaluations += 30;
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  total = 0.0;
  err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  out.value = total;
  out.error = err;
  out.converged = std::isfinite(total) && err <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
  return out;
}

/// Integral over [a, inf) through w = a + s/(1-s), s in [0, 1).
/// The integrand must decay at least like w^-2.
template <class F>
QuadResult gauss_kronrod_to_infinity(F&& f, double a, const QuadOptions& opts = {}) {
  auto g = [&](double s) {
    if (s >= 1.0) return 0.0;
    const double one_minus = 1.0 - s;
    return f(a + s / one_minus) / (one_minus * one_minus);
  };
  return gauss_kronrod(g, 0.0, 1.0, opts);
}

/// Adaptive interval-halving Simpson with Richardson correction, seeded from
/// a uniform partition so that periodic integrands are sampled evenly.
template <class F>
QuadResult adaptive_simpson(F&& f, double a, double b, double tol,
                            std::size_t initial_panels = 16, int max_depth = 40) {
  QuadResult out;
  out.converged = true;
  if (a == b) return out;
  struct Rec {
    F& f;
    QuadResult& out;
    double step(double a, double b, double fa, double fm, double fb, double whole, double tol,
                int depth) {
      const double m = 0.5 * (a + b);
      const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
      const double flm = f(lm), frm = f(rm);
      out.evaluations += 2;
      const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
      const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
      const double diff = left + right - whole;
      if (depth <= 0 || std::abs(diff) <= 15.0 * tol) {
        if (std::abs(diff) > 15.0 * tol) out.converged = false;
        out.error += std::abs(diff) / 15.0;
        return left + right + diff / 15.0;
      }
      return step(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
             step(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
    }
  } rec{f, out};
  const std::size_t n = std::max<std::size_t>(1, initial_panels);
  const double width = (b - a) / static_cast<double>(n);
  double total = 0.0;
  double fa = f(a);
  ++out.evaluations;
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = a + width * static_cast<double>(i);
    const double hi = i + 1 == n ? b : lo + width;
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid), fb = f(hi);
    out.evaluations += 2;
    const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    total += rec.step(lo, hi, fa, fm, fb, whole, tol / static_cast<double>(n), max_depth);
    fa = fb;
  }
  out.value = total;
  if (!std::isfinite(total)) out.converged = false;
  return out;
}

}  // namespace htube::numerics
