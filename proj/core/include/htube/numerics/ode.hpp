#pragma once

// Embedded Runge-Kutta 5(4) pair of Dormand and Prince with its native
// fourth-order continuous extension. Step control follows Hairer, Norsett and
// Wanner, "Solving Ordinary Differential Equations I", section II.4.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <vector>

#include "htube/error.hpp"
#include "htube/numerics/roots.hpp"

namespace htube::numerics {

template <std::size_t N>
using Vec = std::array<double, N>;

struct OdeOptions {
  double rtol = 1e-10;
  double atol = 1e-10;
  double initial_step = 0.0;  // 0 selects a step automatically
  double max_step = std::numeric_limits<double>::infinity();
  std::size_t max_steps = 500000;
};

/// Interpolant for one accepted step [t0, t0 + h].
template <std::size_t N>
struct DenseStep {
  double t0 = 0.0;
  double h = 0.0;
  std::array<Vec<N>, 5> c{};

  Vec<N> operator()(double t) const {
    const double s = (t - t0) / h;
    const double s1 = 1.0 - s;
    Vec<N> y;
    for (std::size_t i = 0; i < N; ++i)
      y[i] = c[0][i] + s * (c[1][i] + s1 * (c[2][i] + s * (c[3][i] + s1 * c[4][i])));
    return y;
  }
};

template <std::size_t N>
class OdeSolution {
public:
  const std::vector<double>& times() const { return t_; }
  const std::vector<Vec<N>>& states() const { return y_; }
  double t_begin() const { return t_.front(); }
  double t_end() const { return t_.back(); }
  const Vec<N>& final_state() const { return y_.back(); }
  std::size_t accepted_steps() const { return steps_.size(); }
  std::size_t rejected_steps() const { return rejected_; }
  bool event_triggered() const { return event_; }

  /// Dense output for t between t_begin() and t_end() (either direction).
  Vec<N> at(double t) const {
    if (steps_.empty()) return y_.front();
    const bool forward = t_.back() >= t_.front();
    auto it = forward
        ? std::lower_bound(t_.begin() + 1, t_.end(), t)
        : std::lower_bound(t_.begin() + 1, t_.end(), t, std::greater<double>());
    std::size_t k = static_cast<std::size_t>(it - t_.begin());
    if (k == 0) k = 1;
    if (k > steps_.size()) k = steps_.size();
    return steps_[k - 1](t);
  }

private:
  template <std::size_t M, class Rhs, class Event>
  friend OdeSolution<M> integrate_until(Rhs&&, double, const Vec<M>&, double, Event&&,
                                        const OdeOptions&);

  std::vector<double> t_;
  std::vector<Vec<N>> y_;
  std::vector<DenseStep<N>> steps_;
  std::size_t rejected_ = 0;
  bool event_ = false;
};

namespace detail {

struct Dopri5Tableau {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                          a75 = -2187.0 / 6784, a76 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
  static constexpr double d1 = -12715105075.0 / 11282082432.0,
                          d3 = 87487479700.0 / 32700410799.0,
                          d4 = -10690763975.0 / 1880347072.0,
                          d5 = 701980252875.0 / 199316789632.0,
                          d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;
};

template <std::size_t N>
double error_norm(const Vec<N>& err, const Vec<N>& y0, const Vec<N>& y1, const OdeOptions& o) {
  double sum = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    const double sc = o.atol + o.rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    const double r = err[i] / sc;
    sum += r * r;
  }
  return std::sqrt(sum / static_cast<double>(N));
}

template <std::size_t N, class Rhs>
double initial_step(Rhs& f, double t0, const Vec<N>& y0, const Vec<N>& f0, double dir,
                    const OdeOptions& o) {
  double d0 = 0, d1 = 0;
  for (std::size_t i = 0; i < N; ++i) {
    const double sc = o.atol + o.rtol * std::abs(y0[i]);
    d0 += (y0[i] / sc) * (y0[i] / sc);
    d1 += (f0[i] / sc) * (f0[i] / sc);
  }
  d0 = std::sqrt(d0 / N);
  d1 = std::sqrt(d1 / N);
  double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
  h0 = std::min(h0, o.max_step);
  Vec<N> y1;
  for (std::size_t i = 0; i < N; ++i) y1[i] = y0[i] + dir * h0 * f0[i];
  const Vec<N> f1 = f(t0 + dir * h0, y1);
  double d2 = 0;
  for (std::size_t i = 0; i < N; ++i) {
    const double sc = o.atol + o.rtol * std::abs(y0[i]);
    d2 += ((f1[i] - f0[i]) / sc) * ((f1[i] - f0[i]) / sc);
  }
  d2 = std::sqrt(d2 / N) / h0;
  const double dm = std::max(d1, d2);
  const double h1 = dm <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / dm, 0.2);
  return std::min({100 * h0, h1, o.max_step});
}

}  // namespace detail

/// Integrates y' = f(t, y) from t0 toward t_limit, stopping early at the first
/// zero crossing of event(t, y). The crossing is located on the dense output.
template <std::size_t N, class Rhs, class Event>
OdeSolution<N> integrate_until(Rhs&& f, double t0, const Vec<N>& y0, double t_limit,
                               Event&& event, const OdeOptions& opts) {
  using T = detail::Dopri5Tableau;
  OdeSolution<N> sol;
  sol.t_.push_back(t0);
  sol.y_.push_back(y0);
  if (t_limit == t0) return sol;

  const double dir = t_limit > t0 ? 1.0 : -1.0;
  double t = t0;
  Vec<N> y = y0;
  Vec<N> k1 = f(t, y);
  double h = opts.initial_step > 0 ? opts.initial_step : detail::initial_step<N>(f, t, y, k1, dir, opts);
  double g_prev = event(t, y);
  double fac_old = 1e-4;

  Vec<N> k2, k3, k4, k5, k6, k7, ytmp, ynew, err;
  for (std::size_t n = 0; n < opts.max_steps; ++n) {
    h = std::min(h, opts.max_step);
    bool last = false;
    if ((t + dir * h - t_limit) * dir >= 0) {
      h = std::abs(t_limit - t);
      last = true;
    }
    if (h <= 1e-15 * std::max(1.0, std::abs(t))) {
      std::ostringstream msg;
      msg << "step size underflow at t=" << t;
      throw Error(ErrorKind::StepFailure, msg.str());
    }
    const double hs = dir * h;
    for (std::size_t i = 0; i < N; ++i) ytmp[i] = y[i] + hs * T::a21 * k1[i];
    k2 = f(t + T::c2 * hs, ytmp);
    for (std::size_t i = 0; i < N; ++i) ytmp[i] = y[i] + hs * (T::a31 * k1[i] + T::a32 * k2[i]);
    k3 = f(t + T::c3 * hs, ytmp);
    for (std::size_t i = 0; i < N; ++i)
      ytmp[i] = y[i] + hs * (T::a41 * k1[i] + T::a42 * k2[i] + T::a43 * k3[i]);
    k4 = f(t + T::c4 * hs, ytmp);
    for (std::size_t i = 0; i < N; ++i)
      ytmp[i] = y[i] + hs * (T::a51 * k1[i] + T::a52 * k2[i] + T::a53 * k3[i] + T::a54 * k4[i]);
    k5 = f(t + T::c5 * hs, ytmp);
    for (std::size_t i = 0; i < N; ++i)
      ytmp[i] = y[i] + hs * (T::a61 * k1[i] + T::a62 * k2[i] + T::a63 * k3[i] + T::a64 * k4[i] +
                             T::a65 * k5[i]);
    k6 = f(t + hs, ytmp);
    for (std::size_t i = 0; i < N; ++i)
      ynew[i] = y[i] + hs * (T::a71 * k1[i] + T::a73 * k3[i] + T::a74 * k4[i] + T::a75 * k5[i] +
                             T::a76 * k6[i]);
    k7 = f(t + hs, ynew);
    for (std::size_t i = 0; i < N; ++i)
      err[i] = hs * (T::e1 * k1[i] + T::e3 * k3[i] + T::e4 * k4[i] + T::e5 * k5[i] +
                     T::e6 * k6[i] + T::e7 * k7[i]);
    const double en = detail::error_norm<N>(err, y, ynew, opts);

    if (!std::isfinite(en) || en > 1.0) {
      ++sol.rejected_;
      const double fac = std::isfinite(en) ? std::max(0.2, 0.9 * std::pow(en, -0.2)) : 0.1;
      h *= fac;
      continue;
    }

    DenseStep<N> step;
    step.t0 = t;
    step.h = hs;
    for (std::size_t i = 0; i < N; ++i) {
      step.c[0][i] = y[i];
      step.c[1][i] = ynew[i] - y[i];
      step.c[2][i] = hs * k1[i] - step.c[1][i];
      step.c[3][i] = step.c[1][i] - hs * k7[i] - step.c[2][i];
      step.c[4][i] = hs * (T::d1 * k1[i] + T::d3 * k3[i] + T::d4 * k4[i] + T::d5 * k5[i] +
                           T::d6 * k6[i] + T::d7 * k7[i]);
    }
    const double t_new = last ? t_limit : t + hs;

    const double g_new = event(t_new, ynew);
    const bool crossed = (g_prev < 0 && g_new >= 0) || (g_prev > 0 && g_new <= 0);
    if (crossed) {
      const double te = g_new == 0.0
          ? t_new
          : bracketed_root([&](double s) { return event(s, step(s)); }, t, t_new,
                           RootOptions{1e-15 * std::max(1.0, std::abs(t_new)), 400});
      sol.steps_.push_back(step);
      sol.t_.push_back(te);
      sol.y_.push_back(te == t_new ? ynew : step(te));
      sol.event_ = true;
      return sol;
    }
    if (g_prev == 0.0) g_prev = g_new;
    else g_prev = g_new;

    sol.steps_.push_back(step);
    sol.t_.push_back(t_new);
    sol.y_.push_back(ynew);
    if (last) return sol;

    t = t_new;
    y = ynew;
    k1 = k7;
    // Lund-stabilised step control.
    const double fac11 = std::pow(en, 0.17);
    double fac = fac11 / std::pow(fac_old, 0.04) / 0.9;
    fac = std::clamp(fac, 0.1, 5.0);
    fac_old = std::max(en, 1e-4);
    h /= fac;
  }
  throw Error(ErrorKind::StepFailure, "maximum number of steps exceeded");
}

template <std::size_t N, class Rhs>
OdeSolution<N> integrate(Rhs&& f, double t0, const Vec<N>& y0, double t1, const OdeOptions& opts) {
  return integrate_until<N>(std::forward<Rhs>(f), t0, y0, t1,
                            [](double, const Vec<N>&) { return 1.0; }, opts);
}

}  // namespace htube::numerics
