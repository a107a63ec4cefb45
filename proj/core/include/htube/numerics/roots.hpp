#pragma once

#include <cmath>
#include <sstream>
#include <utility>

#include "htube/error.hpp"

namespace htube::numerics {

struct RootOptions {
  double xtol = 1e-13;  // absolute bracket width at termination
  int max_iter = 300;
};

/// Root of f in [a, b] where f(a) and f(b) have opposite signs.
///
/// Bisection safeguarded secant: a secant step is taken when it lands well
/// inside the bracket and the previous step at least halved it; otherwise the
/// bracket is bisected. Converges even when f blows up at an endpoint.
template <class F>
double bracketed_root(F&& f, double a, double b, const RootOptions& opts = {}) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0) == (fb > 0)) {
    std::ostringstream msg;
    msg << "no sign change on [" << a << ", " << b << "] (f=" << fa << ", " << fb << ")";
    throw Error(ErrorKind::RootBracket, msg.str());
  }
  if (a > b) {
    std::swap(a, b);
    std::swap(fa, fb);
  }
  double last_width = b - a;
  bool use_secant = true;
  for (int it = 0; it < opts.max_iter; ++it) {
    const double width = b - a;
    if (width <= opts.xtol) break;
    double x = 0.5 * (a + b);
    if (use_secant && std::isfinite(fa) && std::isfinite(fb)) {
      const double s = b - fb * (b - a) / (fb - fa);
      const double margin = 0.125 * width;
      if (s > a + margin && s < b - margin) x = s;
    }
    const double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx > 0) == (fa > 0)) {
      a = x;
      fa = fx;
    } else {
      b = x;
      fb = fx;
    }
    use_secant = (b - a) <= 0.5 * last_width;
    last_width = width;
  }
  // Final secant refinement inside the tiny bracket.
  if (std::isfinite(fa) && std::isfinite(fb) && fb != fa) {
    const double s = b - fb * (b - a) / (fb - fa);
    if (s >= a && s <= b) return s;
  }
  return 0.5 * (a + b);
}

}  // namespace htube::numerics
