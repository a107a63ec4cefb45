#include "htube/isoperimetric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "htube/error.hpp"
#include "htube/foliation.hpp"
#include "htube/numerics/quadrature.hpp"

namespace htube {

namespace {

using std::numbers::pi;

constexpr double kAtanhClamp = 1.0 - 1e-14;

void require_kappa4(const TubeParams& t, bool need_tau) {
  if (t.kappa != 4.0) {
    std::ostringstream msg;
    msg << "area and volume are evaluated at kappa = 4 (got " << t.kappa << "); rescale first";
    throw Error(ErrorKind::DomainViolation, msg.str());
  }
  validate_tube(t);
  if (need_tau && !(t.tau > 0.0))
    throw Error(ErrorKind::DomainViolation, "volume needs tau > 0 (compact Berger sphere)");
}

numerics::QuadOptions opts(double tol) {
  numerics::QuadOptions o;
  o.abs_tol = tol;
  // Error estimates stall near round-off; do not ask for more than that.
  o.rel_tol = 1e-13;
  return o;
}

double integrate_or_throw(const numerics::QuadResult& r, const char* what) {
  if (!r.converged) {
    std::ostringstream msg;
    msg << what << " did not converge (estimate " << r.value << ", error " << r.error << ")";
    throw Error(ErrorKind::QuadratureFailure, msg.str());
  }
  return r.value;
}

}  // namespace

Rescaled rescale_to_kappa4(const TubeParams& t) {
  if (!(t.kappa > 0.0)) throw Error(ErrorKind::DomainViolation, "rescaling to kappa = 4 needs kappa > 0");
  const double c = std::sqrt(t.kappa / 4.0);
  return {{4.0, t.tau / c, t.H / c}, 1.0 / (c * c), 1.0 / (c * c * c)};
}

double tube_area(const TubeParams& t, double tol) {
  require_kappa4(t, false);
  const double H = t.H, t2 = t.tau * t.tau;
  // The u-integrand peaks with width H where cos u = 0. By symmetry take a
  // quarter period and set cos u = sin(atan(H y)), which spreads the peak over
  // y = O(1) and scales out H.
  auto f = [&](double y) {
    const double y2 = y * y;
    const double q = 1.0 / (1.0 + H * H * y2);
    const double m = 1.0 + y2 * q;
    return q * std::sqrt(1.0 + t2 * y2 * q) / (m * std::sqrt(m));
  };
  return 4.0 * pi * integrate_or_throw(numerics::gauss_kronrod_to_infinity(f, 0.0, opts(tol / (4.0 * pi))), "area integral");
}

double volume_density(double tau, double w, double tol) {
  const double w2 = w * w;
  const double one_w = 1.0 + w2;
  const double t2 = tau * tau;
  const double sigma = 1.0 - t2;  // sign picks the atanh or atan branch
  const double root = std::sqrt(std::abs(sigma));
  auto f = [&](double c, double s) {
    const double c2 = c * c;
    const double m = w2 + c2;
    const double m32 = m * std::sqrt(m);
    const double q = std::sqrt(w2 + t2 * c2);
    const double first = w * q / (one_w * m32);
    double F = 0.0;
    if (sigma != 0.0) {
      const double a = w * s / (std::sqrt(one_w) * q);
      if (sigma > 0.0) F = root * std::atanh(std::clamp(root * a, -kAtanhClamp, kAtanhClamp));
      else F = -root * std::atan(root * a);
    }
    const double second = w2 * F * s / (one_w * std::sqrt(one_w) * m32);
    return first - second;
  };
  // Even in cos u and in sin u, so a quarter period suffices; the same
  // substitution as for the area resolves the width-w peak at cos u = 0.
  auto g = [&](double y) {
    const double q = 1.0 / (1.0 + w2 * y * y);
    const double sq = std::sqrt(q);
    return f(w * y * sq, sq) * w * q;
  };
  return 2.0 * pi * integrate_or_throw(numerics::gauss_kronrod_to_infinity(g, 0.0, opts(tol / (2.0 * pi))), "volume density");
}

double tube_volume(const TubeParams& t, double tol) {
  require_kappa4(t, true);
  const double inner_tol = std::max(1e-14, 1e-3 * tol);
  auto f = [&](double w) { return volume_density(t.tau, w, inner_tol); };
  return integrate_or_throw(numerics::gauss_kronrod_to_infinity(f, t.H, opts(tol)), "volume integral");
}

double ambient_volume(const SpaceParams& p) {
  if (!(p.kappa > 0.0) || !(p.tau > 0.0))
    throw Error(ErrorKind::DomainViolation, "ambient volume needs kappa > 0 and tau > 0");
  return 32.0 * p.tau * pi * pi / (p.kappa * p.kappa);
}

std::vector<double> make_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !(stop >= start)) throw Error(ErrorKind::DomainViolation, "invalid grid range");
  std::vector<double> grid;
  // Index-based so the grid does not accumulate rounding drift.
  const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 0.5));
  grid.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) grid.push_back(start + static_cast<double>(i) * step);
  return grid;
}

std::vector<IsoperimetricRecord> isoperimetric_sweep(double tau, double H_start, double H_stop, double H_step,
                                                     double tol) {
  return isoperimetric_sweep(tau, make_grid(H_start, H_stop, H_step), tol);
}

std::vector<IsoperimetricRecord> isoperimetric_sweep(double tau, const std::vector<double>& H_grid, double tol) {
  std::vector<IsoperimetricRecord> rows(H_grid.size());
  if (H_grid.empty()) return rows;
  if (!std::is_sorted(H_grid.begin(), H_grid.end()))
    throw Error(ErrorKind::DomainViolation, "H grid must be increasing");
  const SpaceParams space{4.0, tau};
  const double total = ambient_volume(space);
  const bool foliating = foliation_criterion(space).foliates;
  const double inner_tol = std::max(1e-14, 1e-3 * tol);
  auto density = [&](double w) { return volume_density(tau, w, inner_tol); };

  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].H = H_grid[i];
    rows[i].foliating = foliating;
    try {
      rows[i].area = tube_area({4.0, tau, H_grid[i]}, tol);
    } catch (const Error& e) {
      rows[i].ok = false;
      rows[i].error = e.what();
    }
  }

  // Walk down from the tail; a failed segment poisons every smaller H.
  double acc = 0.0;
  std::string poisoned;
  for (std::size_t k = rows.size(); k-- > 0;) {
    if (!poisoned.empty()) {
      rows[k].ok = false;
      if (rows[k].error.empty()) rows[k].error = "volume not accumulated past a failed segment: " + poisoned;
      continue;
    }
    try {
      if (k + 1 == rows.size()) {
        acc = tube_volume({4.0, tau, rows[k].H}, tol);
      } else {
        acc += integrate_or_throw(numerics::gauss_kronrod(density, rows[k].H, rows[k + 1].H, opts(tol)),
                                  "volume segment");
      }
      rows[k].volume = acc;
      rows[k].complement_volume = total - acc;
    } catch (const Error& e) {
      poisoned = e.what();
      rows[k].ok = false;
      if (rows[k].error.empty()) rows[k].error = e.what();
    }
  }
  return rows;
}

}  // namespace htube
