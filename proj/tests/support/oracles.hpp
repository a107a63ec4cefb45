#pragma once

// Reference computations that reach the library's answers by independent
// routes, for use as test oracles.

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "htube/curvature_verify.hpp"
#include "htube/numerics/quadrature.hpp"
#include "htube/numerics/roots.hpp"
#include "htube/profile_curves.hpp"
#include "htube/space_models.hpp"

namespace htube::oracle {

inline constexpr double pi = std::numbers::pi;

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on P_n.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0, p1 = z;
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
}

/// Incomplete elliptic integral of the first kind F(phi | m), Gauss-Legendre
/// on uniform panels (the integrand is smooth for m <= 1, phi < pi/2 at m = 1).
inline double elliptic_f(double phi, double m) {
  static const auto rule = [] {
    std::pair<std::vector<double>, std::vector<double>> r;
    gauss_legendre(24, r.first, r.second);
    return r;
  }();
  const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(phi) / 0.25)));
  const double width = phi / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double c = (p + 0.5) * width;
    for (std::size_t i = 0; i < rule.first.size(); ++i) {
      const double t = c + 0.5 * width * rule.first[i];
      const double s = std::sin(t);
      sum += 0.5 * width * rule.second[i] / std::sqrt(1.0 - m * s * s);
    }
  }
  return sum;
}

/// Jacobi amplitude as the inverse of F(. | m).
inline double amplitude_by_inversion(double x, double m) {
  if (x == 0.0) return 0.0;
  if (x < 0.0) return -amplitude_by_inversion(-x, m);
  // F grows at least like phi / sqrt(max(1, 1 - m)) and at most like phi / sqrt(min(1, 1 - m)).
  double hi = x * std::sqrt(std::max(1.0, 1.0 - m)) + 1.0;
  if (m == 1.0) hi = std::min(hi, 0.5 * pi * (1.0 - 1e-15));
  return numerics::bracketed_root([&](double p) { return elliptic_f(p, m) - x; }, 0.0, hi, {1e-14, 400});
}

/// Riemannian area element sqrt(det I) of the tube at (phi, v).
inline double tube_area_element(const TubeParams& t, double phi, double v) {
  return std::sqrt(numeric_fundamental_forms(t, phi, v).I.determinant());
}

/// Area by trapezoid in phi (the integrand is smooth and periodic) over one
/// fundamental domain v in [0, v_period].
inline double tube_area_by_surface_integral(const TubeParams& t, double v_period, int n_phi = 256) {
  double sum = 0.0;
  for (int i = 0; i < n_phi; ++i) sum += tube_area_element(t, 2.0 * pi * i / n_phi, 0.3);
  return sum * (2.0 * pi / n_phi) * v_period;
}

/// det(dX/dw, dX/dphi, dX/dv) sqrt(det g) for the family of tubes with mean
/// curvature w, by central differences in all three parameters. Positive where
/// the family foliates; it changes sign where neighbouring tubes cross.
inline double tube_family_jacobian(const TubeParams& t, double w, double phi, double v) {
  auto X = [&](double ww, double pp, double vv) {
    const ModelPoint q = tube_immersion({t.kappa, t.tau, ww}, pp, vv);
    return Eigen::Vector3d(q.c[0], q.c[1], q.c[2]);
  };
  const double hw = 1e-6 * (1.0 + w), hp = 1e-6, hv = 1e-6;
  Eigen::Matrix3d J;
  J.col(0) = (X(w + hw, phi, v) - X(w - hw, phi, v)) / (2.0 * hw);
  J.col(1) = (X(w, phi + hp, v) - X(w, phi - hp, v)) / (2.0 * hp);
  J.col(2) = (X(w, phi, v + hv) - X(w, phi, v - hv)) / (2.0 * hv);
  const ModelPoint p = tube_immersion({t.kappa, t.tau, w}, phi, v);
  return J.determinant() * std::sqrt(metric(t.space(), p).determinant());
}

/// Signed volume swept by the tubes of mean curvature w in [H, inf). This is
/// the solid bounded by the H-tube when the family foliates. Gauss-Legendre in w after w = H + s/(1-s), trapezoid
/// in phi, and v in [0, v_period] (the family is invariant along v).
inline double tube_volume_by_jacobian(const TubeParams& t, double v_period, int n_s = 64, int n_phi = 128) {
  std::vector<double> x, wt;
  gauss_legendre(n_s, x, wt);
  double total = 0.0;
  for (int i = 0; i < n_s; ++i) {
    const double s = 0.5 * (x[i] + 1.0);
    const double w = t.H + s / (1.0 - s);
    const double dw_ds = 1.0 / ((1.0 - s) * (1.0 - s));
    double inner = 0.0;
    for (int j = 0; j < n_phi; ++j) inner += tube_family_jacobian(t, w, 2.0 * pi * (j + 0.5) / n_phi, 0.0);
    inner *= 2.0 * pi / n_phi;
    total += 0.5 * wt[i] * dw_ds * inner;
  }
  return total * v_period;
}

}  // namespace htube::oracle
