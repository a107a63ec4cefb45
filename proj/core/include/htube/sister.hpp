#pragma once

#include <optional>

#include "htube/curvature_verify.hpp"
#include "htube/numerics/ode.hpp"
#include "htube/profile_curves.hpp"
#include "htube/space_models.hpp"

namespace htube {

/// Source surface data in E(kappa_t, tau_t) plus the phase angle theta.
struct SisterParams {
  double kappa_t = 0.0;
  double tau_t = 0.0;
  double H_t = 0.0;
  double theta = 0.0;
};

/// Reduces theta modulo pi into [0, pi).
double normalize_theta(double theta);

/// tau + iH = e^{i theta}(tau_t + i H_t) and kappa - 4 tau^2 = kappa_t - 4 tau_t^2.
TubeParams sister_params(const SisterParams& s);

/// Rotation angle of the normal along a geodesic of the minimal source surface.
struct GeodesicDeformation {
  double theta = 0.0;
  double vartheta = 0.0;
  double vartheta_prime = 0.0;

  /// Angle function along a horizontal geodesic.
  double nu() const;
};

struct VerticalDeformation {
  double vertical_component = 0.0;  // <gamma', xi>
  double kappa_g = 0.0;             // of the projection, w.r.t. pi_* N
};

/// Image of a vertical geodesic. Throws DegenerateProjection when sin(theta) = 0.
VerticalDeformation vertical_geodesic_deformation(const GeodesicDeformation& d, double H);

struct HorizontalDeformation {
  double vertical_component = 0.0;  // <gamma', xi>
  bool regular = false;             // cos^2 theta + nu^2 sin^2 theta != 0
  std::optional<double> kappa_g;    // of the projection alpha
  std::optional<double> kappa_gP;   // of gamma inside the vertical cylinder over alpha
  std::optional<double> cos_angle;  // between the surface and that cylinder
};

/// Image of a horizontal geodesic in E(kappa, tau).
HorizontalDeformation horizontal_geodesic_deformation(const GeodesicDeformation& d, double tau);

/// Spherical helicoid of pitch a in the Cartan model of E(kappa_t, tau_t).
ModelPoint helicoid_immersion(double kappa_t, double tau_t, double a, double u, double v);

/// Closed-form angle function <N, xi> of the helicoid (independent of v).
double helicoid_angle_function(double kappa_t, double tau_t, double a, double u, double v);

ParametricSurface helicoid_surface(double kappa_t, double tau_t, double a);

/// Warped-product factor: ds^2 = du^2 + rho(u) dv^2 on the minimal torus.
double induced_metric_rho(double kappa_t, double tau_t, double u);

/// v'(phi) of the curve h_v orthogonal to the level sets of the angle function,
/// written in the sister data.
double helicoid_ruling_slope(double kappa_t, double tau_t, double theta, double phi);

/// Same slope in terms of the tube parameters (kappa > 0).
double tube_ruling_slope(const TubeParams& t, double phi);

/// Shear of the first lattice generator. Throws NonToralSister when the sister
/// space has kappa <= 0.
double lattice_b(double kappa_t, double tau_t, double theta, double tol = 1e-10);

/// Solves g' = sqrt(rho(g)) from g(0) = 0; the period a satisfies g(a) = 2 pi / sqrt(kappa_t).
class ConformalProfile {
public:
  ConformalProfile(double kappa_t, double tau_t, double tol = 1e-12);

  double a() const { return a_; }
  double kappa_t() const { return kappa_t_; }
  double tau_t() const { return tau_t_; }
  /// Shift of g over one period: 2 pi / sqrt(kappa_t).
  double shift() const { return shift_; }

  double g(double s) const;
  double dg(double s) const;

  /// Range of s covered directly by the integrated table; beyond it, values are
  /// obtained from quasi-periodicity.
  double table_extent() const { return extent_; }

private:
  double kappa_t_, tau_t_;
  double a_ = 0.0, shift_ = 0.0, extent_ = 0.0;
  numerics::OdeSolution<1> table_;
};

ConformalProfile conformal_profile(double kappa_t, double tau_t, double tol = 1e-12);

/// Jacobi amplitude am(x | m) for m <= 1, by integrating am' = dn, dn' = -m sn cn.
double jacobi_amplitude(double x, double m, double tol = 1e-12);

struct ConformalClass {
  /// (b / 2pi, a / 2pi) before any reduction.
  double raw_re = 0.0;
  double raw_im = 0.0;
  /// Lattice ratio (b + i a) / (4 pi), real part reduced into (-1/2, 1/2].
  double re = 0.0;
  double im = 0.0;
};

/// Conformal class of the sister torus. Throws NonToralSister when kappa <= 0.
ConformalClass normalized_conformal_class(double kappa_t, double tau_t, double theta, double tol = 1e-10);

}  // namespace htube
