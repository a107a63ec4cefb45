#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "htube/space_models.hpp"

namespace htube {

struct TubeParams {
  double kappa = 0.0;
  double tau = 0.0;
  double H = 0.0;

  SpaceParams space() const { return {kappa, tau}; }
};

/// A: kappa > 0 (Cartan model of a Berger sphere), B: |kappa| < 1e-7 (Cartan
/// model, Heisenberg formulas), C: kappa < 0 (half-space model).
enum class ProfileCase { A, B, C };

inline constexpr double kFlatKappa = 1e-7;

ProfileCase profile_case(double kappa);

/// Throws SupercriticalViolation unless 4H^2 + kappa > 0, then NonpositiveH
/// unless H > 0. H = 0 tori are handled by the helicoid parametrization.
void validate_tube(const TubeParams& t);

struct ProfilePoint {
  double phi = 0.0;
  double r = 0.0;
  double h = 0.0;
};

/// Closed-form profile normalized by h(0) = 0.
ProfilePoint closed_form_profile(const TubeParams& t, double phi);

/// dr/dphi and dh/dphi; one expression covers every sign of kappa.
struct ProfileSlope {
  double dr = 0.0;
  double dh = 0.0;
};
ProfileSlope profile_derivative(const TubeParams& t, double phi);

struct OdeState {
  double u = 0.0;
  double r = 0.0;
  double h = 0.0;
  double phi = 0.0;
};

struct OdeRhs {
  double dr = 0.0;
  double dh = 0.0;
  double dphi = 0.0;
};

/// Right-hand side of the profile system in the curve parameter u.
/// Throws DomainViolation when a radicand or denominator is nonpositive.
OdeRhs profile_ode_rhs(const TubeParams& t, const OdeState& s);

/// First integral of the profile system; tubes are the E = 0 orbits.
double energy(const TubeParams& t, double r, double phi);

struct ProfileCurve {
  TubeParams params;
  std::vector<ProfilePoint> samples;  // strictly increasing phi
  double max_energy_drift = 0.0;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
};

/// Integrates the u-system from the closed-form seed at phi0 until phi
/// reaches phi1. Samples are taken at every accepted step, plus
/// (dense_per_step - 1) interpolated points inside each step.
ProfileCurve integrate_profile(const TubeParams& t, double phi0, double phi1, double tol,
                               std::size_t dense_per_step = 1);

/// Invariant immersion X evaluated at a profile point (r, h) and orbit parameter v.
ModelPoint tube_point(const TubeParams& t, double r, double h, double v);

/// X(phi, v) with (r, h) from the closed form.
ModelPoint tube_immersion(const TubeParams& t, double phi, double v);

struct NormalConvexity {
  Eigen::Vector2d eta;
  double convexity = 0.0;  // r' h'' - r'' h'
};

NormalConvexity profile_normal_and_convexity(const TubeParams& t, double phi);

/// The quotient printed for the round case kappa = 4 tau^2 = 4; it agrees with
/// the general convexity only there.
double round_convexity_display(double H, double tau, double phi);

/// Winding number about the origin of a closed polygon.
int winding_number(const std::vector<Eigen::Vector2d>& loop);

}  // namespace htube
