#pragma once

#include <string>
#include <vector>

#include "htube/profile_curves.hpp"

namespace htube {

// Area and volume are stated for kappa = 4; rescale other spaces first.

struct Rescaled {
  TubeParams params;     // kappa = 4
  double area_factor;    // multiply a kappa = 4 area by this to get the original
  double volume_factor;  // likewise for volumes
};

/// Homothety taking E(kappa, tau) (kappa > 0) to E(4, tau').
Rescaled rescale_to_kappa4(const TubeParams& t);

/// Area of the tube over one fundamental domain (kappa = 4, H > 0).
double tube_area(const TubeParams& t, double tol = 1e-10);

/// Integral over u in [0, 2 pi] of the signed volume element at mean curvature w.
double volume_density(double tau, double w, double tol = 1e-12);

/// Signed volume enclosed by the tube (kappa = 4, tau > 0, H > 0).
double tube_volume(const TubeParams& t, double tol = 1e-10);

/// Volume of the Berger sphere: 32 tau pi^2 / kappa^2.
double ambient_volume(const SpaceParams& p);

struct IsoperimetricRecord {
  double H = 0.0;
  double area = 0.0;
  double volume = 0.0;
  double complement_volume = 0.0;
  bool foliating = true;  // false where the tube family fails to foliate
  bool ok = true;
  std::string error;      // set when !ok
};

/// Rows for H = H_start, H_start + H_step, ... up to H_stop (inclusive within
/// half a step), sorted by H. Volumes are accumulated from the largest H down,
/// so each row costs one finite segment.
std::vector<IsoperimetricRecord> isoperimetric_sweep(double tau, double H_start, double H_stop, double H_step,
                                                     double tol = 1e-10);

/// Same, for an explicit increasing grid.
std::vector<IsoperimetricRecord> isoperimetric_sweep(double tau, const std::vector<double>& H_grid,
                                                     double tol = 1e-10);

std::vector<double> make_grid(double start, double stop, double step);

}  // namespace htube
