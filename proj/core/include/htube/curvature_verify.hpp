#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "htube/profile_curves.hpp"
#include "htube/space_models.hpp"

namespace htube {

/// A two-parameter immersion into a coordinate model of E(kappa, tau).
/// `inward`, when set, returns a coordinate vector the unit normal must have
/// positive inner product with; otherwise N follows the orientation X_p x X_q.
struct ParametricSurface {
  SpaceParams space;
  std::function<ModelPoint(double, double)> position;
  std::function<Eigen::Vector3d(double, double)> inward;
};

struct FundamentalForms {
  Eigen::Matrix2d I;
  Eigen::Matrix2d II;
  Eigen::Vector3d normal;  // coordinate components, unit for the ambient metric
  double nu = 0.0;         // <N, xi>
};

/// Central-difference forms. `step` is scaled by (1 + |parameter|); second
/// derivatives use ten times that step to keep roundoff below truncation.
FundamentalForms fundamental_forms(const ParametricSurface& s, double p, double q, double step = 1e-5);

double mean_curvature(const ParametricSurface& s, double p, double q, double step = 1e-5);

/// The tube X(phi, v), oriented so that N points toward the axis.
ParametricSurface tube_surface(const TubeParams& t);

FundamentalForms numeric_fundamental_forms(const TubeParams& t, double phi, double v, double step = 1e-5);
double numeric_mean_curvature(const TubeParams& t, double phi, double v, double step = 1e-5);

struct CurvatureSample {
  double phi = 0.0;
  double v = 0.0;
  double H_num = 0.0;
  double abs_err = 0.0;
};

std::vector<CurvatureSample> mean_curvature_grid(const TubeParams& t, const std::vector<double>& phis,
                                                 const std::vector<double>& vs, double step = 1e-5);

}  // namespace htube
