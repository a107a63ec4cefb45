#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "htube/profile_curves.hpp"
#include "htube/space_models.hpp"

namespace htube {

/// Unique positive root of x * atanh(x) = 1.
double solve_x0();

/// Height of the profile over the axis at phi = pi/2, where it peaks.
double max_height(const TubeParams& t);

struct HeightSlope {
  double value = 0.0;
  bool finite_difference = false;  // set when kappa = 4 tau^2 and no closed form applies
};

/// d/dH of max_height.
HeightSlope d_max_height_dH(const TubeParams& t);

enum class FoliatedSet { ComplementOfGamma, ComplementOfGammaAndGammaPrime, None };
std::string_view to_string(FoliatedSet s);

struct FoliationReport {
  double x0 = 0.0;
  double criterion_value = 0.0;  // (1 - x0^2) kappa - 4 tau^2
  bool foliates = false;
  std::optional<double> H0;      // critical mean curvature when the foliation fails
  FoliatedSet foliated_set = FoliatedSet::None;
};

FoliationReport foliation_criterion(const SpaceParams& p);

/// Vertical period bound 2 pi |tau| / kappa beyond which a Berger tube
/// overlaps its own translate. Infinite when kappa <= 0 or tau = 0.
double embedding_height_bound(const SpaceParams& p);

bool embeddedness(const TubeParams& t);

struct TangencyRow {
  double H = 0.0;
  double max_height = 0.0;
  bool embedded = true;
  bool local_max = false;
  bool local_min = false;
};

struct TangencyScan {
  std::vector<TangencyRow> rows;
  /// Grid intervals [H_i, H_{i+1}] on which max_height does not decrease.
  std::vector<std::pair<double, double>> increasing_intervals;
  std::size_t interior_maxima = 0;
  bool monotone_decreasing = true;
};

TangencyScan tangency_scan(const SpaceParams& p, const std::vector<double>& H_grid);

}  // namespace htube
