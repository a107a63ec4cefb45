#include "htube/foliation.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "htube/error.hpp"
#include "htube/numerics/roots.hpp"

namespace htube {

namespace {
constexpr double kCriterionTie = 1e-12;
}

double solve_x0() {
  static const double x0 = numerics::bracketed_root(
      [](double x) { return x * std::atanh(x) - 1.0; }, 0.5, 0.99, {1e-16, 400});
  return x0;
}

double max_height(const TubeParams& t) { return closed_form_profile(t, 0.5 * std::numbers::pi).h; }

HeightSlope d_max_height_dH(const TubeParams& t) {
  validate_tube(t);
  const double a2 = 4.0 * t.H * t.H + t.kappa;
  const double d = t.kappa - 4.0 * t.tau * t.tau;
  if (d > 0.0) {
    const double q = std::sqrt(d / a2);
    return {2.0 / a2 * (q * std::atanh(q) - 1.0), false};
  }
  if (d < 0.0) {
    const double q = std::sqrt(-d / a2);
    return {-2.0 / a2 * (q * std::atan(q) + 1.0), false};
  }
  const double e = 1e-5 * t.H;
  TubeParams lo = t, hi = t;
  lo.H -= e;
  hi.H += e;
  return {(max_height(hi) - max_height(lo)) / (2.0 * e), true};
}

std::string_view to_string(FoliatedSet s) {
  switch (s) {
    case FoliatedSet::ComplementOfGamma: return "ComplementOfGamma";
    case FoliatedSet::ComplementOfGammaAndGammaPrime: return "ComplementOfGammaAndGammaPrime";
    case FoliatedSet::None: return "None";
  }
  return "Unknown";
}

FoliationReport foliation_criterion(const SpaceParams& p) {
  FoliationReport r;
  r.x0 = solve_x0();
  r.criterion_value = (1.0 - r.x0 * r.x0) * p.kappa - 4.0 * p.tau * p.tau;
  // The criterion is a non-strict inequality, so a tie counts as foliating.
  r.foliates = r.criterion_value <= kCriterionTie;
  if (r.foliates) {
    r.foliated_set = p.kappa > 0.0 ? FoliatedSet::ComplementOfGammaAndGammaPrime
                                   : FoliatedSet::ComplementOfGamma;
  } else {
    r.H0 = std::sqrt(r.criterion_value / (4.0 * r.x0 * r.x0));
  }
  return r;
}

double embedding_height_bound(const SpaceParams& p) {
  if (p.kappa <= 0.0 || p.tau == 0.0) return std::numeric_limits<double>::infinity();
  return 2.0 * std::numbers::pi * std::abs(p.tau) / p.kappa;
}

bool embeddedness(const TubeParams& t) {
  validate_tube(t);
  const double bound = embedding_height_bound(t.space());
  if (std::isinf(bound)) return true;
  return max_height(t) < bound;
}

TangencyScan tangency_scan(const SpaceParams& p, const std::vector<double>& H_grid) {
  TangencyScan scan;
  const double bound = embedding_height_bound(p);
  scan.rows.reserve(H_grid.size());
  for (double H : H_grid) {
    const TubeParams t{p.kappa, p.tau, H};
    const double mh = max_height(t);
    scan.rows.push_back({H, mh, mh < bound, false, false});
  }
  for (std::size_t i = 0; i + 1 < scan.rows.size(); ++i) {
    if (scan.rows[i + 1].max_height >= scan.rows[i].max_height) {
      scan.monotone_decreasing = false;
      scan.increasing_intervals.emplace_back(scan.rows[i].H, scan.rows[i + 1].H);
    }
  }
  for (std::size_t i = 1; i + 1 < scan.rows.size(); ++i) {
    const double prev = scan.rows[i - 1].max_height, cur = scan.rows[i].max_height,
                 next = scan.rows[i + 1].max_height;
    if (cur > prev && cur >= next) {
      scan.rows[i].local_max = true;
      ++scan.interior_maxima;
    }
    if (cur < prev && cur <= next) scan.rows[i].local_min = true;
  }
  return scan;
}

}  // namespace htube
