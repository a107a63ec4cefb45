#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "htube/curvature_verify.hpp"
#include "htube/profile_curves.hpp"

using namespace htube;
constexpr double pi = std::numbers::pi;

namespace {
std::vector<double> grid(double a, double b, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(a + (b - a) * (i + 0.5) / n);
  return g;
}
}  // namespace

TEST_CASE("first fundamental form is symmetric and positive; |nu| <= 1") {
  const auto f = numeric_fundamental_forms({4, 1, 1}, pi / 4, 0.3);
  CHECK(std::abs(f.I(0, 1) - f.I(1, 0)) < 1e-12);
  CHECK(f.I.determinant() > 0);
  CHECK(std::abs(f.nu) <= 1 + 1e-8);
  // Nil at phi = 0: X_phi = h'(0) d/dz and X_v = d/dx + tau r d/dz, while the
  // contact form is dz + tau (y dx - x dy) with y = r, so I_12 = 2 tau r h'(0).
  const auto g = numeric_fundamental_forms({0, 0.5, 1}, 0.0, 0.0);
  const double hp = 2 * std::sqrt(1.25) / 4;
  CHECK(std::abs(g.I(0, 1) - 2 * 0.5 * 0.5 * hp) < 1e-8);
  CHECK(std::abs(g.I(0, 0) - hp * hp) < 1e-8);
}

TEST_CASE("finite-difference mean curvature equals H with the inward normal") {
  for (const TubeParams t : {TubeParams{4, 0.4, 1}, {-1, 1, 1}, {0, 0.5, 2}, {0, 0, 0.5}}) {
    for (const auto& s : mean_curvature_grid(t, grid(0, 2 * pi, 5), grid(-1, 1, 5))) {
      CHECK(s.H_num == doctest::Approx(t.H).epsilon(1e-5));
      CHECK(s.abs_err < 1e-5);
    }
  }
}

TEST_CASE("halving the step improves H at second order") {
  const TubeParams t{1, 0.3, 0.8};
  const double a = numeric_mean_curvature(t, 1.1, 0.2, 4e-3);
  const double b = numeric_mean_curvature(t, 1.1, 0.2, 2e-3);
  const double c = numeric_mean_curvature(t, 1.1, 0.2, 1e-3);
  CHECK(std::abs(a - b) / std::abs(b - c) >= 3.0);
}
