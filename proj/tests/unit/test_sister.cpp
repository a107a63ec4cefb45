#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "htube/curvature_verify.hpp"
#include "htube/error.hpp"
#include "htube/sister.hpp"
#include "oracles.hpp"

using namespace htube;
constexpr double pi = std::numbers::pi;

TEST_CASE("sister parameter map") {
  auto a = sister_params({4, 1, 0, 0});
  CHECK(a.kappa == 4);
  CHECK(a.tau == 1);
  CHECK(a.H == 0);
  auto b = sister_params({4, 1, 0, pi / 2});
  CHECK(std::abs(b.kappa) < 1e-14);
  CHECK(std::abs(b.tau) < 1e-15);
  CHECK(b.H == doctest::Approx(1.0));
  auto c = sister_params({4, 1, 0, pi / 4});
  CHECK(c.kappa == doctest::Approx(2.0));
  CHECK(c.tau == doctest::Approx(std::sqrt(0.5)));
  CHECK(c.H == doctest::Approx(std::sqrt(0.5)));
  CHECK(normalize_theta(-0.25) == doctest::Approx(pi - 0.25));
}

TEST_CASE("sister invariants hold for random inputs") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(-3, 3);
  for (int i = 0; i < 1000; ++i) {
    const SisterParams s{U(rng), U(rng), U(rng), U(rng)};
    const auto t = sister_params(s);
    const double scale = 1 + std::abs(s.kappa_t) + 4 * s.tau_t * s.tau_t;
    CHECK(std::abs((t.kappa - 4 * t.tau * t.tau) - (s.kappa_t - 4 * s.tau_t * s.tau_t)) < 1e-14 * scale);
    CHECK(std::abs((t.tau * t.tau + t.H * t.H) - (s.tau_t * s.tau_t + s.H_t * s.H_t)) < 1e-14 * scale);
  }
}

TEST_CASE("geodesic deformation formulas") {
  auto v = vertical_geodesic_deformation({pi / 2, 0.3, 0.9}, 1.2);
  CHECK(v.kappa_g == doctest::Approx(2 * 1.2 - 0.9));
  auto v0 = vertical_geodesic_deformation({0.7, 0.3, 2 * 1.2 * std::sin(0.7)}, 1.2);
  CHECK(std::abs(v0.kappa_g) < 1e-14);
  CHECK(vertical_geodesic_deformation({pi / 3, 0.1, 0.2}, 1).vertical_component == doctest::Approx(0.5));
  try {
    vertical_geodesic_deformation({0, 0.1, 0.2}, 1);
    FAIL("expected DegenerateProjection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateProjection);
  }

  for (double vt : {0.0, 0.4, 1.3})
    for (double vp : {-1.0, 0.5}) {
      auto h = horizontal_geodesic_deformation({0, vt, vp}, 0.7);
      REQUIRE(h.regular);
      CHECK(std::abs(*h.kappa_g) < 1e-15);
      CHECK(std::abs(*h.kappa_gP) < 1e-15);
      CHECK(*h.cos_angle == doctest::Approx(std::cos(vt)));
    }
  CHECK_FALSE(horizontal_geodesic_deformation({pi / 2, 0, 1}, 0.7).regular);
  auto e = horizontal_geodesic_deformation({pi / 2, pi / 2, 0.8}, 0.7);
  CHECK(std::abs(e.vertical_component) < 1e-15);
  CHECK(std::abs(*e.kappa_g) < 1e-15);
  CHECK(*e.kappa_gP == doctest::Approx(0.8));
  CHECK(GeodesicDeformation{0.2, 0.5, 0}.nu() == doctest::Approx(std::sin(0.5)));
}

TEST_CASE("helicoid immersion, angle function and induced metric") {
  auto p = helicoid_immersion(4, 1, 0.5, 0.0, 1.7);
  CHECK(std::abs(p.c[0]) < 1e-15);
  CHECK(std::abs(p.c[1]) < 1e-15);
  CHECK(p.c[2] == doctest::Approx(0.85));
  CHECK(std::abs(helicoid_angle_function(4, 0.3, 2 * 0.3 / 4, 0.0, 0.4)) < 1e-15);
  // Closed-form angle function against the numerically computed normal.
  const auto s = helicoid_surface(4, 1, 0.5);
  for (double u : {pi / 4, 0.3, 0.6})
    CHECK(std::abs(std::abs(fundamental_forms(s, u, 0.2).nu) - std::abs(helicoid_angle_function(4, 1, 0.5, u, 0.2))) < 1e-7);
  CHECK(induced_metric_rho(4, 1, 0.37) == doctest::Approx(0.25));
  CHECK(induced_metric_rho(4, 0.3, 0.0) == doctest::Approx(4 * 0.09 / 16));
  CHECK(induced_metric_rho(4, 0.3, pi / 4) == doctest::Approx(0.25));
}

TEST_CASE("helicoids are minimal") {
  for (auto [kt, tt, a] : {std::tuple{4.0, 1.0, 0.5}, {4.0, 0.4, 0.2}, {1.0, 0.3, 0.6}}) {
    const auto s = helicoid_surface(kt, tt, a);
    for (double u : {0.2, 0.5, 0.9})
      for (double v : {-1.0, 0.3, 2.0}) CHECK(std::abs(mean_curvature(s, u, v)) < 1e-5);
  }
}

TEST_CASE("ruling slope") {
  for (double phi : {0.1, 0.8, 2.0, 4.0}) {
    CHECK(helicoid_ruling_slope(4, 0.5, 0, phi) == doctest::Approx(1.0));
    CHECK(std::abs(helicoid_ruling_slope(4, 0.5, pi / 2, phi)) < 1e-15);
  }
  // The slope is v'(phi) of the curves orthogonal to the v-lines on the tube.
  for (const TubeParams t : {TubeParams{4, 0.5, 0.8}, {2, 1, 0.4}, {4, 1, 1}})
    for (double phi : {0.3, 1.0, 2.5}) {
      const auto f = numeric_fundamental_forms(t, phi, 0.2);
      CHECK(std::abs(-f.I(0, 1) / f.I(1, 1) - tube_ruling_slope(t, phi)) < 1e-7);
    }
}

TEST_CASE("lattice shear b(theta)") {
  for (auto [kt, tt] : {std::pair{4.0, 0.5}, {4.0, 0.8}, {1.0, 0.3}}) {
    CHECK(std::abs(lattice_b(kt, tt, 0) - 2 * pi) < 1e-9);
    CHECK(std::abs(lattice_b(kt, tt, pi / 2)) < 1e-9);
    double prev = lattice_b(kt, tt, 0);
    for (int i = 1; i < 20; ++i) {
      const double th = pi * i / 20;
      const double b = lattice_b(kt, tt, th);
      CHECK(b < prev);
      CHECK(std::abs(b + lattice_b(kt, tt, pi - th)) < 1e-8);
      prev = b;
    }
  }
  try {
    lattice_b(1, 1, pi / 2);
    FAIL("expected NonToralSister");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonToralSister);
  }
}

TEST_CASE("Jacobi amplitude") {
  for (double x : {0.3, 1.7, 5.0}) {
    CHECK(std::abs(jacobi_amplitude(x, 0) - x) < 1e-12);
    CHECK(std::abs(jacobi_amplitude(x, 1) - (2 * std::atan(std::exp(x)) - pi / 2)) < 1e-10);
    CHECK(std::abs(jacobi_amplitude(-x, 0.4) + jacobi_amplitude(x, 0.4)) < 1e-15);
    for (double m : {-3.0, -0.5, 0.5, 0.9})
      CHECK(std::abs(jacobi_amplitude(x, m) - oracle::amplitude_by_inversion(x, m)) < 1e-10);
  }
  CHECK(jacobi_amplitude(0, 0.7) == 0);
}

TEST_CASE("conformal profile") {
  const ConformalProfile round(4, 1);
  CHECK(std::abs(round.a() - 2 * pi) < 1e-10);
  for (double s : {0.5, 3.0, 11.0}) CHECK(std::abs(round.g(s) - s / 2) < 1e-10);

  const ConformalProfile cp(4, 0.5);
  CHECK(cp.g(0) == 0);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> U(-20, 40);
  for (int i = 0; i < 100; ++i) {
    const double s = U(rng);
    CHECK(std::abs(cp.g(s + cp.a()) - cp.g(s) - pi) < 1e-9);
    CHECK(std::abs(cp.dg(s + cp.a()) - cp.dg(s)) < 1e-9);
  }
  for (int i = 0; i <= 60; ++i) {
    const double s = 3 * cp.a() * i / 60;
    CHECK(std::abs(cp.g(s) - 0.5 * oracle::amplitude_by_inversion(0.5 * s, -3)) < 1e-8);
  }
}

TEST_CASE("conformal class") {
  const auto rect = normalized_conformal_class(4, 0.5, pi / 2);
  CHECK(std::abs(rect.raw_re) < 1e-9);
  const auto round = normalized_conformal_class(4, 1, 0);
  CHECK(round.raw_re == doctest::Approx(1.0));
  CHECK(round.raw_im == doctest::Approx(1.0));
  for (double th : {0.0, 0.4, 1.2, 2.5}) {
    const auto c = normalized_conformal_class(4, 0.5, th);
    CHECK(c.re > -0.5);
    CHECK(c.re <= 0.5);
  }
}
