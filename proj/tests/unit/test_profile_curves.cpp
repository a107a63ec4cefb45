#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "htube/error.hpp"
#include "htube/numerics/quadrature.hpp"
#include "htube/profile_curves.hpp"

using namespace htube;
constexpr double pi = std::numbers::pi;

namespace {

const std::vector<TubeParams> kTriples = {
    {4, 1, 1}, {4, 0.5, 0.7}, {4, 1.5, 0.5}, {1, 0.3, 0.8}, {1, 2, 1.2},
    {0, 0.5, 1}, {0, 0, 0.5}, {-1, 1, 1}, {-4, 0.3, 1.2},
};

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::StepFailure;
}

}  // namespace

TEST_CASE("closed-form reference values") {
  auto a = closed_form_profile({4, 1, 1}, 0.0);
  CHECK(a.r == doctest::Approx(pi / 8).epsilon(1e-15));
  CHECK(a.h == 0.0);
  auto b = closed_form_profile({4, 0, 1}, pi / 2);
  CHECK(std::abs(b.r) < 1e-15);
  CHECK(std::abs(b.h - 0.311612) < 1e-6);
  CHECK(std::abs(b.h - std::atanh(1 / std::sqrt(2.0)) / (2 * std::sqrt(2.0))) < 1e-14);
  auto c = closed_form_profile({0, 0.5, 1}, 0.0);
  CHECK(c.r == doctest::Approx(0.5));
}

TEST_CASE("h is the integral of dh/dphi from 0") {
  for (const auto& t : kTriples) {
    for (double phi : {0.4, 1.3, pi / 2, 2.9, 5.0}) {
      numerics::QuadOptions o;
      o.abs_tol = 1e-13;
      const double ref = numerics::gauss_kronrod([&](double s) { return profile_derivative(t, s).dh; }, 0.0, phi, o).value;
      CHECK(std::abs(closed_form_profile(t, phi).h - ref) < 1e-11);
    }
  }
}

TEST_CASE("phi-derivatives match central differences") {
  for (const auto& t : kTriples) {
    for (double phi : {0.1, 1.0, 2.0, 3.0, 4.4}) {
      const double d = 1e-5;
      const auto p = closed_form_profile(t, phi + d), m = closed_form_profile(t, phi - d);
      const auto s = profile_derivative(t, phi);
      CHECK(std::abs((p.r - m.r) / (2 * d) - s.dr) < 1e-6);
      CHECK(std::abs((p.h - m.h) / (2 * d) - s.dh) < 1e-6);
    }
  }
}

TEST_CASE("symmetry and periodicity") {
  for (const auto& t : kTriples) {
    for (double phi : {0.3, 1.1, 2.5}) {
      const auto p = closed_form_profile(t, phi), m = closed_form_profile(t, -phi);
      const auto q = closed_form_profile(t, phi + 2 * pi);
      CHECK(std::abs(p.r - m.r) < 1e-14);
      CHECK(std::abs(p.h + m.h) < 1e-14);
      CHECK(std::abs(p.r - q.r) < 1e-13);
      CHECK(std::abs(p.h - q.h) < 1e-13);
    }
  }
}

TEST_CASE("kappa near zero joins the Heisenberg formulas") {
  for (double phi : {0.2, 1.0, pi / 2, 2.7}) {
    const auto nil = closed_form_profile({0, 0.5, 1}, phi);
    for (double k : {1e-6, -1e-6}) {
      const auto p = closed_form_profile({k, 0.5, 1}, phi);
      CHECK(std::abs(p.r - nil.r) < 1e-5);
      CHECK(std::abs(p.h - nil.h) < 1e-5);
    }
  }
}

TEST_CASE("ODE right-hand side at reference states") {
  auto a = profile_ode_rhs({4, 1, 1}, {0, 0, 0, pi / 2});
  CHECK(a.dr == doctest::Approx(-0.5));
  CHECK(std::abs(a.dh) < 1e-15);
  CHECK(a.dphi == doctest::Approx(1.0));
  auto b = profile_ode_rhs({0, 0.5, 1}, {0, 0, 0, 0});
  CHECK(std::abs(b.dr) < 1e-15);
  CHECK(b.dh == doctest::Approx(1.0));
  CHECK(b.dphi == doctest::Approx(2.0));
  auto c = profile_ode_rhs({-1, 1, 1}, {0, 0, 0, 0});
  CHECK(c.dh == doctest::Approx(1.0));
  CHECK(c.dphi == doctest::Approx(2.0));
}

TEST_CASE("energy first integral") {
  for (double phi : {0.0, 0.7, 2.0}) CHECK(std::abs(energy({4, 1, 1}, closed_form_profile({4, 1, 1}, phi).r, phi)) < 1e-14);
  CHECK(std::abs(energy({0, 0.5, 1}, 0.5, 0.0)) < 1e-15);
  CHECK(energy({4, 1, 1}, 0.0, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("integrated profile matches the closed form") {
  for (const auto& t : kTriples) {
    const auto curve = integrate_profile(t, 0.0, 2 * pi, 1e-10);
    double worst = 0.0;
    for (const auto& s : curve.samples) {
      const auto c = closed_form_profile(t, s.phi);
      worst = std::max({worst, std::abs(s.r - c.r), std::abs(s.h - c.h)});
    }
    CHECK(worst < 1e-8);
    CHECK(curve.max_energy_drift < 1e-8);
    for (std::size_t i = 1; i < curve.samples.size(); ++i) REQUIRE(curve.samples[i].phi > curve.samples[i - 1].phi);
  }
  const auto one = integrate_profile({4, 1, 1}, 0.7, 0.7, 1e-10);
  REQUIRE(one.samples.size() == 1);
  CHECK(one.samples[0].r == closed_form_profile({4, 1, 1}, 0.7).r);
}

TEST_CASE("immersion reference values") {
  auto nil = tube_immersion({0, 0.5, 1}, 0.0, 2.0);
  CHECK((nil.xyz() - Eigen::Vector3d(2, 0.5, 0.5)).norm() < 1e-15);
  auto ber = tube_immersion({4, 1, 1}, 0.0, 0.0);
  CHECK(ber.c[0] == doctest::Approx(std::tan(pi / 8 + pi / 4)));
  CHECK(std::abs(ber.c[1]) < 1e-15);
  auto sl = tube_immersion({-1, 1, 1}, pi / 2, 0.0);
  CHECK(sl.model == Model::HalfSpace);
  CHECK(std::abs(sl.c[0]) < 1e-15);
  CHECK(sl.c[1] == doctest::Approx(1.0));
}

TEST_CASE("outward normal, convexity and winding") {
  for (const auto& t : kTriples) {
    const auto n0 = profile_normal_and_convexity(t, 0.0);
    CHECK(n0.eta[0] == doctest::Approx(-2 * std::sqrt(t.H * t.H + t.tau * t.tau) / (4 * t.H * t.H + t.kappa)));
    CHECK(std::abs(n0.eta[1]) < 1e-15);
    std::vector<Eigen::Vector2d> loop;
    for (int i = 0; i < 720; ++i) {
      const auto nc = profile_normal_and_convexity(t, 2 * pi * i / 720);
      CHECK(nc.convexity >= -1e-14);
      loop.push_back(nc.eta);
    }
    CHECK(winding_number(loop) == 1);
  }
  CHECK(round_convexity_display(1.3, 1.0, pi / 2) == doctest::Approx(1 / (4 * 1.3 * 1.3)));
}

TEST_CASE("parameter validation") {
  CHECK(kind_of([] { closed_form_profile({-4, 0.3, 0.9}, 0.0); }) == ErrorKind::SupercriticalViolation);
  CHECK(kind_of([] { closed_form_profile({4, 1, 0}, 0.0); }) == ErrorKind::NonpositiveH);
  CHECK(kind_of([] { closed_form_profile({0, 1, -1}, 0.0); }) == ErrorKind::NonpositiveH);
}
