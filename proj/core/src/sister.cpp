#include "htube/sister.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "htube/error.hpp"
#include "htube/numerics/quadrature.hpp"

namespace htube {

namespace {

using std::numbers::pi;

constexpr double kRegularityTol = 1e-14;
constexpr std::size_t kTablePeriods = 8;

void require_berger_source(double kappa_t, double tau_t, const char* op) {
  if (!(kappa_t > 0.0) || tau_t == 0.0) {
    std::ostringstream msg;
    msg << op << " needs kappa_t > 0 and tau_t != 0 (got " << kappa_t << ", " << tau_t << ")";
    throw Error(ErrorKind::DomainViolation, msg.str());
  }
}

double sister_kappa(double kappa_t, double tau_t, double theta) {
  const double s = std::sin(theta);
  return kappa_t - 4.0 * tau_t * tau_t * s * s;
}

void require_toral(double kappa_t, double tau_t, double theta) {
  const double k = sister_kappa(kappa_t, tau_t, theta);
  if (!(k > 0.0)) {
    std::ostringstream msg;
    msg << "sister space has kappa = " << k << " <= 0; the sister surface is a cylinder";
    throw Error(ErrorKind::NonToralSister, msg.str());
  }
}

}  // namespace

double normalize_theta(double theta) {
  double t = std::fmod(theta, pi);
  if (t < 0.0) t += pi;
  if (t >= pi) t = 0.0;
  return t;
}

TubeParams sister_params(const SisterParams& s) {
  const double c = std::cos(s.theta), sn = std::sin(s.theta);
  const double tau = s.tau_t * c - s.H_t * sn;
  const double H = s.tau_t * sn + s.H_t * c;
  const double kappa = s.kappa_t - 4.0 * s.tau_t * s.tau_t + 4.0 * tau * tau;
  return {kappa, tau, H};
}

double GeodesicDeformation::nu() const { return std::sin(vartheta); }

VerticalDeformation vertical_geodesic_deformation(const GeodesicDeformation& d, double H) {
  const double s = std::sin(d.theta);
  if (std::abs(s) < kRegularityTol)
    throw Error(ErrorKind::DegenerateProjection, "sin(theta) = 0: the conjugate curve is vertical");
  return {std::cos(d.theta), 2.0 * H - d.vartheta_prime / s};
}

HorizontalDeformation horizontal_geodesic_deformation(const GeodesicDeformation& d, double tau) {
  const double ct = std::cos(d.theta), st = std::sin(d.theta);
  const double cv = std::cos(d.vartheta), nu = d.nu();
  const double D = ct * ct + nu * nu * st * st;
  HorizontalDeformation out;
  out.vertical_component = st * cv;
  out.regular = D > kRegularityTol;
  if (out.regular) {
    const double sD = std::sqrt(D);
    out.kappa_g = (2.0 * tau * D - d.vartheta_prime * ct) * st * cv / (D * sD);
    out.kappa_gP = d.vartheta_prime * std::sin(d.vartheta) * st / sD;
    out.cos_angle = ct * cv / sD;
  }
  return out;
}

ModelPoint helicoid_immersion(double kappa_t, double tau_t, double a, double u, double v) {
  (void)tau_t;
  if (!(kappa_t > 0.0)) throw Error(ErrorKind::DomainViolation, "helicoids need kappa_t > 0");
  const double sk = std::sqrt(kappa_t);
  const double arg = 0.5 * sk * u;
  if (!(std::abs(arg) < 0.5 * pi)) throw Error(ErrorKind::DomainViolation, "tangent singularity of the helicoid");
  const double rho = 2.0 / sk * std::tan(arg);
  return ModelPoint::cartan(rho * std::cos(v), rho * std::sin(v), a * v);
}

double helicoid_angle_function(double kappa_t, double tau_t, double a, double u, double /*v*/) {
  const double k = kappa_t, t = tau_t, sk = std::sqrt(kappa_t);
  const double c1 = std::cos(sk * u), c2 = std::cos(2.0 * sk * u);
  const double den = 2.0 * a * a * k * k - 8.0 * a * k * t + 8.0 * t * (a * k - 2.0 * t) * c1 + k +
                     12.0 * t * t - (k - 4.0 * t * t) * c2;
  return std::sqrt(2.0 * k) * std::sin(sk * u) / std::sqrt(den);
}

ParametricSurface helicoid_surface(double kappa_t, double tau_t, double a) {
  ParametricSurface s;
  s.space = {kappa_t, tau_t};
  s.position = [=](double u, double v) { return helicoid_immersion(kappa_t, tau_t, a, u, v); };
  return s;
}

double induced_metric_rho(double kappa_t, double tau_t, double u) {
  const double sk = std::sqrt(kappa_t);
  const double s = std::sin(u * sk), c = std::cos(u * sk);
  return s * s / kappa_t + 4.0 * tau_t * tau_t * c * c / (kappa_t * kappa_t);
}

double helicoid_ruling_slope(double kappa_t, double tau_t, double theta, double phi) {
  const double k = sister_kappa(kappa_t, tau_t, theta);
  if (k < 0.0) throw Error(ErrorKind::DomainViolation, "sister kappa is negative");
  const double st = std::sin(theta), ct = std::cos(theta);
  const double c2 = std::cos(phi) * std::cos(phi), s2 = std::sin(phi) * std::sin(phi);
  const double den = std::sqrt(kappa_t * c2 + 4.0 * tau_t * tau_t * st * st * s2) *
                     std::sqrt(c2 + st * st * s2);
  // At cos(phi) = 0 the quotient is 0/0; its limit is 1 for theta = 0 and 0 otherwise.
  if (den == 0.0) return st == 0.0 ? ct * std::sqrt(k) / std::sqrt(kappa_t) : 0.0;
  return ct * std::sqrt(k) * c2 / den;
}

double tube_ruling_slope(const TubeParams& t, double phi) {
  validate_tube(t);
  if (!(t.kappa > 0.0)) throw Error(ErrorKind::DomainViolation, "ruling slope needs kappa > 0");
  const double c2 = std::cos(phi) * std::cos(phi);
  return t.tau * std::sqrt(t.kappa) * c2 /
         (std::sqrt(4.0 * t.H * t.H + t.kappa * c2) * std::sqrt(t.H * t.H + t.tau * t.tau * c2));
}

double lattice_b(double kappa_t, double tau_t, double theta, double tol) {
  require_berger_source(kappa_t, tau_t, "lattice_b");
  require_toral(kappa_t, tau_t, theta);
  if (!(tol > 0.0)) throw Error(ErrorKind::DomainViolation, "tolerance must be positive");
  // Near sin(theta) = 0 the integrand is constant apart from notches of width
  // O(sin theta) at cos(phi) = 0, which contribute below any usable tolerance.
  if (std::abs(std::sin(theta)) < 1e-12)
    return 2.0 * pi * std::cos(theta) * std::sqrt(sister_kappa(kappa_t, tau_t, theta) / kappa_t);
  const auto res = numerics::adaptive_simpson(
      [&](double phi) { return helicoid_ruling_slope(kappa_t, tau_t, theta, phi); }, 0.0, 2.0 * pi, tol);
  if (!res.converged) throw Error(ErrorKind::QuadratureFailure, "lattice integral did not converge");
  return res.value;
}

ConformalProfile::ConformalProfile(double kappa_t, double tau_t, double tol)
    : kappa_t_(kappa_t), tau_t_(tau_t) {
  require_berger_source(kappa_t, tau_t, "conformal_profile");
  shift_ = 2.0 * pi / std::sqrt(kappa_t);
  using numerics::Vec;
  auto rhs = [&](double, const Vec<1>& y) { return Vec<1>{std::sqrt(induced_metric_rho(kappa_t_, tau_t_, y[0]))}; };
  numerics::OdeOptions opts;
  opts.rtol = tol;
  opts.atol = tol;
  // g' is bounded below by min(1, 2|tau_t|/sqrt(kappa_t)) / sqrt(kappa_t), which bounds a.
  const double gmin = std::min(1.0, 2.0 * std::abs(tau_t) / std::sqrt(kappa_t)) / std::sqrt(kappa_t);
  const double s_cap = 2.0 * shift_ / gmin;
  const auto first = numerics::integrate_until<1>(
      rhs, 0.0, Vec<1>{0.0}, s_cap, [&](double, const Vec<1>& y) { return y[0] - shift_; }, opts);
  if (!first.event_triggered()) throw Error(ErrorKind::StepFailure, "g never reached one period");
  a_ = first.t_end();
  extent_ = static_cast<double>(kTablePeriods) * a_;
  table_ = numerics::integrate<1>(rhs, 0.0, Vec<1>{0.0}, extent_, opts);
}

double ConformalProfile::g(double s) const {
  // g is odd because rho is even.
  if (s < 0.0) return -g(-s);
  if (s <= extent_) return table_.at(s)[0];
  const double n = std::floor(s / a_);
  return n * shift_ + table_.at(s - n * a_)[0];
}

double ConformalProfile::dg(double s) const {
  return std::sqrt(induced_metric_rho(kappa_t_, tau_t_, g(s)));
}

ConformalProfile conformal_profile(double kappa_t, double tau_t, double tol) {
  return ConformalProfile(kappa_t, tau_t, tol);
}

double jacobi_amplitude(double x, double m, double tol) {
  if (!(m <= 1.0)) throw Error(ErrorKind::DomainViolation, "jacobi_amplitude supports m <= 1");
  if (x == 0.0) return 0.0;
  if (x < 0.0) return -jacobi_amplitude(-x, m, tol);
  using numerics::Vec;
  auto rhs = [m](double, const Vec<2>& y) {
    return Vec<2>{y[1], -m * std::sin(y[0]) * std::cos(y[0])};
  };
  numerics::OdeOptions opts;
  opts.rtol = tol;
  opts.atol = tol;
  return numerics::integrate<2>(rhs, 0.0, Vec<2>{0.0, 1.0}, x, opts).final_state()[0];
}

ConformalClass normalized_conformal_class(double kappa_t, double tau_t, double theta, double tol) {
  require_toral(kappa_t, tau_t, theta);
  const double b = lattice_b(kappa_t, tau_t, theta, tol);
  const double a = ConformalProfile(kappa_t, tau_t).a();
  ConformalClass c;
  c.raw_re = b / (2.0 * pi);
  c.raw_im = a / (2.0 * pi);
  c.re = b / (4.0 * pi);
  c.re -= std::ceil(c.re - 0.5);
  c.im = a / (4.0 * pi);
  return c;
}

}  // namespace htube
