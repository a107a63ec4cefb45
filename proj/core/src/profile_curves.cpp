#include "htube/profile_curves.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "htube/error.hpp"
#include "htube/numerics/ode.hpp"

namespace htube {

namespace {

using std::numbers::pi;

double checked_sqrt(double x, const char* what) {
  if (!(x > 0.0)) {
    std::ostringstream msg;
    msg << what << " radicand is nonpositive (" << x << ")";
    throw Error(ErrorKind::DomainViolation, msg.str());
  }
  return std::sqrt(x);
}

}  // namespace

ProfileCase profile_case(double kappa) {
  if (std::abs(kappa) < kFlatKappa) return ProfileCase::B;
  return kappa > 0.0 ? ProfileCase::A : ProfileCase::C;
}

void validate_tube(const TubeParams& t) {
  if (!std::isfinite(t.kappa) || !std::isfinite(t.tau) || !std::isfinite(t.H))
    throw Error(ErrorKind::DomainViolation, "non-finite tube parameters");
  if (!(4.0 * t.H * t.H + t.kappa > 0.0)) {
    std::ostringstream msg;
    msg << "4H^2 + kappa = " << 4.0 * t.H * t.H + t.kappa << " is not positive";
    throw Error(ErrorKind::SupercriticalViolation, msg.str());
  }
  if (!(t.H > 0.0)) {
    std::ostringstream msg;
    msg << "H = " << t.H << "; profile formulas need H > 0";
    throw Error(ErrorKind::NonpositiveH, msg.str());
  }
}

ProfilePoint closed_form_profile(const TubeParams& t, double phi) {
  validate_tube(t);
  const double k = t.kappa, tau = t.tau, H = t.H;
  const double c = std::cos(phi), s = std::sin(phi);
  const double q = std::sqrt(H * H + tau * tau * c * c);
  ProfilePoint out{phi, 0.0, 0.0};

  switch (profile_case(k)) {
    case ProfileCase::B:
      out.r = c / (2.0 * H);
      if (tau == 0.0) {
        out.h = s / (2.0 * H);
      } else {
        const double m2 = H * H + tau * tau;
        out.h = m2 / (4.0 * H * H * tau) * std::asin(tau * s / std::sqrt(m2)) + s * q / (4.0 * H * H);
      }
      return out;
    case ProfileCase::A: {
      const double sk = std::sqrt(k);
      out.r = std::atan(sk * c / (2.0 * H)) / sk;
      break;
    }
    case ProfileCase::C: {
      const double sk = std::sqrt(-k);
      out.r = std::atanh(sk * c / (2.0 * H)) / sk;
      break;
    }
  }

  // Height, shared by the curved cases. The hyperbolic branch is the real
  // form of arctanh(ix) = i arctan(x).
  const double a = std::sqrt(4.0 * H * H + k);
  const double d = k - 4.0 * tau * tau;
  double first = 0.0;
  if (d > 0.0) {
    const double e = std::sqrt(d);
    first = 2.0 * H * e / (k * a) * std::atanh(H * e * s / (a * q));
  } else if (d < 0.0) {
    const double e = std::sqrt(-d);
    first = -2.0 * H * e / (k * a) * std::atan(H * e * s / (a * q));
  }
  const double second =
      4.0 * tau / k * std::atan(tau * s / (std::sqrt(H * H + tau * tau) + q));
  out.h = first + second;
  return out;
}

ProfileSlope profile_derivative(const TubeParams& t, double phi) {
  validate_tube(t);
  const double c = std::cos(phi), s = std::sin(phi);
  const double den = 4.0 * t.H * t.H + t.kappa * c * c;
  return {-2.0 * t.H * s / den, 2.0 * c * std::sqrt(t.H * t.H + t.tau * t.tau * c * c) / den};
}

OdeRhs profile_ode_rhs(const TubeParams& t, const OdeState& st) {
  const double k = t.kappa, tau = t.tau, H = t.H;
  const double c = std::cos(st.phi), s = std::sin(st.phi);
  switch (profile_case(k)) {
    case ProfileCase::A: {
      const double sk = std::sqrt(k);
      const double cr = std::cos(st.r * sk);
      if (!(cr > 0.0)) throw Error(ErrorKind::DomainViolation, "cos(r sqrt(kappa)) <= 0");
      const double D = checked_sqrt(4.0 * tau * tau + (k - 4.0 * tau * tau) * cr * cr, "Berger");
      return {-s / D, c / (sk * cr), (2.0 * H + sk * c * std::tan(st.r * sk)) / D};
    }
    case ProfileCase::B: {
      const double D = std::sqrt(1.0 + 4.0 * tau * tau * st.r * st.r);
      return {-s / D, c, 2.0 * H / D};
    }
    case ProfileCase::C: {
      const double sk = std::sqrt(-k);
      const double ch = std::cosh(st.r * sk);
      const double D = checked_sqrt(-4.0 * tau * tau - (k - 4.0 * tau * tau) * ch * ch, "SL");
      return {-s / D, c / (sk * ch), (2.0 * H - sk * c * std::tanh(st.r * sk)) / D};
    }
  }
  return {};
}

double energy(const TubeParams& t, double r, double phi) {
  const double k = t.kappa;
  switch (profile_case(k)) {
    case ProfileCase::A: {
      const double sk = std::sqrt(k);
      return std::cos(r * sk) * std::cos(phi) - 2.0 * t.H / sk * std::sin(r * sk);
    }
    case ProfileCase::B:
      return std::cos(phi) - 2.0 * t.H * r;
    case ProfileCase::C: {
      const double sk = std::sqrt(-k);
      return std::cosh(r * sk) * std::cos(phi) - 2.0 * t.H / sk * std::sinh(r * sk);
    }
  }
  return 0.0;
}

ProfileCurve integrate_profile(const TubeParams& t, double phi0, double phi1, double tol,
                               std::size_t dense_per_step) {
  validate_tube(t);
  if (!(tol > 0.0)) throw Error(ErrorKind::DomainViolation, "tolerance must be positive");
  ProfileCurve curve;
  curve.params = t;
  const ProfilePoint seed = closed_form_profile(t, phi0);
  if (phi1 == phi0) {
    curve.samples.push_back(seed);
    return curve;
  }

  using numerics::Vec;
  auto rhs = [&](double u, const Vec<3>& y) {
    const OdeRhs d = profile_ode_rhs(t, {u, y[0], y[1], y[2]});
    return Vec<3>{d.dr, d.dh, d.dphi};
  };
  auto event = [&](double, const Vec<3>& y) { return y[2] - phi1; };
  // phi increases monotonically in u, so u runs backward when phi1 < phi0.
  const double u_limit = (phi1 > phi0 ? 1.0 : -1.0) * 1e9;
  numerics::OdeOptions opts;
  opts.rtol = tol;
  opts.atol = tol;
  const auto sol = numerics::integrate_until<3>(rhs, 0.0, Vec<3>{seed.r, seed.h, seed.phi},
                                                u_limit, event, opts);
  if (!sol.event_triggered()) throw Error(ErrorKind::StepFailure, "phi never reached the end point");

  const double e0 = energy(t, seed.r, seed.phi);
  const auto& ts = sol.times();
  const auto& ys = sol.states();
  const std::size_t per = std::max<std::size_t>(1, dense_per_step);
  auto push = [&](const Vec<3>& y) {
    curve.samples.push_back({y[2], y[0], y[1]});
    curve.max_energy_drift = std::max(curve.max_energy_drift, std::abs(energy(t, y[0], y[2]) - e0));
  };
  push(ys.front());
  for (std::size_t i = 1; i < ts.size(); ++i) {
    for (std::size_t j = 1; j < per; ++j)
      push(sol.at(ts[i - 1] + (ts[i] - ts[i - 1]) * static_cast<double>(j) / per));
    push(ys[i]);
  }
  // The event lands on phi1 to root-finder accuracy; pin it exactly.
  curve.samples.back().phi = phi1;
  if (phi1 < phi0) std::reverse(curve.samples.begin(), curve.samples.end());
  curve.accepted_steps = sol.accepted_steps();
  curve.rejected_steps = sol.rejected_steps();
  return curve;
}

ModelPoint tube_point(const TubeParams& t, double r, double h, double v) {
  const double k = t.kappa, tau = t.tau;
  switch (profile_case(k)) {
    case ProfileCase::A: {
      const double sk = std::sqrt(k);
      const double arg = 0.5 * sk * r + 0.25 * pi;
      if (!(std::abs(arg) < 0.5 * pi))
        throw Error(ErrorKind::DomainViolation, "tangent argument leaves (-pi/2, pi/2)");
      const double rho = 2.0 / sk * std::tan(arg);
      return ModelPoint::cartan(rho * std::cos(v), rho * std::sin(v), h + 2.0 * tau / k * v);
    }
    case ProfileCase::B:
      return ModelPoint::cartan(v, r, h + tau * v * r);
    case ProfileCase::C: {
      const double sk = std::sqrt(-k);
      const double T = std::tanh(0.5 * r * sk);
      const double ev = std::exp(v);
      return ModelPoint::half_space(ev * std::tanh(r * sk), ev / std::cosh(r * sk),
                                    h + 4.0 * tau / k * std::acos(T / std::sqrt(1.0 + T * T)));
    }
  }
  return {};
}

ModelPoint tube_immersion(const TubeParams& t, double phi, double v) {
  const ProfilePoint p = closed_form_profile(t, phi);
  return tube_point(t, p.r, p.h, v);
}

NormalConvexity profile_normal_and_convexity(const TubeParams& t, double phi) {
  const ProfileSlope d = profile_derivative(t, phi);
  const double H = t.H, tau = t.tau;
  const double c = std::cos(phi), s = std::sin(phi);
  const double q = std::sqrt(H * H + tau * tau * c * c);
  const double den = 4.0 * H * H + t.kappa * c * c;
  const double s2 = s * s;
  NormalConvexity out;
  out.eta = Eigen::Vector2d(-d.dh, d.dr);
  out.convexity = 4.0 * H * (H * H + tau * tau * (1.0 - s2 * s2)) / (q * den * den);
  return out;
}

double round_convexity_display(double H, double tau, double phi) {
  const double x = std::cos(phi), x2 = x * x;
  const double num = H * (H * H * H * H + H * H * tau * tau * x2 * (3.0 - x2) +
                          tau * tau * x2 * x2 * (2.0 - x2));
  const double a = H * H + tau * tau * x2, b = H * H + x2;
  return num / (4.0 * std::pow(a, 1.5) * b * b);
}

int winding_number(const std::vector<Eigen::Vector2d>& loop) {
  if (loop.size() < 3) return 0;
  double total = 0.0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const auto& p = loop[i];
    const auto& q = loop[(i + 1) % loop.size()];
    total += std::atan2(p.x() * q.y() - p.y() * q.x(), p.dot(q));
  }
  return static_cast<int>(std::lround(total / (2.0 * pi)));
}

}  // namespace htube
