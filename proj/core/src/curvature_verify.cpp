#include "htube/curvature_verify.hpp"

#include <cmath>

#include "htube/error.hpp"

namespace htube {

namespace {

// Differences taken on raw coordinates; the model tag rides along unchanged.
Eigen::Vector3d at(const ParametricSurface& s, double p, double q) { return s.position(p, q).xyz(); }

}  // namespace

FundamentalForms fundamental_forms(const ParametricSurface& s, double p, double q, double step) {
  if (!(step > 0.0)) throw Error(ErrorKind::DomainViolation, "finite-difference step must be positive");
  const ModelPoint pt = s.position(p, q);
  const Eigen::Vector3d X0 = pt.xyz();

  const double hp = step * (1.0 + std::abs(p));
  const double hq = step * (1.0 + std::abs(q));
  const Eigen::Vector3d Xp = (at(s, p + hp, q) - at(s, p - hp, q)) / (2.0 * hp);
  const Eigen::Vector3d Xq = (at(s, p, q + hq) - at(s, p, q - hq)) / (2.0 * hq);

  const double kp = 10.0 * hp, kq = 10.0 * hq;
  const Eigen::Vector3d Xpp = (at(s, p + kp, q) - 2.0 * X0 + at(s, p - kp, q)) / (kp * kp);
  const Eigen::Vector3d Xqq = (at(s, p, q + kq) - 2.0 * X0 + at(s, p, q - kq)) / (kq * kq);
  const Eigen::Vector3d Xpq = (at(s, p + kp, q + kq) - at(s, p + kp, q - kq) - at(s, p - kp, q + kq) +
                               at(s, p - kp, q - kq)) /
                              (4.0 * kp * kq);

  const Eigen::Matrix3d g = metric(s.space, pt);
  FundamentalForms out;
  out.I << Xp.dot(g * Xp), Xp.dot(g * Xq), Xq.dot(g * Xp), Xq.dot(g * Xq);
  out.I(1, 0) = out.I(0, 1);
  if (!(out.I.determinant() >= 1e-14))
    throw Error(ErrorKind::DegenerateTangency, "first fundamental form is degenerate");

  // g(N, Y) is proportional to det(Xp, Xq, Y), so N = g^{-1}(Xp x Xq) up to scale.
  Eigen::Vector3d N = g.ldlt().solve(Xp.cross(Xq));
  N /= std::sqrt(N.dot(g * N));
  if (s.inward && N.dot(g * s.inward(p, q)) < 0.0) N = -N;
  out.normal = N;
  out.nu = (g * N)(2);

  const Christoffel G = christoffel(s.space, pt);
  const Eigen::Vector3d gN = g * N;
  out.II(0, 0) = (Xpp + contract(G, Xp, Xp)).dot(gN);
  out.II(1, 1) = (Xqq + contract(G, Xq, Xq)).dot(gN);
  out.II(0, 1) = out.II(1, 0) = (Xpq + contract(G, Xp, Xq)).dot(gN);
  return out;
}

double mean_curvature(const ParametricSurface& s, double p, double q, double step) {
  const FundamentalForms f = fundamental_forms(s, p, q, step);
  return 0.5 * (f.I.inverse() * f.II).trace();
}

ParametricSurface tube_surface(const TubeParams& t) {
  validate_tube(t);
  ParametricSurface s;
  s.space = t.space();
  s.position = [t](double phi, double v) { return tube_immersion(t, phi, v); };
  // Pointing toward the axis is -h' dX/dr + r' dX/dh: the profile normal eta
  // pushed into the ambient space.
  s.inward = [t](double phi, double v) {
    const ProfilePoint pp = closed_form_profile(t, phi);
    const ProfileSlope d = profile_derivative(t, phi);
    const double e = 1e-6 * (1.0 + std::abs(pp.r));
    const Eigen::Vector3d dXdr =
        (tube_point(t, pp.r + e, pp.h, v).xyz() - tube_point(t, pp.r - e, pp.h, v).xyz()) / (2.0 * e);
    const Eigen::Vector3d dXdh = Eigen::Vector3d(0.0, 0.0, 1.0);
    return Eigen::Vector3d(-d.dh * dXdr + d.dr * dXdh);
  };
  return s;
}

FundamentalForms numeric_fundamental_forms(const TubeParams& t, double phi, double v, double step) {
  return fundamental_forms(tube_surface(t), phi, v, step);
}

double numeric_mean_curvature(const TubeParams& t, double phi, double v, double step) {
  return mean_curvature(tube_surface(t), phi, v, step);
}

std::vector<CurvatureSample> mean_curvature_grid(const TubeParams& t, const std::vector<double>& phis,
                                                 const std::vector<double>& vs, double step) {
  const ParametricSurface s = tube_surface(t);
  std::vector<CurvatureSample> out;
  out.reserve(phis.size() * vs.size());
  for (double phi : phis)
    for (double v : vs) {
      const double Hn = mean_curvature(s, phi, v, step);
      out.push_back({phi, v, Hn, std::abs(Hn - t.H)});
    }
  return out;
}

}  // namespace htube
