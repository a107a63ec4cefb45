#include "htube/space_models.hpp"

#include <cmath>
#include <sstream>

#include "htube/error.hpp"
#include "jet.hpp"

namespace htube {

namespace {

constexpr double kUnitSphereTol = 1e-12;
template <class T>
std::array<std::array<T, 3>, 3> metric_t(Model model, double kappa, double tau, const T& x,
                                         const T& y) {
  std::array<std::array<T, 3>, 3> g;
  if (model == Model::Cartan) {
    const T lam = T(1.0) / (T(1.0) + T(0.25 * kappa) * (x * x + y * y));
    const std::array<T, 3> w{T(tau) * lam * y, -(T(tau) * lam * x), T(1.0)};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g[i][j] = w[i] * w[j];
    g[0][0] = g[0][0] + lam * lam;
    g[1][1] = g[1][1] + lam * lam;
  } else {
    const std::array<T, 3> w{T(2.0 * tau / kappa) / y, T(0.0), T(1.0)};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g[i][j] = w[i] * w[j];
    const T conf = T(1.0) / (T(-kappa) * y * y);
    g[0][0] = g[0][0] + conf;
    g[1][1] = g[1][1] + conf;
  }
  return g;
}

void require_model(const ModelPoint& pt, Model m, const char* op) {
  if (pt.model != m) {
    std::ostringstream msg;
    msg << op << " expects a " << to_string(m) << " point, got " << to_string(pt.model);
    throw Error(ErrorKind::ModelMismatch, msg.str());
  }
}

void require_berger(const SpaceParams& p, const char* op) {
  if (!(p.kappa > 0.0) || p.tau == 0.0) {
    std::ostringstream msg;
    msg << op << " needs kappa > 0 and tau != 0 (kappa=" << p.kappa << ", tau=" << p.tau << ")";
    throw Error(ErrorKind::ModelMismatch, msg.str());
  }
}

}  // namespace

std::string_view to_string(SpaceTag tag) {
  switch (tag) {
    case SpaceTag::RoundSphere: return "RoundSphere";
    case SpaceTag::BergerSphere: return "BergerSphere";
    case SpaceTag::Euclidean: return "Euclidean";
    case SpaceTag::Heisenberg: return "Heisenberg";
    case SpaceTag::ProductHxR: return "ProductHxR";
    case SpaceTag::SL2Cover: return "SL2Cover";
  }
  return "Unknown";
}

std::string_view to_string(Model m) {
  switch (m) {
    case Model::Cartan: return "Cartan";
    case Model::HalfSpace: return "HalfSpace";
    case Model::BergerS3: return "BergerS3";
  }
  return "Unknown";
}

SpaceClass classify_space(const SpaceParams& p) {
  const double k = p.kappa, t = p.tau;
  if (k > 0.0) {
    if (std::abs(k - 4.0 * t * t) <= 1e-12 * std::max(1.0, k)) return {SpaceTag::RoundSphere, false};
    return {SpaceTag::BergerSphere, t == 0.0};
  }
  if (k == 0.0) return {t == 0.0 ? SpaceTag::Euclidean : SpaceTag::Heisenberg, false};
  return {t == 0.0 ? SpaceTag::ProductHxR : SpaceTag::SL2Cover, t == 0.0};
}

void validate_point(const SpaceParams& p, const ModelPoint& pt) {
  for (double v : pt.c)
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidPoint, "non-finite coordinate");
  switch (pt.model) {
    case Model::Cartan: {
      const double inv_lambda = 1.0 + 0.25 * p.kappa * (pt.c[0] * pt.c[0] + pt.c[1] * pt.c[1]);
      if (!(inv_lambda > 0.0)) throw Error(ErrorKind::InvalidPoint, "lambda_kappa <= 0 at Cartan point");
      return;
    }
    case Model::HalfSpace:
      if (!(p.kappa < 0.0)) throw Error(ErrorKind::ModelMismatch, "half-space model needs kappa < 0");
      if (!(pt.c[1] > 0.0)) throw Error(ErrorKind::InvalidPoint, "half-space point needs y > 0");
      return;
    case Model::BergerS3: {
      if (!(p.kappa > 0.0)) throw Error(ErrorKind::ModelMismatch, "Berger sphere model needs kappa > 0");
      const double n2 = pt.c[0] * pt.c[0] + pt.c[1] * pt.c[1] + pt.c[2] * pt.c[2] + pt.c[3] * pt.c[3];
      if (std::abs(n2 - 1.0) > kUnitSphereTol)
        throw Error(ErrorKind::InvalidPoint, "Berger point is off the unit sphere");
      return;
    }
  }
}

Eigen::Matrix3d metric(const SpaceParams& p, const ModelPoint& pt) {
  validate_point(p, pt);
  if (pt.model == Model::BergerS3)
    throw Error(ErrorKind::ModelMismatch, "coordinate metric is defined for Cartan and HalfSpace points");
  const auto g = metric_t<double>(pt.model, p.kappa, p.tau, pt.c[0], pt.c[1]);
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = g[i][j];
  return m;
}

MetricFrame metric_and_frame(const SpaceParams& p, const ModelPoint& pt) {
  MetricFrame out;
  out.g = metric(p, pt);
  const double x = pt.c[0], y = pt.c[1];
  out.frame.setZero();
  if (pt.model == Model::Cartan) {
    const double inv_lambda = 1.0 + 0.25 * p.kappa * (x * x + y * y);
    out.frame.col(0) << inv_lambda, 0.0, -p.tau * y;
    out.frame.col(1) << 0.0, inv_lambda, p.tau * x;
  } else {
    const double s = std::sqrt(-p.kappa);
    out.frame.col(0) << y * s, 0.0, 2.0 * p.tau / s;
    out.frame.col(1) << 0.0, y * s, 0.0;
  }
  out.frame.col(2) << 0.0, 0.0, 1.0;
  return out;
}

Christoffel christoffel(const SpaceParams& p, const ModelPoint& pt) {
  validate_point(p, pt);
  if (pt.model == Model::BergerS3)
    throw Error(ErrorKind::ModelMismatch, "Christoffel symbols are defined for Cartan and HalfSpace points");
  using detail::Jet3;
  const auto gj = metric_t<Jet3>(pt.model, p.kappa, p.tau, Jet3::variable(pt.c[0], 0),
                                 Jet3::variable(pt.c[1], 1));
  Eigen::Matrix3d g;
  // dg[l](i, j) = d g_ij / d x^l; nothing depends on z.
  std::array<Eigen::Matrix3d, 3> dg;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      g(i, j) = gj[i][j].v;
      for (int l = 0; l < 3; ++l) dg[l](i, j) = gj[i][j].d[l];
    }
  const Eigen::Matrix3d ginv = g.inverse();
  Christoffel gamma;
  for (int k = 0; k < 3; ++k) {
    gamma[k].setZero();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int l = 0; l < 3; ++l) s += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        gamma[k](i, j) = 0.5 * s;
      }
  }
  return gamma;
}

Eigen::Vector3d contract(const Christoffel& gamma, const Eigen::Vector3d& X, const Eigen::Vector3d& Y) {
  return {X.dot(gamma[0] * Y), X.dot(gamma[1] * Y), X.dot(gamma[2] * Y)};
}

Eigen::Vector3d levi_civita(const SpaceParams& p, const ModelPoint& pt, int a, int b) {
  require_model(pt, Model::Cartan, "levi_civita");
  validate_point(p, pt);
  if (a < 1 || a > 3 || b < 1 || b > 3) throw Error(ErrorKind::DomainViolation, "frame index out of range");
  const double k = p.kappa, t = p.tau, x = pt.c[0], y = pt.c[1];
  static constexpr int kTable[3][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
  switch (kTable[a - 1][b - 1]) {
    case 0: return {0.0, 0.5 * k * y, 0.0};
    case 1: return {-0.5 * k * y, 0.0, t};
    case 2: return {0.0, -t, 0.0};
    case 3: return {0.0, -0.5 * k * x, -t};
    case 4: return {0.5 * k * x, 0.0, 0.0};
    case 5: return {t, 0.0, 0.0};
    case 6: return {0.0, -t, 0.0};
    case 7: return {t, 0.0, 0.0};
    default: return {0.0, 0.0, 0.0};
  }
}

ModelPoint covering_map_theta(const SpaceParams& p, const ModelPoint& pt) {
  require_berger(p, "covering_map_theta");
  require_model(pt, Model::Cartan, "covering_map_theta");
  validate_point(p, pt);
  const double x = pt.c[0], y = pt.c[1], zc = pt.c[2];
  const double scale = 1.0 / std::sqrt(1.0 + 0.25 * p.kappa * (x * x + y * y));
  const std::complex<double> fiber = std::polar(1.0, p.kappa / (4.0 * p.tau) * zc);
  const std::complex<double> z = scale * 0.5 * std::sqrt(p.kappa) * std::complex<double>(y, x) * fiber;
  const std::complex<double> w = scale * fiber;
  return ModelPoint::berger(z, w);
}

Eigen::Vector3d hopf_projection(const SpaceParams& p, const ModelPoint& pt) {
  if (!(p.kappa > 0.0)) throw Error(ErrorKind::ModelMismatch, "Hopf projection needs kappa > 0");
  require_model(pt, Model::BergerS3, "hopf_projection");
  validate_point(p, pt);
  const auto z = pt.z(), w = pt.w();
  const std::complex<double> zw = z * std::conj(w);
  const double f = 2.0 / std::sqrt(p.kappa);
  return {f * zw.real(), f * zw.imag(), f * 0.5 * (std::norm(z) - std::norm(w))};
}

Eigen::Matrix4d berger_metric(const SpaceParams& p, const ModelPoint& pt) {
  require_berger(p, "berger_metric");
  require_model(pt, Model::BergerS3, "berger_metric");
  validate_point(p, pt);
  // Hopf field (iz, iw) written in R^4.
  const Eigen::Vector4d v(-pt.c[1], pt.c[0], -pt.c[3], pt.c[2]);
  const double stretch = 4.0 * p.tau * p.tau / p.kappa - 1.0;
  return (4.0 / p.kappa) * (Eigen::Matrix4d::Identity() + stretch * v * v.transpose());
}

}  // namespace htube
