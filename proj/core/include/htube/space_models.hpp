#pragma once

#include <array>
#include <complex>
#include <string_view>

#include <Eigen/Dense>

namespace htube {

struct SpaceParams {
  double kappa = 0.0;
  double tau = 0.0;
};

/// Products S^2 x R are reported as BergerSphere with is_product set, since
/// every downstream formula treats tau = 0 as a smooth limit.
enum class SpaceTag { RoundSphere, BergerSphere, Euclidean, Heisenberg, ProductHxR, SL2Cover };

struct SpaceClass {
  SpaceTag tag = SpaceTag::Euclidean;
  bool is_product = false;
};

std::string_view to_string(SpaceTag tag);
SpaceClass classify_space(const SpaceParams& p);

enum class Model { Cartan, HalfSpace, BergerS3 };

std::string_view to_string(Model m);

/// Cartan and HalfSpace use (x, y, z); BergerS3 stores (Re z, Im z, Re w, Im w).
struct ModelPoint {
  Model model = Model::Cartan;
  std::array<double, 4> c{};

  static ModelPoint cartan(double x, double y, double z) { return {Model::Cartan, {x, y, z, 0.0}}; }
  static ModelPoint half_space(double x, double y, double z) {
    return {Model::HalfSpace, {x, y, z, 0.0}};
  }
  static ModelPoint berger(std::complex<double> z, std::complex<double> w) {
    return {Model::BergerS3, {z.real(), z.imag(), w.real(), w.imag()}};
  }

  Eigen::Vector3d xyz() const { return {c[0], c[1], c[2]}; }
  std::complex<double> z() const { return {c[0], c[1]}; }
  std::complex<double> w() const { return {c[2], c[3]}; }
};

/// Throws InvalidPoint or ModelMismatch when pt is not a valid point of the
/// given model of E(kappa, tau).
void validate_point(const SpaceParams& p, const ModelPoint& pt);

/// Coordinate metric and orthonormal frame (columns E1, E2, E3).
struct MetricFrame {
  Eigen::Matrix3d g;
  Eigen::Matrix3d frame;
};

MetricFrame metric_and_frame(const SpaceParams& p, const ModelPoint& pt);

/// Coordinate metric only; cheaper than metric_and_frame.
Eigen::Matrix3d metric(const SpaceParams& p, const ModelPoint& pt);

/// Christoffel symbols in coordinates: gamma[k](i, j) is Gamma^k_ij.
/// Computed from exact metric derivatives, so they carry no step-size error.
using Christoffel = std::array<Eigen::Matrix3d, 3>;
Christoffel christoffel(const SpaceParams& p, const ModelPoint& pt);

/// Gamma(X, Y)^k = Gamma^k_ij X^i Y^j.
Eigen::Vector3d contract(const Christoffel& gamma, const Eigen::Vector3d& X, const Eigen::Vector3d& Y);

/// Coefficients of nabla_{E_a} E_b in the Cartan frame; a, b in {1, 2, 3}.
Eigen::Vector3d levi_civita(const SpaceParams& p, const ModelPoint& pt, int a, int b);

/// Riemannian covering of the Cartan model onto the Berger sphere (kappa > 0, tau != 0).
ModelPoint covering_map_theta(const SpaceParams& p, const ModelPoint& pt);

/// Hopf projection onto the sphere of radius 1/sqrt(kappa) in C x R.
Eigen::Vector3d hopf_projection(const SpaceParams& p, const ModelPoint& pt);

/// Berger metric on S^3 as a bilinear form on R^4 (kappa > 0, tau != 0).
Eigen::Matrix4d berger_metric(const SpaceParams& p, const ModelPoint& pt);

}  // namespace htube
