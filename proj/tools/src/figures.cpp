#include "htube/cli/figures.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <string>

#include "htube/foliation.hpp"
#include "htube/io.hpp"
#include "htube/profile_curves.hpp"
#include "htube/svg.hpp"

namespace htube::cli {

namespace {

using std::numbers::pi;

void write_file(const std::filesystem::path& path, const std::string& text, FigureResult& result) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << text;
  if (!f) throw std::runtime_error("failed writing " + path.string());
  result.files.push_back(path);
}

// Colour ramp from dark blue (small H) to orange (large H).
std::string ramp(double t) {
  const int r = static_cast<int>(std::lround(30 + 205 * t));
  const int g = static_cast<int>(std::lround(60 + 80 * t));
  const int b = static_cast<int>(std::lround(160 - 130 * t));
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

void foliation_panels(const std::filesystem::path& dir, FigureResult& result) {
  static constexpr double kTaus[] = {1.5, 0.4, 0.2};
  static constexpr double kHs[] = {0.05, 0.1, 0.15, 0.2, 0.3, 0.45, 0.6, 0.8, 1.0, 1.4, 2.0, 3.0, 5.0};
  constexpr int kSamples = 721;
  for (double tau : kTaus) {
    const SpaceParams space{4.0, tau};
    svg::Plot plot;
    plot.title = "H-tube profiles in E(4, " + io::format_double(tau) + ")";
    plot.x_label = "r";
    plot.y_label = "h";
    plot.equal_aspect = true;
    const std::size_t n = std::size(kHs);
    for (std::size_t i = 0; i < n; ++i) {
      const TubeParams t{4.0, tau, kHs[i]};
      svg::Series s;
      s.color = ramp(static_cast<double>(i) / static_cast<double>(n - 1));
      if (i == 0 || i + 1 == n) s.label = "H = " + io::format_double(kHs[i]);
      for (int k = 0; k < kSamples; ++k) {
        const auto p = closed_form_profile(t, 2.0 * pi * k / (kSamples - 1));
        s.points.emplace_back(p.r, p.h);
      }
      plot.series.push_back(std::move(s));
    }
    // Heights at or beyond the vertical period make the tube overlap itself.
    const double bound = embedding_height_bound(space);
    const double rmax = 0.25 * pi;
    for (double sign : {1.0, -1.0}) {
      svg::Series b;
      b.color = "#7f8c8d";
      if (sign > 0) b.label = "h = 2 pi tau / kappa";
      b.points = {{-rmax, sign * bound}, {rmax, sign * bound}};
      plot.series.push_back(std::move(b));
    }
    write_file(dir / ("foliation-berger_tau-" + io::format_double(tau) + ".svg"), svg::render(plot), result);
  }
}

void profile_panels(const std::filesystem::path& dir, double tol, FigureResult& result) {
  for (double tau : kProfileTaus) {
    ProfilePanel panel;
    panel.tau = tau;
    panel.rows = isoperimetric_sweep(tau, kProfileHStart, kProfileHStop, kProfileHStep, tol);
    svg::Plot plot;
    plot.title = "Isoperimetric profile of H-tubes, kappa = 4, tau = " + io::format_double(tau);
    plot.x_label = "volume";
    plot.y_label = "area";
    svg::Series s;
    s.label = "H-tubes";
    for (const auto& r : panel.rows)
      if (r.ok) s.points.emplace_back(r.volume, r.area);
    plot.series.push_back(std::move(s));
    write_file(dir / ("profiles_tau-" + io::format_double(tau) + ".svg"), svg::render(plot), result);
    result.panels.push_back(std::move(panel));
  }
}

}  // namespace

std::optional<Figure> parse_figure(std::string_view name) {
  if (name == "foliation-berger") return Figure::FoliationBerger;
  if (name == "profiles") return Figure::Profiles;
  return std::nullopt;
}

FigureResult reproduce_figure(Figure fig, const std::filesystem::path& out_dir, double tol) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create " + out_dir.string() + ": " + ec.message());
  FigureResult result;
  if (fig == Figure::FoliationBerger) foliation_panels(out_dir, result);
  else profile_panels(out_dir, tol, result);
  return result;
}

}  // namespace htube::cli
