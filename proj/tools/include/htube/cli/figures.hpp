#pragma once

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "htube/isoperimetric.hpp"

namespace htube::cli {

enum class Figure { FoliationBerger, Profiles };

std::optional<Figure> parse_figure(std::string_view name);

/// The tau values and H grid of the isoperimetric panels.
inline constexpr double kProfileTaus[] = {0.244, 0.374, 0.407, 0.5, 1.05, 1.5, 2.5, 10.0};
inline constexpr double kProfileHStart = 0.025;
inline constexpr double kProfileHStop = 20.0;
inline constexpr double kProfileHStep = 0.025;

struct ProfilePanel {
  double tau = 0.0;
  std::vector<IsoperimetricRecord> rows;
};

struct FigureResult {
  std::vector<std::filesystem::path> files;  // every file written, in order
  std::vector<ProfilePanel> panels;          // filled for Figure::Profiles
};

/// Writes one SVG per panel into out_dir (created if missing).
/// Throws std::runtime_error on IO failure.
FigureResult reproduce_figure(Figure fig, const std::filesystem::path& out_dir, double tol = 1e-10);

}  // namespace htube::cli
