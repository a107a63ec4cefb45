#include "htube/cli/app.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "htube/cli/figures.hpp"
#include "htube/curvature_verify.hpp"
#include "htube/error.hpp"
#include "htube/foliation.hpp"
#include "htube/io.hpp"
#include "htube/isoperimetric.hpp"
#include "htube/profile_curves.hpp"
#include "htube/sister.hpp"
#include "htube/space_models.hpp"
#include "htube/svg.hpp"

namespace htube::cli {

namespace {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

/// Thrown for malformed arguments that CLI11 itself cannot catch.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  double start = 0.0, stop = 0.0, step = 0.0;
  bool set = false;
};

Range parse_range(const std::string& text, const char* flag) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      parts.push_back(io::parse_double(item));
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": '" + text + "' is not start:stop:step");
    }
  }
  if (parts.size() != 3 || !(parts[2] > 0.0) || !(parts[1] >= parts[0]) || !std::isfinite(parts[0]) ||
      !std::isfinite(parts[1]))
    throw UsageError(std::string(flag) + ": '" + text + "' is not start:stop:step with step > 0");
  return {parts[0], parts[1], parts[2], true};
}

void require_finite(std::initializer_list<std::pair<const char*, double>> values) {
  for (const auto& [name, v] : values)
    if (!std::isfinite(v)) throw UsageError(std::string(name) + " must be finite");
}

struct Globals {
  double tol = 1e-10;
  std::string output;
  std::string format;
};

/// Resolves --output, honouring HTUBE_OUTPUT_DIR for relative paths.
fs::path resolve_output(const std::string& path) {
  fs::path p(path);
  if (const char* dir = std::getenv("HTUBE_OUTPUT_DIR"); dir && *dir && p.is_relative()) p = fs::path(dir) / p;
  return p;
}

class Sink {
public:
  Sink(const Globals& g, std::ostream& out) : out_(out) {
    if (!g.output.empty()) {
      path_ = resolve_output(g.output);
      if (path_.has_parent_path()) fs::create_directories(path_.parent_path());
      file_.open(path_, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open " + path_.string() + " for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : out_; }

private:
  std::ostream& out_;
  fs::path path_;
  std::ofstream file_;
};

void emit_json(const Globals& g, std::ostream& out, const ordered_json& j) {
  Sink sink(g, out);
  sink.stream() << j.dump(2) << '\n';
}

void emit_csv(const Globals& g, std::ostream& out, const io::CsvTable& t) {
  Sink sink(g, out);
  io::write_csv(sink.stream(), t);
}

void emit_svg(const Globals& g, std::ostream& out, const svg::Plot& p) {
  Sink sink(g, out);
  sink.stream() << svg::render(p);
}

std::string pick_format(const Globals& g, const char* fallback, std::initializer_list<const char*> allowed,
                        const char* cmd) {
  const std::string f = g.format.empty() ? fallback : g.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw UsageError(std::string(cmd) + " does not support --format " + f);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Horizontal constant-mean-curvature tubes in E(kappa, tau)", "htube"};
  // "--h" is the mean curvature, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--tol", g.tol, "Integration and quadrature tolerance")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", g.output, "Write to this file instead of stdout");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json", "svg"}));

  std::function<void()> action;
  double kappa = 0.0, tau = 0.0, H = 0.0;

  // classify
  auto* classify = app.add_subcommand("classify", "Name the geometry of E(kappa, tau)");
  classify->add_option("--kappa", kappa)->required();
  classify->add_option("--tau", tau)->required();
  classify->callback([&] {
    action = [&] {
      require_finite({{"--kappa", kappa}, {"--tau", tau}});
      pick_format(g, "json", {"json"}, "classify");
      const auto c = classify_space({kappa, tau});
      ordered_json j;
      j["kappa"] = kappa;
      j["tau"] = tau;
      j["class"] = std::string(to_string(c.tag));
      j["is_product"] = c.is_product;
      emit_json(g, out, j);
    };
  });

  // profile
  std::string phi_range = "0:6.283185307179586:0.01";
  std::string method = "closed";
  auto* profile = app.add_subcommand("profile", "Sample the profile curve (phi, r, h)");
  profile->add_option("--kappa", kappa)->required();
  profile->add_option("--tau", tau)->required();
  profile->add_option("--h", H, "Mean curvature")->required();
  profile->add_option("--phi-range", phi_range, "start:stop:step")->capture_default_str();
  profile->add_option("--method", method, "closed or ode")->check(CLI::IsMember({"closed", "ode"}))->capture_default_str();
  profile->callback([&] {
    action = [&] {
      require_finite({{"--kappa", kappa}, {"--tau", tau}, {"--h", H}});
      const auto fmt = pick_format(g, "csv", {"csv", "svg"}, "profile");
      const Range r = parse_range(phi_range, "--phi-range");
      const TubeParams t{kappa, tau, H};
      ProfileCurve curve;
      curve.params = t;
      if (method == "closed") {
        for (double phi : make_grid(r.start, r.stop, r.step)) curve.samples.push_back(closed_form_profile(t, phi));
      } else {
        curve = integrate_profile(t, r.start, r.stop, g.tol);
      }
      if (fmt == "csv") return emit_csv(g, out, io::profile_table(curve));
      svg::Plot p;
      p.title = "Profile, kappa = " + io::format_double(kappa) + ", tau = " + io::format_double(tau) +
                ", H = " + io::format_double(H);
      p.x_label = "r";
      p.y_label = "h";
      p.equal_aspect = true;
      svg::Series s;
      for (const auto& q : curve.samples) s.points.emplace_back(q.r, q.h);
      p.series.push_back(std::move(s));
      emit_svg(g, out, p);
    };
  });

  // verify-h
  int grid_n = 5;
  double step = 1e-5;
  auto* verify = app.add_subcommand("verify-h", "Finite-difference mean curvature of the tube");
  verify->add_option("--kappa", kappa)->required();
  verify->add_option("--tau", tau)->required();
  verify->add_option("--h", H)->required();
  verify->add_option("--grid", grid_n, "Points per parameter direction")->check(CLI::Range(1, 1000))->capture_default_str();
  verify->add_option("--step", step, "Base finite-difference step")->check(CLI::PositiveNumber)->capture_default_str();
  verify->callback([&] {
    action = [&] {
      require_finite({{"--kappa", kappa}, {"--tau", tau}, {"--h", H}});
      pick_format(g, "csv", {"csv"}, "verify-h");
      std::vector<double> phis, vs;
      for (int i = 0; i < grid_n; ++i) {
        phis.push_back(2.0 * std::numbers::pi * (i + 0.5) / grid_n);
        vs.push_back(-1.0 + 2.0 * (i + 0.5) / grid_n);
      }
      io::CsvTable t;
      t.header = {"phi", "v", "H_num", "abs_err"};
      for (const auto& s : mean_curvature_grid({kappa, tau, H}, phis, vs, step))
        t.rows.push_back({s.phi, s.v, s.H_num, s.abs_err});
      emit_csv(g, out, t);
    };
  });

  // foliation
  std::string h_grid, scan_output;
  auto* fol = app.add_subcommand("foliation", "Foliation criterion, critical H0 and max-height scan");
  fol->add_option("--kappa", kappa)->required();
  fol->add_option("--tau", tau)->required();
  fol->add_option("--h-grid", h_grid, "start:stop:step for the max-height scan");
  fol->add_option("--scan-output", scan_output, "Write the scan as CSV to this file");
  fol->callback([&] {
    action = [&] {
      require_finite({{"--kappa", kappa}, {"--tau", tau}});
      pick_format(g, "json", {"json"}, "foliation");
      const auto rep = foliation_criterion({kappa, tau});
      ordered_json j;
      j["kappa"] = kappa;
      j["tau"] = tau;
      j["x0"] = rep.x0;
      j["criterion_value"] = rep.criterion_value;
      j["foliates"] = rep.foliates;
      j["H0"] = rep.H0 ? ordered_json(*rep.H0) : ordered_json(nullptr);
      j["foliated_set"] = std::string(to_string(rep.foliated_set));
      if (!h_grid.empty()) {
        const Range r = parse_range(h_grid, "--h-grid");
        const auto scan = tangency_scan({kappa, tau}, make_grid(r.start, r.stop, r.step));
        ordered_json s;
        s["points"] = scan.rows.size();
        s["monotone_decreasing"] = scan.monotone_decreasing;
        s["interior_maxima"] = scan.interior_maxima;
        ordered_json iv = ordered_json::array();
        for (const auto& [a, b] : scan.increasing_intervals) iv.push_back({a, b});
        s["increasing_intervals"] = iv;
        std::size_t non_embedded = 0;
        for (const auto& row : scan.rows) non_embedded += row.embedded ? 0 : 1;
        s["non_embedded"] = non_embedded;
        j["scan"] = s;
        if (!scan_output.empty()) {
          io::CsvTable t;
          t.header = {"H", "max_height", "embedded", "local_max"};
          for (const auto& row : scan.rows)
            t.rows.push_back({row.H, row.max_height, row.embedded ? 1.0 : 0.0, row.local_max ? 1.0 : 0.0});
          Globals gs = g;
          gs.output = scan_output;
          emit_csv(gs, out, t);
        }
      }
      emit_json(g, out, j);
    };
  });

  // sister
  double kappa_t = 0.0, tau_t = 0.0, H_t = 0.0, theta = 0.0;
  auto* sis = app.add_subcommand("sister", "Sister tube parameters and conformal lattice");
  sis->add_option("--kappa-t", kappa_t)->required();
  sis->add_option("--tau-t", tau_t)->required();
  sis->add_option("--h-t", H_t, "Mean curvature of the source surface")->capture_default_str();
  sis->add_option("--theta", theta)->required();
  sis->callback([&] {
    action = [&] {
      require_finite({{"--kappa-t", kappa_t}, {"--tau-t", tau_t}, {"--h-t", H_t}, {"--theta", theta}});
      pick_format(g, "json", {"json"}, "sister");
      const TubeParams t = sister_params({kappa_t, tau_t, H_t, theta});
      ordered_json j;
      j["kappa"] = t.kappa;
      j["tau"] = t.tau;
      j["H"] = t.H;
      // Lattice data describe sisters of the minimal torus only.
      if (H_t == 0.0 && t.kappa > 0.0) {
        const auto cls = normalized_conformal_class(kappa_t, tau_t, theta, g.tol);
        j["a"] = conformal_profile(kappa_t, tau_t).a();
        j["b"] = lattice_b(kappa_t, tau_t, theta, g.tol);
        j["normalized_class"] = {{"raw", {cls.raw_re, cls.raw_im}}, {"reduced", {cls.re, cls.im}}};
      } else {
        j["a"] = nullptr;
        j["b"] = nullptr;
        j["normalized_class"] = nullptr;
      }
      emit_json(g, out, j);
    };
  });

  // lattice-sweep
  std::string theta_range = "0:3.1:0.05";
  auto* lat = app.add_subcommand("lattice-sweep", "b(theta) over a theta grid");
  lat->add_option("--kappa-t", kappa_t)->required();
  lat->add_option("--tau-t", tau_t)->required();
  lat->add_option("--theta-range", theta_range, "start:stop:step")->capture_default_str();
  lat->callback([&] {
    action = [&] {
      require_finite({{"--kappa-t", kappa_t}, {"--tau-t", tau_t}});
      const auto fmt = pick_format(g, "csv", {"csv", "svg"}, "lattice-sweep");
      const Range r = parse_range(theta_range, "--theta-range");
      io::CsvTable t;
      t.header = {"theta", "b"};
      for (double th : make_grid(r.start, r.stop, r.step)) t.rows.push_back({th, lattice_b(kappa_t, tau_t, th, g.tol)});
      if (fmt == "csv") return emit_csv(g, out, t);
      svg::Plot p;
      p.title = "Lattice shear b(theta)";
      p.x_label = "theta";
      p.y_label = "b";
      svg::Series s;
      for (const auto& row : t.rows) s.points.emplace_back(row[0], row[1]);
      p.series.push_back(std::move(s));
      emit_svg(g, out, p);
    };
  });

  // conformal
  std::string s_range = "0:20:0.1";
  auto* conf = app.add_subcommand("conformal", "Conformal coordinate g(s) and the period a");
  conf->add_option("--kappa-t", kappa_t)->required();
  conf->add_option("--tau-t", tau_t)->required();
  conf->add_option("--s-range", s_range, "start:stop:step")->capture_default_str();
  conf->callback([&] {
    action = [&] {
      require_finite({{"--kappa-t", kappa_t}, {"--tau-t", tau_t}});
      const auto fmt = pick_format(g, "csv", {"csv", "json"}, "conformal");
      const ConformalProfile cp(kappa_t, tau_t, std::min(g.tol, 1e-12));
      if (fmt == "json") {
        ordered_json j;
        j["kappa_t"] = kappa_t;
        j["tau_t"] = tau_t;
        j["a"] = cp.a();
        j["shift"] = cp.shift();
        j["modulus"] = 1.0 - kappa_t / (4.0 * tau_t * tau_t);
        return emit_json(g, out, j);
      }
      const Range r = parse_range(s_range, "--s-range");
      io::CsvTable t;
      t.header = {"s", "g", "g_prime"};
      for (double s : make_grid(r.start, r.stop, r.step)) t.rows.push_back({s, cp.g(s), cp.dg(s)});
      emit_csv(g, out, t);
    };
  });

  // isoperimetric
  std::string h_range = "0.025:20:0.025";
  std::string overlay;
  auto* iso = app.add_subcommand("isoperimetric", "Area and volume of H-tubes in E(4, tau)");
  iso->add_option("--tau", tau)->required();
  iso->add_option("--h-range", h_range, "start:stop:step")->capture_default_str();
  iso->add_option("--overlay", overlay, "CSV with volume,area columns drawn as a comparison curve");
  iso->callback([&] {
    action = [&] {
      require_finite({{"--tau", tau}});
      const auto fmt = pick_format(g, "csv", {"csv", "svg"}, "isoperimetric");
      const Range r = parse_range(h_range, "--h-range");
      const auto rows = isoperimetric_sweep(tau, r.start, r.stop, r.step, g.tol);
      for (const auto& row : rows)
        if (!row.ok) err << "htube: row H=" << io::format_double(row.H) << ": " << row.error << '\n';
      if (fmt == "csv") {
        io::CsvTable t;
        t.header = {"H", "volume", "area", "complement_volume"};
        const double nan = std::nan("");
        for (const auto& row : rows)
          t.rows.push_back({row.H, row.ok ? row.volume : nan, row.ok ? row.area : nan,
                            row.ok ? row.complement_volume : nan});
        return emit_csv(g, out, t);
      }
      svg::Plot p;
      p.title = "Isoperimetric profile, kappa = 4, tau = " + io::format_double(tau);
      p.x_label = "volume";
      p.y_label = "area";
      svg::Series s;
      s.label = "H-tubes";
      for (const auto& row : rows)
        if (row.ok) s.points.emplace_back(row.volume, row.area);
      p.series.push_back(std::move(s));
      if (!overlay.empty()) {
        std::ifstream f(overlay);
        if (!f) throw UsageError("cannot read overlay " + overlay);
        const auto t = io::read_csv(f);
        svg::Series o;
        o.label = fs::path(overlay).filename().string();
        o.color = "#2471a3";
        const auto vi = t.column("volume"), ai = t.column("area");
        for (const auto& row : t.rows) o.points.emplace_back(row[vi], row[ai]);
        p.series.push_back(std::move(o));
      }
      emit_svg(g, out, p);
    };
  });

  // reproduce-figure
  std::string fig_name, out_dir;
  auto* rep = app.add_subcommand("reproduce-figure", "Write the SVG panels of a figure");
  rep->add_option("name", fig_name, "foliation-berger or profiles")->required();
  rep->add_option("--out-dir", out_dir, "Directory for the SVG files (default: HTUBE_OUTPUT_DIR or .)");
  rep->callback([&] {
    action = [&] {
      const auto fig = parse_figure(fig_name);
      if (!fig) throw UsageError("unknown figure '" + fig_name + "'");
      fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
      if (const char* env = std::getenv("HTUBE_OUTPUT_DIR"); env && *env && (out_dir.empty() || dir.is_relative()))
        dir = out_dir.empty() ? fs::path(env) : fs::path(env) / dir;
      const auto res = reproduce_figure(*fig, dir, g.tol);
      for (const auto& f : res.files) out << f.string() << '\n';
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "htube: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (action) action();
    return kOk;
  } catch (const UsageError& e) {
    err << "htube: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "htube: " << e.what() << '\n';
    return is_numerical(e.kind()) ? kNumerical : kDomain;
  } catch (const std::exception& e) {
    err << "htube: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace htube::cli
