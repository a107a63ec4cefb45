#include "htube/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace htube::svg {

namespace {

std::string fixed(double x, int digits = 2) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, digits);
  std::string s(buf, res.ptr);
  if (s == "-0.00" || s == "-0.0" || s == "-0") s.erase(0, 1);
  return s;
}

std::string tick_label(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 4);
  std::string s(buf, res.ptr);
  return s == "-0" ? "0" : s;
}

std::string escape(const std::string& in) {
  std::string out;
  for (char c : in) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Ticks at 1, 2 or 5 times a power of ten.
std::vector<double> nice_ticks(double lo, double hi) {
  const double span = hi - lo;
  const double raw = span / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (span / step <= 7.0) break;
  }
  std::vector<double> ticks;
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * span; t += step)
    ticks.push_back(std::abs(t) < 1e-12 * span ? 0.0 : t);
  return ticks;
}

}  // namespace

std::string render(const Plot& plot) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : plot.series)
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (!std::isfinite(xmin)) xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  if (xmax - xmin <= 0.0) xmin -= 0.5, xmax += 0.5;
  if (ymax - ymin <= 0.0) ymin -= 0.5, ymax += 0.5;
  const double padx = 0.04 * (xmax - xmin), pady = 0.04 * (ymax - ymin);
  xmin -= padx, xmax += padx, ymin -= pady, ymax += pady;

  const double left = 70, right = 20, top = 40, bottom = 55;
  double pw = plot.width - left - right, ph = plot.height - top - bottom;
  if (plot.equal_aspect) {
    const double sx = pw / (xmax - xmin), sy = ph / (ymax - ymin);
    const double s = std::min(sx, sy);
    const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
    xmin = cx - 0.5 * pw / s, xmax = cx + 0.5 * pw / s;
    ymin = cy - 0.5 * ph / s, ymax = cy + 0.5 * ph / s;
  }
  auto X = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
  auto Y = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << plot.width << "\" height=\"" << plot.height
    << "\" viewBox=\"0 0 " << plot.width << ' ' << plot.height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << fixed(plot.width / 2.0) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
    << escape(plot.title) << "</text>\n";
  o << "<rect x=\"" << fixed(left) << "\" y=\"" << fixed(top) << "\" width=\"" << fixed(pw) << "\" height=\""
    << fixed(ph) << "\" fill=\"none\" stroke=\"#333\"/>\n";

  for (double t : nice_ticks(xmin, xmax)) {
    const double x = X(t);
    o << "<line x1=\"" << fixed(x) << "\" y1=\"" << fixed(top + ph) << "\" x2=\"" << fixed(x) << "\" y2=\""
      << fixed(top + ph + 5) << "\" stroke=\"#333\"/>";
    o << "<text x=\"" << fixed(x) << "\" y=\"" << fixed(top + ph + 18) << "\" text-anchor=\"middle\">"
      << tick_label(t) << "</text>\n";
  }
  for (double t : nice_ticks(ymin, ymax)) {
    const double y = Y(t);
    o << "<line x1=\"" << fixed(left - 5) << "\" y1=\"" << fixed(y) << "\" x2=\"" << fixed(left) << "\" y2=\""
      << fixed(y) << "\" stroke=\"#333\"/>";
    o << "<text x=\"" << fixed(left - 8) << "\" y=\"" << fixed(y + 4) << "\" text-anchor=\"end\">"
      << tick_label(t) << "</text>\n";
  }
  o << "<text x=\"" << fixed(left + pw / 2) << "\" y=\"" << fixed(plot.height - 12.0)
    << "\" text-anchor=\"middle\">" << escape(plot.x_label) << "</text>\n";
  o << "<text transform=\"translate(16," << fixed(top + ph / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
    << escape(plot.y_label) << "</text>\n";

  o << "<clipPath id=\"plot-area\"><rect x=\"" << fixed(left) << "\" y=\"" << fixed(top) << "\" width=\""
    << fixed(pw) << "\" height=\"" << fixed(ph) << "\"/></clipPath>\n";
  o << "<g clip-path=\"url(#plot-area)\">\n";
  double legend_y = top + 16;
  for (const auto& s : plot.series) {
    if (s.markers) {
      for (const auto& [x, y] : s.points)
        if (std::isfinite(x) && std::isfinite(y))
          o << "<circle cx=\"" << fixed(X(x)) << "\" cy=\"" << fixed(Y(y)) << "\" r=\"1.5\" fill=\"" << s.color
            << "\"/>\n";
    } else {
      o << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.2\" points=\"";
      bool first = true;
      for (const auto& [x, y] : s.points) {
        if (!std::isfinite(x) || !std::isfinite(y)) continue;
        o << (first ? "" : " ") << fixed(X(x)) << ',' << fixed(Y(y));
        first = false;
      }
      o << "\"/>\n";
    }
    if (!s.label.empty()) {
      o << "<text x=\"" << fixed(left + pw - 8) << "\" y=\"" << fixed(legend_y) << "\" text-anchor=\"end\" fill=\""
        << s.color << "\">" << escape(s.label) << "</text>\n";
      legend_y += 15;
    }
  }
  o << "</g>\n</svg>\n";
  return o.str();
}

}  // namespace htube::svg
