#include "nanobeam/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace nanobeam::svg {

namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;
const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  double lo = 0, hi = 1;
  bool log = false;

  double map(double v, double a, double b) const {
    const double t = log ? (std::log10(v) - lo) / (hi - lo) : (v - lo) / (hi - lo);
    return a + t * (b - a);
  }
};

bool usable(double v, bool log) { return std::isfinite(v) && (!log || v > 0.0); }

Axis fit_axis(const std::vector<Series>& series, bool use_x, bool log) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& s : series)
    for (double v : use_x ? s.x : s.y)
      if (usable(v, log)) {
        const double w = log ? std::log10(v) : v;
        lo = std::min(lo, w);
        hi = std::max(hi, w);
      }
  if (!std::isfinite(lo)) lo = 0, hi = 1;
  if (hi - lo < 1e-300) {
    lo -= 0.5;
    hi += 0.5;
  }
  return {lo, hi, log};
}

void header(std::ostringstream& os, const std::string& title) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << escape(title)
     << "</text>\n";
}

void labels(std::ostringstream& os, const std::string& xl, const std::string& yl) {
  os << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 10 << "\" text-anchor=\"middle\">" << escape(xl)
     << "</text>\n"
     << "<text x=\"16\" y=\"" << kHeight / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
     << kHeight / 2 << ")\">" << escape(yl) << "</text>\n";
}

std::string tick_label(double w, bool log) { return log ? "1e" + num(w) : num(w); }

}  // namespace

std::string render(const LinePlot& plot) {
  std::ostringstream os;
  header(os, plot.title);
  const Axis ax = fit_axis(plot.series, true, plot.log_x);
  const Axis ay = fit_axis(plot.series, false, plot.log_y);
  const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;

  os << "<rect x=\"" << x0 << "\" y=\"" << y1 << "\" width=\"" << x1 - x0 << "\" height=\"" << y0 - y1
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double wx = ax.lo + (ax.hi - ax.lo) * i / 4, wy = ay.lo + (ay.hi - ay.lo) * i / 4;
    const double px = x0 + (x1 - x0) * i / 4, py = y0 + (y1 - y0) * i / 4;
    os << "<text x=\"" << num(px) << "\" y=\"" << y0 + 16 << "\" text-anchor=\"middle\">" << tick_label(wx, ax.log)
       << "</text>\n";
    os << "<text x=\"" << x0 - 6 << "\" y=\"" << num(py + 4) << "\" text-anchor=\"end\">" << tick_label(wy, ay.log)
       << "</text>\n";
  }
  labels(os, plot.x_label, plot.y_label);

  for (std::size_t s = 0; s < plot.series.size(); ++s) {
    const auto& ser = plot.series[s];
    const char* color = kColors[s % std::size(kColors)];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < ser.x.size() && i < ser.y.size(); ++i) {
      if (!usable(ser.x[i], ax.log) || !usable(ser.y[i], ay.log)) continue;
      os << num(ax.map(ser.x[i], x0, x1)) << ',' << num(ay.map(ser.y[i], y0, y1)) << ' ';
    }
    os << "\"/>\n";
    os << "<text x=\"" << x1 - 8 << "\" y=\"" << y1 + 16 + 14 * s << "\" text-anchor=\"end\" fill=\"" << color
       << "\">" << escape(ser.label) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render(const HeatMap& map) {
  std::ostringstream os;
  header(os, map.title);
  const std::size_t nx = map.x.size(), ny = map.y.size();
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (double v : map.values)
    if (std::isfinite(v)) lo = std::min(lo, v), hi = std::max(hi, v);
  if (!std::isfinite(lo)) lo = 0, hi = 1;
  const double span = hi > lo ? hi - lo : 1.0;

  const double x0 = kLeft, x1 = kWidth - kRight - 60, y0 = kHeight - kBottom, y1 = kTop;
  const double cw = (x1 - x0) / std::max<std::size_t>(nx, 1), ch = (y0 - y1) / std::max<std::size_t>(ny, 1);
  for (std::size_t r = 0; r < ny; ++r)
    for (std::size_t c = 0; c < nx; ++c) {
      const double v = map.values[r * nx + c];
      std::string fill = "#bbbbbb";
      if (std::isfinite(v)) {
        // white to dark blue
        const double t = (v - lo) / span;
        char buf[16];
        std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(255 * (1 - t)),
                      static_cast<int>(255 * (1 - 0.7 * t)), static_cast<int>(255 - 90 * t));
        fill = buf;
      }
      os << "<rect x=\"" << num(x0 + c * cw) << "\" y=\"" << num(y0 - (r + 1) * ch) << "\" width=\"" << num(cw)
         << "\" height=\"" << num(ch) << "\" fill=\"" << fill << "\" stroke=\"white\"/>\n";
      os << "<text x=\"" << num(x0 + (c + 0.5) * cw) << "\" y=\"" << num(y0 - (r + 0.5) * ch + 4)
         << "\" text-anchor=\"middle\" font-size=\"10\">" << num(v) << "</text>\n";
    }
  for (std::size_t c = 0; c < nx; ++c)
    os << "<text x=\"" << num(x0 + (c + 0.5) * cw) << "\" y=\"" << y0 + 16 << "\" text-anchor=\"middle\">"
       << num(map.x[c]) << "</text>\n";
  for (std::size_t r = 0; r < ny; ++r)
    os << "<text x=\"" << x0 - 6 << "\" y=\"" << num(y0 - (r + 0.5) * ch + 4) << "\" text-anchor=\"end\">"
       << num(map.y[r]) << "</text>\n";
  os << "<text x=\"" << x1 + 10 << "\" y=\"" << y1 + 12 << "\">max " << num(hi) << "</text>\n"
     << "<text x=\"" << x1 + 10 << "\" y=\"" << y0 << "\">min " << num(lo) << "</text>\n";
  labels(os, map.x_label, map.y_label);
  os << "</svg>\n";
  return os.str();
}

}  // namespace nanobeam::svg
