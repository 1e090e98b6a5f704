#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "wyner/csv.hpp"
#include "wyner/experiments.hpp"

namespace wyner {

namespace {

constexpr int kWidth = 860, kHeight = 540;
constexpr int kLeft = 70, kRight = 200, kTop = 24, kBottom = 46;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#e377c2", "#7f7f7f", "#17becf", "#bcbd22"};

std::string trim_num(double v) {
  std::ostringstream ss;
  ss.precision(4);
  ss << v;
  return ss.str();
}

}  // namespace

void plot_csv(const std::filesystem::path& csv_path, const std::filesystem::path& svg_path) {
  const auto rows = read_csv(csv_path);
  if (rows.empty()) return;

  std::map<std::string, std::vector<const CsvRow*>> groups;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  bool positive_x = true;
  for (const auto& r : rows) {
    groups[r.series + " (" + r.kind + ")"].push_back(&r);
    xmin = std::min(xmin, r.x);
    xmax = std::max(xmax, r.x);
    ymin = std::min(ymin, r.value);
    ymax = std::max(ymax, r.value);
    if (r.x <= 0) positive_x = false;
  }
  const bool logx = positive_x && xmax / std::max(xmin, 1e-300) > 30.0;
  if (ymax <= ymin) ymax = ymin + 1.0;
  const double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;

  const auto tx = [&](double x) {
    const double lo = logx ? std::log10(xmin) : xmin;
    const double hi = logx ? std::log10(xmax) : xmax;
    const double v = logx ? std::log10(x) : x;
    return kLeft + (v - lo) / (hi - lo) * (kWidth - kLeft - kRight);
  };
  const auto ty = [&](double y) {
    return kHeight - kBottom - (y - ymin) / (ymax - ymin) * (kHeight - kTop - kBottom);
  };

  std::ofstream out(svg_path, std::ios::binary);
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth << "' height='" << kHeight
      << "' font-family='sans-serif' font-size='12'>\n";
  out << "<rect width='100%' height='100%' fill='white'/>\n";
  out << "<rect x='" << kLeft << "' y='" << kTop << "' width='" << kWidth - kLeft - kRight
      << "' height='" << kHeight - kTop - kBottom << "' fill='none' stroke='#444'/>\n";

  for (int i = 0; i <= 5; ++i) {
    const double fx = xmin * std::pow(xmax / xmin, i / 5.0);
    const double lx = logx ? fx : xmin + (xmax - xmin) * i / 5.0;
    out << "<text x='" << tx(lx) << "' y='" << kHeight - kBottom + 18
        << "' text-anchor='middle'>" << trim_num(lx) << "</text>\n";
    const double fy = ymin + (ymax - ymin) * i / 5.0;
    out << "<text x='" << kLeft - 8 << "' y='" << ty(fy) + 4 << "' text-anchor='end'>"
        << trim_num(fy) << "</text>\n";
  }
  out << "<text x='" << (kLeft + kWidth - kRight) / 2 << "' y='" << kHeight - 8
      << "' text-anchor='middle'>" << (logx ? "x (log scale)" : "x") << "</text>\n";

  int color = 0, legend_y = kTop + 14;
  for (const auto& [label, pts] : groups) {
    const char* c = kPalette[color % 10];
    std::ostringstream poly;
    for (const auto* p : pts) poly << tx(p->x) << ',' << ty(p->value) << ' ';
    out << "<polyline points='" << poly.str() << "' fill='none' stroke='" << c
        << "' stroke-width='1.6'/>\n";
    out << "<line x1='" << kWidth - kRight + 10 << "' y1='" << legend_y - 4 << "' x2='"
        << kWidth - kRight + 34 << "' y2='" << legend_y - 4 << "' stroke='" << c
        << "' stroke-width='3'/>\n";
    out << "<text x='" << kWidth - kRight + 40 << "' y='" << legend_y << "'>" << label
        << "</text>\n";
    legend_y += 16;
    ++color;
  }
  out << "</svg>\n";
}

}  // namespace wyner
