#include "cli/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace kgwell::cli {

namespace {

std::string fmt(const char* f, double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, f, v);
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

}  // namespace

std::string svg_line_plot(const std::vector<double>& x, const std::vector<double>& y, const std::string& title,
                          const std::string& x_label, const std::string& y_label) {
  constexpr double W = 640, H = 400, ml = 70, mr = 20, mt = 36, mb = 50;
  const double pw = W - ml - mr, ph = H - mt - mb;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!x.empty()) {
    const auto [xa, xb] = std::minmax_element(x.begin(), x.end());
    const auto [ya, yb] = std::minmax_element(y.begin(), y.end());
    x0 = *xa;
    x1 = *xb;
    y0 = std::min(0.0, *ya);
    y1 = *yb;
  }
  if (x1 <= x0) x1 = x0 + 1;
  if (y1 <= y0) y1 = y0 + 1;

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" viewBox=\"0 0 640 400\">\n";
  s += "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
  s += "<text x=\"320\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" +
       escape(title) + "</text>\n";
  s += "<rect x=\"70\" y=\"36\" width=\"550\" height=\"314\" fill=\"none\" stroke=\"black\"/>\n";
  s += "<text x=\"345\" y=\"390\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
       escape(x_label) + "</text>\n";
  s += "<text x=\"16\" y=\"193\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
       "transform=\"rotate(-90 16 193)\">" +
       escape(y_label) + "</text>\n";
  const auto label = [&](double px, double py, const char* anchor, double v) {
    s += "<text x=\"" + fmt("%.1f", px) + "\" y=\"" + fmt("%.1f", py) + "\" text-anchor=\"" + anchor +
         "\" font-family=\"sans-serif\" font-size=\"10\">" + fmt("%.4g", v) + "</text>\n";
  };
  label(ml, H - mb + 16, "middle", x0);
  label(ml + pw, H - mb + 16, "middle", x1);
  label(ml - 6, H - mb, "end", y0);
  label(ml - 6, mt + 8, "end", y1);

  s += "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.2\" points=\"";
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    const double px = ml + pw * (x[i] - x0) / (x1 - x0);
    const double py = mt + ph * (1.0 - (y[i] - y0) / (y1 - y0));
    if (i) s += ' ';
    s += fmt("%.2f", px) + "," + fmt("%.2f", py);
  }
  s += "\"/>\n</svg>\n";
  return s;
}

}  // namespace kgwell::cli
