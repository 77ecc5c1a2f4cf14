#include "hyperion/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "hyperion/catalog.hpp"
#include "hyperion/tolerance.hpp"

namespace hyperion {

namespace {

constexpr double kRowHeight = 140.0;
constexpr double kPanelWidth = 160.0;
constexpr double kRadius = 50.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
  return buf;
}

struct Frame {
  double cx;
  double cy;
  double top_log;  // log-magnitude drawn at kRadius

  double radius(double log_mag) const { return log_mag == kBottom ? 0.0 : kRadius * std::exp(log_mag - top_log); }
  double x(double r, double angle) const { return cx + r * std::cos(angle); }
  double y(double r, double angle) const { return cy - r * std::sin(angle); }
};

void marker(std::string& out, const Frame& f, double r, double angle, const char* cls) {
  out += "  <circle class=\"" + std::string(cls) + "\" cx=\"" + fmt(f.x(r, angle)) + "\" cy=\"" + fmt(f.y(r, angle)) +
         "\" r=\"3\"/>\n";
}

void guide(std::string& out, const Frame& f, double r) {
  out += "  <circle class=\"guide\" cx=\"" + fmt(f.cx) + "\" cy=\"" + fmt(f.cy) + "\" r=\"" + fmt(r) +
         "\" fill=\"none\" stroke=\"#bbb\" stroke-dasharray=\"2 2\"/>\n";
}

void disk(std::string& out, const Frame& f, double r) {
  out += "  <path class=\"disk\" d=\"M " + fmt(f.cx + r) + " " + fmt(f.cy) + " A " + fmt(r) + " " + fmt(r) + " 0 1 0 " +
         fmt(f.cx - r) + " " + fmt(f.cy) + " A " + fmt(r) + " " + fmt(r) + " 0 1 0 " + fmt(f.cx + r) + " " + fmt(f.cy) +
         " Z\" fill=\"#9ecae1\" stroke=\"#3182bd\"/>\n";
}

void arc(std::string& out, const Frame& f, double r, const Arc& a) {
  if (a.is_point()) {
    marker(out, f, r, a.start, "sum");
    return;
  }
  // Full circles are drawn as two half arcs; SVG cannot close an arc on itself.
  double mid = a.start + a.length / 2;
  auto piece = [&](double from, double to) {
    out += "  <path class=\"arc\" d=\"M " + fmt(f.x(r, from)) + " " + fmt(f.y(r, from)) + " A " + fmt(r) + " " + fmt(r) +
           " 0 0 0 " + fmt(f.x(r, to)) + " " + fmt(f.y(r, to)) + "\" fill=\"none\" stroke=\"#e6550d\" stroke-width=\"3\"/>\n";
  };
  piece(a.start, mid);
  piece(mid, a.end());
  if (a.open_lo) marker(out, f, r, a.start, "open");
  if (a.open_hi) marker(out, f, r, a.end(), "open");
}

}  // namespace

std::vector<ElementPair> figure_pairs() {
  return {
      {PolarComplex::polar(0.0, kPi / 4), PolarComplex::polar(0.0, 5 * kPi / 4)},
      {PolarComplex::polar(0.0, kPi / 4), PolarComplex::polar(-0.7, 3 * kPi / 4)},
      {PolarComplex::polar(0.0, kPi / 6), PolarComplex::polar(0.0, 2 * kPi / 3)},
  };
}

std::string emit_regions(const std::vector<ElementPair>& pairs) {
  const Hyperfield& h = tropical_complex();
  double width = 2 * kPanelWidth;
  double height = kRowHeight * static_cast<double>(std::max<std::size_t>(pairs.size(), 1));
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
                    "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
  out += "  <style>.operand{fill:#31a354}.sum{fill:#e6550d}.open{fill:#fff;stroke:#e6550d}</style>\n";
  for (std::size_t row = 0; row < pairs.size(); ++row) {
    const auto& z = std::get<PolarComplex>(pairs[row].first);
    const auto& w = std::get<PolarComplex>(pairs[row].second);
    double top = std::max(z.log_mag, w.log_mag);
    if (top == kBottom) top = 0.0;
    double cy = kRowHeight * (static_cast<double>(row) + 0.5);
    Frame left{kPanelWidth / 2, cy, top};
    Frame right{kPanelWidth * 1.5, cy, top};
    out += " <g class=\"row\" id=\"row" + std::to_string(row) + "\">\n";

    guide(out, left, kRadius);
    for (const auto* p : {&z, &w}) {
      if (p->is_zero()) {
        marker(out, left, 0.0, 0.0, "operand");
      } else {
        marker(out, left, left.radius(p->log_mag), p->angle, "operand");
      }
    }

    guide(out, right, kRadius);
    ValueSet value = h.hyperadd(pairs[row].first, pairs[row].second);
    const auto& sum = value.as<ComplexRegionSet>();
    if (sum.disk) disk(out, right, right.radius(*sum.disk));
    if (sum.has_zero) marker(out, right, 0.0, 0.0, "sum");
    for (const auto& layer : sum.layers) {
      for (const Arc& a : layer.angles.arcs()) arc(out, right, right.radius(layer.log_radius), a);
    }
    out += " </g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace hyperion
