#include <cmath>
#include <cstdio>
#include <sstream>

#include "ncfact/export.hpp"

namespace ncfact {

namespace {

constexpr double kTau = 6.283185307179586;
constexpr double kRadius = 230.0;

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
constexpr int kPaletteSize = 8;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

struct Canvas {
  double cx, cy;
  std::string x(double angle) const { return fmt(cx + kRadius * std::cos(angle)); }
  std::string y(double angle) const { return fmt(cy - kRadius * std::sin(angle)); }
};

}  // namespace

std::string render_ncs_svg(const NCSPartition& p, bool with_panel) {
  const int width = with_panel ? 1024 : 512;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width
     << " 512\" width=\"" << width << "\" height=\"512\">\n";

  Canvas left{256.0, 256.0};
  os << "<circle cx=\"256\" cy=\"256\" r=\"" << fmt(kRadius)
     << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";

  int color_index = 0;
  for (const auto& [pos, partition] : p.support) {
    auto blocks = partition.nontrivial_blocks();
    const char* color = kPalette[color_index % kPaletteSize];
    if (!blocks.empty()) ++color_index;
    for (const auto& block : blocks) {
      std::vector<double> angles;
      angles.reserve(block.size());
      for (int m : block) {
        angles.push_back(kTau * (rational_to_double(pos) + (m - 1)) / p.d);
      }
      if (block.size() == 2) {
        os << "<line x1=\"" << left.x(angles[0]) << "\" y1=\"" << left.y(angles[0]) << "\" x2=\""
           << left.x(angles[1]) << "\" y2=\"" << left.y(angles[1]) << "\" stroke=\"" << color
           << "\" stroke-width=\"2\"/>\n";
      } else {
        os << "<polygon points=\"";
        for (std::size_t i = 0; i < angles.size(); ++i) {
          if (i) os << ' ';
          os << left.x(angles[i]) << ',' << left.y(angles[i]);
        }
        os << "\" fill=\"" << color << "\" fill-opacity=\"0.55\" stroke=\"" << color
           << "\" stroke-width=\"1.5\"/>\n";
      }
      for (double angle : angles) {
        os << "<circle cx=\"" << left.x(angle) << "\" cy=\"" << left.y(angle)
           << "\" r=\"3\" fill=\"" << color << "\"/>\n";
      }
    }
  }

  if (with_panel) {
    Canvas right{768.0, 256.0};
    os << "<circle cx=\"768\" cy=\"256\" r=\"" << fmt(kRadius)
       << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    int panel_color = 0;
    for (const auto& [pos, partition] : p.support) {
      if (partition.nontrivial_blocks().empty()) continue;
      const char* color = kPalette[panel_color % kPaletteSize];
      ++panel_color;
      double angle = kTau * rational_to_double(pos);
      os << "<circle cx=\"" << right.x(angle) << "\" cy=\"" << right.y(angle)
         << "\" r=\"5\" fill=\"" << color << "\"/>\n";
    }
  }

  os << "</svg>\n";
  return os.str();
}

}  // namespace ncfact
