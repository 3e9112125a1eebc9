#ifndef COYOTE_PLOT_HPP
#define COYOTE_PLOT_HPP

#include <string>
#include <vector>

namespace coyote {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotStyle {
  int width = 800;
  int height = 600;
  bool loglog = false; // plot log10|x| vs log10|y|, skipping zeros
  std::string title;
  std::string x_label;
  std::string y_label;
};

/// Deterministic static SVG: fixed viewport, fixed palette, no
/// timestamps; identical input produces byte-identical output. One
/// polyline per series, plus axes, ticks and a legend. Throws on an
/// empty series list.
std::string render_plot(const std::vector<Series>& series, const PlotStyle& style);

} // namespace coyote

#endif
