#include "newtres/region_map.hpp"

#include <array>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "newtres/envelope.hpp"
#include "newtres/format.hpp"
#include "newtres/ridge.hpp"
#include "newtres/solver2d.hpp"
#include "newtres/svg.hpp"

namespace newtres {

namespace {

constexpr double kMargin = 20.0;
constexpr double kPlot = 800.0;

const std::array<const char*, 4> kLabelNames = {"i", "ii", "iii", "iv"};
const std::array<const char*, 4> kLabelFills = {"#4c78a8", "#f58518", "#54a24b", "#e45756"};
constexpr const char* kAdmissibleFill = "#54a24b";

struct GridDef {
  std::vector<double> values;  // interior grid, shared by both axes
  double lo, hi;
};

GridDef make_grid(double lo, double hi, int resolution) {
  if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
  if (!(lo < hi)) throw std::invalid_argument("grid bounds must satisfy lo < hi");
  GridDef g;
  g.lo = lo;
  g.hi = hi;
  g.values.resize(resolution);
  const double h = (hi - lo) / (resolution + 1);
  for (int i = 0; i < resolution; ++i) g.values[i] = lo + (i + 1) * h;
  return g;
}

/// Label index 0..3 for a valid cell, -1 otherwise.
int cell_label(const RegionMapOptions& opts, const GridDef& g, int i, int j) {
  if (j >= i) return -1;
  if (opts.kind == MapKind::slope_cases) {
    return static_cast<int>(classify_window(SlopeWindow(g.values[j], g.values[i])).label);
  }
  return static_cast<int>(classify_angles_region(g.values[i], g.values[j]));
}

void svg_cells(std::ostream& out, const GridDef& g, int n,
               const std::vector<int>& label, int label_count,
               const std::array<const char*, 4>& fills) {
  SvgWriter svg(out, kPlot + 2 * kMargin, kPlot + 2 * kMargin);
  const double w = kPlot / (n + 1);
  std::vector<std::string> paths(label_count);
  for (int j = 0; j < n; ++j) {
    const double y = kMargin + (n - j - 0.5) * w;  // top edge of row j
    int i = 0;
    while (i < n) {
      const int lab = label[static_cast<std::size_t>(j) * n + i];
      if (lab < 0) { ++i; continue; }
      int end = i;
      while (end < n && label[static_cast<std::size_t>(j) * n + end] == lab) ++end;
      const double x = kMargin + (i + 0.5) * w;
      paths[lab] += "M" + format_double(x) + " " + format_double(y) + "h" +
                    format_double((end - i) * w) + "v" + format_double(w) + "h-" +
                    format_double((end - i) * w) + "z";
      i = end;
    }
  }
  for (int k = 0; k < label_count; ++k) {
    if (!paths[k].empty()) svg.path(paths[k], fills[k]);
  }
  // Frame and the diagonal boundary of the half-plane.
  svg.line(kMargin, kMargin, kMargin + kPlot, kMargin, "#333333", 1.0);
  svg.line(kMargin + kPlot, kMargin, kMargin + kPlot, kMargin + kPlot, "#333333", 1.0);
  svg.line(kMargin + kPlot, kMargin + kPlot, kMargin, kMargin + kPlot, "#333333", 1.0);
  svg.line(kMargin, kMargin + kPlot, kMargin, kMargin, "#333333", 1.0);
  svg.line(kMargin, kMargin + kPlot, kMargin + kPlot, kMargin, "#333333", 1.0);
}

GridDef grid_for(const RegionMapOptions& opts) {
  if (opts.kind == MapKind::slope_cases) {
    return make_grid(opts.k_min, opts.k_max, opts.resolution);
  }
  GridDef g;
  g.lo = -kHalfPi;
  g.hi = kHalfPi;
  g.values = region_grid_angles(opts.resolution);
  return g;
}

}  // namespace

void write_region_csv(std::ostream& out, const RegionMapOptions& opts) {
  const GridDef g = grid_for(opts);
  const int n = opts.resolution;

  if (opts.kind == MapKind::ridge_admissible) {
    const RegionGrid grid(Angle(opts.theta), n);
    out << "phi1,phi2,admissible,regime,violated\n";
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j) {
        const RidgeVerdict& v = grid.verdict(i, j);
        out << format_double(g.values[i]) << ',' << format_double(g.values[j]) << ','
            << (v.admissible ? 1 : 0) << ',' << to_string(v.regime) << ',';
        for (std::size_t k = 0; k < v.violated.size(); ++k) {
          if (k > 0) out << ';';
          out << v.violated[k];
        }
        out << '\n';
      }
    }
    return;
  }

  out << (opts.kind == MapKind::slope_cases ? "k1,k2,label\n" : "phi1,phi2,label\n");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      out << format_double(g.values[i]) << ',' << format_double(g.values[j]) << ','
          << kLabelNames[cell_label(opts, g, i, j)] << '\n';
    }
  }
}

void write_region_svg(std::ostream& out, const RegionMapOptions& opts) {
  const GridDef g = grid_for(opts);
  const int n = opts.resolution;
  std::vector<int> label(static_cast<std::size_t>(n) * n, -1);

  if (opts.kind == MapKind::ridge_admissible) {
    const RegionGrid grid(Angle(opts.theta), n);
    for (int j = 0; j < n; ++j) {
      for (int i = j + 1; i < n; ++i) {
        label[static_cast<std::size_t>(j) * n + i] = grid.admissible(i, j) ? 0 : -1;
      }
    }
    svg_cells(out, g, n, label, 1, {kAdmissibleFill, "", "", ""});
    return;
  }

  for (int j = 0; j < n; ++j) {
    for (int i = j + 1; i < n; ++i) {
      label[static_cast<std::size_t>(j) * n + i] = cell_label(opts, g, i, j);
    }
  }
  svg_cells(out, g, n, label, 4, kLabelFills);
}

}  // namespace newtres
