#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace diracsim {

/// One plotted curve; yerr may be empty (no error bars).
struct Series {
    std::string label;
    std::vector<double> x, y, yerr;
};

struct PlotStyle {
    std::string title, x_label, y_label;
    int width = 820, height = 520;
    bool legend = true;
};

/// Self-contained single-panel SVG line plot (axes, ticks, optional
/// error bars, legend); throws on empty input or I/O failure.
void emit_plot(const std::vector<Series>& series, const PlotStyle& style,
               const std::filesystem::path& path);

/// Vertically stacked panels sharing the x axis (density snapshots).
void emit_panels(const std::vector<std::vector<Series>>& panels,
                 const std::vector<std::string>& panel_titles, const PlotStyle& style,
                 const std::filesystem::path& path);

}  // namespace diracsim
