#pragma once

#include <string>
#include <vector>

namespace gausslab {

/// Writes text to path, creating parent-less files only; throws on failure.
void write_text_file(const std::string& path, const std::string& text);

/// Minimal dependency-free SVG scatter/line plot.
struct SvgSeries {
    std::string label;
    std::string color = "#1f77b4";
    bool line = true;
    std::vector<std::pair<double, double>> points;
};

std::string render_svg_plot(const std::vector<SvgSeries>& series,
                            const std::string& x_label,
                            const std::string& y_label,
                            int width = 720, int height = 480);

}  // namespace gausslab
