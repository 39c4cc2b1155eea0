#include "gausslab/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gausslab {

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string render_svg_plot(const std::vector<SvgSeries>& series,
                            const std::string& x_label,
                            const std::string& y_label, int width, int height) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series)
        for (auto [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (!(xmin <= xmax)) { xmin = 0; xmax = 1; ymin = 0; ymax = 1; }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;

    const double ml = 60, mr = 20, mt = 20, mb = 45;
    const double pw = width - ml - mr, ph = height - mt - mb;
    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return mt + ph - (y - ymin) / (ymax - ymin) * ph; };

    std::ostringstream os;
    os.precision(8);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw
       << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"#333\"/>\n";
    os << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 8
       << "\" text-anchor=\"middle\" font-size=\"13\">" << x_label << "</text>\n";
    os << "<text x=\"14\" y=\"" << mt + ph / 2
       << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 14 "
       << mt + ph / 2 << ")\">" << y_label << "</text>\n";
    // axis extremes
    os << "<text x=\"" << ml << "\" y=\"" << height - mb + 16
       << "\" font-size=\"11\">" << xmin << "</text>\n";
    os << "<text x=\"" << ml + pw << "\" y=\"" << height - mb + 16
       << "\" text-anchor=\"end\" font-size=\"11\">" << xmax << "</text>\n";
    os << "<text x=\"" << ml - 4 << "\" y=\"" << mt + ph
       << "\" text-anchor=\"end\" font-size=\"11\">" << ymin << "</text>\n";
    os << "<text x=\"" << ml - 4 << "\" y=\"" << mt + 10
       << "\" text-anchor=\"end\" font-size=\"11\">" << ymax << "</text>\n";

    int legend_y = static_cast<int>(mt) + 14;
    for (const auto& s : series) {
        if (s.line && s.points.size() > 1) {
            os << "<polyline fill=\"none\" stroke=\"" << s.color
               << "\" stroke-width=\"1.5\" points=\"";
            for (auto [x, y] : s.points) os << px(x) << ',' << py(y) << ' ';
            os << "\"/>\n";
        }
        for (auto [x, y] : s.points)
            os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y)
               << "\" r=\"2\" fill=\"" << s.color << "\"/>\n";
        if (!s.label.empty()) {
            os << "<text x=\"" << ml + 8 << "\" y=\"" << legend_y
               << "\" font-size=\"12\" fill=\"" << s.color << "\">" << s.label
               << "</text>\n";
            legend_y += 16;
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace gausslab
