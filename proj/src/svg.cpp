#include "cesarolab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace cesarolab {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

} // namespace

void write_svg(std::ostream& os, const std::vector<PlotSeries>& series, const SvgOptions& opts) {
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    bool any = false;
    for (const PlotSeries& s : series) {
        for (const auto& [x, y] : s.points) {
            if (!any) {
                x0 = x1 = x;
                y0 = y1 = y;
                any = true;
            }
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
            y0 = std::min(y0, y);
            y1 = std::max(y1, y);
        }
    }
    if (opts.unit_circle) {
        x0 = std::min(x0, -1.0);
        x1 = std::max(x1, 1.0);
        y0 = std::min(y0, -1.0);
        y1 = std::max(y1, 1.0);
    }
    // Equal scale, 5% padding.
    const double span = std::max({x1 - x0, y1 - y0, 1e-12});
    const double cx0 = 0.5 * (x0 + x1), cy0 = 0.5 * (y0 + y1);
    const double half = 0.525 * span;
    x0 = cx0 - half;
    x1 = cx0 + half;
    y0 = cy0 - half;
    y1 = cy0 + half;

    const double size = opts.size;
    auto px = [&](double x) { return (x - x0) / (x1 - x0) * size; };
    auto py = [&](double y) { return size - (y - y0) / (y1 - y0) * size; };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size) << "\" height=\""
       << fmt(size) << "\" viewBox=\"0 0 " << fmt(size) << ' ' << fmt(size) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (opts.axes) {
        if (y0 < 0 && y1 > 0)
            os << "<line x1=\"0\" y1=\"" << fmt(py(0)) << "\" x2=\"" << fmt(size) << "\" y2=\""
               << fmt(py(0)) << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
        if (x0 < 0 && x1 > 0)
            os << "<line x1=\"" << fmt(px(0)) << "\" y1=\"0\" x2=\"" << fmt(px(0)) << "\" y2=\""
               << fmt(size) << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    }
    if (opts.unit_circle)
        os << "<circle cx=\"" << fmt(px(0)) << "\" cy=\"" << fmt(py(0)) << "\" r=\""
           << fmt(size / (x1 - x0)) << "\" fill=\"none\" stroke=\"#aaaaaa\" stroke-width=\"1\" "
              "stroke-dasharray=\"4 3\"/>\n";

    std::size_t color = 0;
    for (const PlotSeries& s : series) {
        os << "<polyline fill=\"none\" stroke=\"" << kPalette[color % 8]
           << "\" stroke-width=\"1.2\" points=\"";
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            if (i) os << ' ';
            os << fmt(px(s.points[i].first)) << ',' << fmt(py(s.points[i].second));
        }
        os << "\"><title>" << s.label << "</title></polyline>\n";
        ++color;
    }
    os << "</svg>\n";
}

void write_svg_file(const std::string& path, const std::vector<PlotSeries>& series,
                    const SvgOptions& opts) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_svg(out, series, opts);
}

} // namespace cesarolab
