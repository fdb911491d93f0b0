#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace cesarolab {

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

struct SvgOptions {
    double size = 800;       // square canvas, 1:1 aspect
    bool axes = true;
    bool unit_circle = false;
};

/// Self-contained polyline plot: fixed viewBox from the data bounding box,
/// equal x/y scaling, deterministic output for identical input.
void write_svg(std::ostream& os, const std::vector<PlotSeries>& series,
               const SvgOptions& opts = {});
void write_svg_file(const std::string& path, const std::vector<PlotSeries>& series,
                    const SvgOptions& opts = {});

} // namespace cesarolab
