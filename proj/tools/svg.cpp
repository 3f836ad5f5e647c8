// SPDX-License-Identifier: Apache-2.0

#include "svg.hpp"

#include <cstdio>

namespace triad {

namespace {

constexpr double kPlot = 600.0;
constexpr double kMargin = 10.0;

std::string fixed(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

std::string render_partition_svg(const PartitionState& state,
                                 const std::vector<Point>& eval_points)
{
    if (state.dimension() != 2) {
        throw RenderError("only 2-D partitions can be rendered (got N = " +
                          std::to_string(state.dimension()) + ")");
    }
    const auto& domain = state.domain();
    const double x0 = domain[0].first.to_double();
    const double x1 = domain[0].second.to_double();
    const double y0 = domain[1].first.to_double();
    const double y1 = domain[1].second.to_double();

    const auto sx = [&](double x) { return kMargin + (x - x0) / (x1 - x0) * kPlot; };
    const auto sy = [&](double y) { return kMargin + (y1 - y) / (y1 - y0) * kPlot; };

    const double size = kPlot + 2 * kMargin;
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(size) +
           "\" height=\"" + fixed(size) + "\" viewBox=\"0 0 " + fixed(size) + " " +
           fixed(size) + "\">\n";
    svg += "<g fill=\"none\" stroke=\"black\" stroke-width=\"1\">\n";
    for (int id = 1; id <= state.max_id(); ++id) {
        const Cell& cell = state.cell(id);
        const Point lo = min_corner(cell);
        const Point hi = max_corner(cell);
        const double left = sx(lo[0].to_double());
        const double top = sy(hi[1].to_double());
        const double width = sx(hi[0].to_double()) - left;
        const double height = sy(lo[1].to_double()) - top;
        svg += "<rect x=\"" + fixed(left) + "\" y=\"" + fixed(top) + "\" width=\"" +
               fixed(width) + "\" height=\"" + fixed(height) + "\"/>\n";
    }
    svg += "</g>\n";
    for (std::size_t i = 0; i < eval_points.size(); ++i) {
        const double cx = sx(eval_points[i][0].to_double());
        const double cy = sy(eval_points[i][1].to_double());
        svg += "<circle cx=\"" + fixed(cx) + "\" cy=\"" + fixed(cy) +
               "\" r=\"4\" fill=\"black\"/>\n";
        svg += "<text x=\"" + fixed(cx + 6.0) + "\" y=\"" + fixed(cy - 6.0) +
               "\" font-family=\"sans-serif\" font-size=\"14\">" +
               std::to_string(i + 1) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace triad
