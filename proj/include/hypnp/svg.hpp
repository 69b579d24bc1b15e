#pragma once

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polygon.hpp"

namespace hypnp {

/// Static SVG with the given polygons drawn as polylines from the
/// origin, slope labels on each segment.
inline std::string polygons_svg(const std::vector<std::pair<Polygon, std::string>>& polys) {
    const double W = 640, H = 480, PAD = 50;
    double xmax = 1, ymax = 1;
    for (const auto& [poly, color] : polys)
        for (const auto& [k, h] : poly.vertices()) {
            xmax = std::max(xmax, static_cast<double>(k));
            ymax = std::max(ymax, static_cast<double>(rat_num(h)) / static_cast<double>(rat_den(h)));
        }
    auto px = [&](double x) { return PAD + x / xmax * (W - 2 * PAD); };
    auto py = [&](double y) { return H - PAD - y / ymax * (H - 2 * PAD); };
    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(static_cast<int>(W)) +
         "\" height=\"" + std::to_string(static_cast<int>(H)) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    s += "<line x1=\"" + std::to_string(px(0)) + "\" y1=\"" + std::to_string(py(0)) + "\" x2=\"" +
         std::to_string(px(xmax)) + "\" y2=\"" + std::to_string(py(0)) +
         "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    s += "<line x1=\"" + std::to_string(px(0)) + "\" y1=\"" + std::to_string(py(0)) + "\" x2=\"" +
         std::to_string(px(0)) + "\" y2=\"" + std::to_string(py(ymax)) +
         "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    for (const auto& [poly, color] : polys) {
        auto verts = poly.vertices();
        std::string pts;
        for (const auto& [k, h] : verts) {
            double y = static_cast<double>(rat_num(h)) / static_cast<double>(rat_den(h));
            pts += std::to_string(px(k)) + "," + std::to_string(py(y)) + " ";
        }
        s += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color +
             "\" stroke-width=\"2\"/>\n";
        for (size_t i = 1; i < verts.size(); ++i) {
            double y0 = static_cast<double>(rat_num(verts[i - 1].second)) /
                        static_cast<double>(rat_den(verts[i - 1].second));
            double y1 = static_cast<double>(rat_num(verts[i].second)) /
                        static_cast<double>(rat_den(verts[i].second));
            Rat slope = (verts[i].second - verts[i - 1].second) /
                        Rat(verts[i].first - verts[i - 1].first);
            double mx = (px(verts[i - 1].first) + px(verts[i].first)) / 2;
            double my = (py(y0) + py(y1)) / 2 - 6;
            s += "<text x=\"" + std::to_string(mx) + "\" y=\"" + std::to_string(my) +
                 "\" font-size=\"12\" fill=\"" + color + "\">" + rat_str(slope) + "</text>\n";
        }
        for (const auto& [k, h] : verts) {
            double y = static_cast<double>(rat_num(h)) / static_cast<double>(rat_den(h));
            s += "<circle cx=\"" + std::to_string(px(k)) + "\" cy=\"" + std::to_string(py(y)) +
                 "\" r=\"3\" fill=\"" + color + "\"/>\n";
        }
    }
    s += "</svg>\n";
    return s;
}

inline void write_svg(const std::string& path,
                      const std::vector<std::pair<Polygon, std::string>>& polys) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << polygons_svg(polys);
}

}  // namespace hypnp
