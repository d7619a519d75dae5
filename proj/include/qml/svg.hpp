#pragma once

#include "qml/chord.hpp"
#include "qml/minor.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <span>
#include <sstream>

namespace qml {

enum class GeodesicStyle { straight, hyperbolic };
enum class StrokeBy { uniform, period, generation };

struct RenderConfig {
    GeodesicStyle geodesic_style = GeodesicStyle::hyperbolic;
    long size_px = 800;
    StrokeBy stroke_by = StrokeBy::uniform;
    bool include_circle = true;
};

namespace detail {

inline std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct Pt {
    double x, y;
};

inline double angle_radians(const Angle& a) {
    return 2.0 * std::numbers::pi *
           (static_cast<double>(a.num()) / static_cast<double>(a.den()));
}

inline const char* palette(std::size_t i) {
    static const char* colors[] = {"#203864", "#8a2f1d", "#1d6b38", "#6b1d66",
                                   "#9a7b0a", "#145e6e", "#5e3314", "#444444"};
    return colors[i % (sizeof(colors) / sizeof(colors[0]))];
}

}  // namespace detail

/// Renders chords as geodesics of the unit disk. One drawable element per
/// chord; degenerate chords become dots. Coordinates carry 12 significant
/// digits; exactness stops at the rendering boundary.
inline std::string render_svg(std::span<const Chord> leaves, const RenderConfig& cfg) {
    if (cfg.size_px <= 0) throw std::invalid_argument("render_svg: size_px must be positive");
    const double size = static_cast<double>(cfg.size_px);
    const double cx = size / 2, cy = size / 2;
    const double radius = size * 0.47;

    auto pixel = [&](const Angle& a) {
        double t = detail::angle_radians(a);
        return detail::Pt{cx + radius * std::cos(t), cy - radius * std::sin(t)};
    };

    auto stroke_of = [&](const Chord& c) -> std::string {
        switch (cfg.stroke_by) {
            case StrokeBy::uniform:
                return "#203864";
            case StrokeBy::period: {
                long p = std::max(orbit_info(c.a()).period, orbit_info(c.b()).period);
                return detail::palette(static_cast<std::size_t>(p));
            }
            case StrokeBy::generation: {
                auto val2 = [](Int d) {
                    long v = 0;
                    while ((d & 1) == 0) { d >>= 1; ++v; }
                    return v;
                };
                long g = std::max(val2(c.a().den()), val2(c.b().den()));
                return detail::palette(static_cast<std::size_t>(g));
            }
        }
        return "#203864";
    };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cfg.size_px << "\" height=\""
        << cfg.size_px << "\" viewBox=\"0 0 " << cfg.size_px << " " << cfg.size_px << "\">\n";
    if (cfg.include_circle) {
        out << "  <circle class=\"boundary\" cx=\"" << detail::fmt12(cx) << "\" cy=\""
            << detail::fmt12(cy) << "\" r=\"" << detail::fmt12(radius)
            << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    }
    for (const Chord& c : leaves) {
        std::string stroke = stroke_of(c);
        if (c.degenerate()) {
            detail::Pt p = pixel(c.a());
            out << "  <circle class=\"leaf\" cx=\"" << detail::fmt12(p.x) << "\" cy=\""
                << detail::fmt12(p.y) << "\" r=\"" << detail::fmt12(size / 400.0) << "\" fill=\""
                << stroke << "\"/>\n";
            continue;
        }
        detail::Pt p1 = pixel(c.a());
        detail::Pt p2 = pixel(c.b());
        bool straight = cfg.geodesic_style == GeodesicStyle::straight || is_diameter(c);
        if (straight) {
            out << "  <line class=\"leaf\" x1=\"" << detail::fmt12(p1.x) << "\" y1=\""
                << detail::fmt12(p1.y) << "\" x2=\"" << detail::fmt12(p2.x) << "\" y2=\""
                << detail::fmt12(p2.y) << "\" stroke=\"" << stroke
                << "\" stroke-width=\"0.8\" fill=\"none\"/>\n";
            continue;
        }
        // Circle through the endpoints orthogonal to the unit circle: its
        // center c0 (unit coordinates) solves c0 . P1 = c0 . P2 = 1.
        double t1 = detail::angle_radians(c.a());
        double t2 = detail::angle_radians(c.b());
        double x1 = std::cos(t1), y1 = std::sin(t1);
        double x2 = std::cos(t2), y2 = std::sin(t2);
        double det = x1 * y2 - y1 * x2;
        double ux = (y2 - y1) / det;
        double uy = (x1 - x2) / det;
        double r_unit = std::sqrt(ux * ux + uy * uy - 1.0);
        double r_px = r_unit * radius;
        detail::Pt center{cx + radius * ux, cy - radius * uy};
        double v1x = p1.x - center.x, v1y = p1.y - center.y;
        double v2x = p2.x - center.x, v2y = p2.y - center.y;
        int sweep = (v1x * v2y - v1y * v2x) > 0 ? 1 : 0;
        out << "  <path class=\"leaf\" d=\"M " << detail::fmt12(p1.x) << " " << detail::fmt12(p1.y)
            << " A " << detail::fmt12(r_px) << " " << detail::fmt12(r_px) << " 0 0 " << sweep << " "
            << detail::fmt12(p2.x) << " " << detail::fmt12(p2.y) << "\" stroke=\"" << stroke
            << "\" stroke-width=\"0.8\" fill=\"none\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace qml
