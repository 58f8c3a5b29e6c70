#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

#include "threegap/decimal.hpp"
#include "threegap/gaps.hpp"
#include "threegap/oracle.hpp"

namespace threegap {

struct RenderStyle {
    unsigned size_px = 512;
    bool label_points = true;
    std::string first_color = "#1f77b4";
    std::string last_color = "#d62728";
    std::string combined_color = "#2ca02c";
};

inline const std::string& kind_color(const RenderStyle& style, GapKind k) {
    switch (k) {
        case GapKind::FirstGap: return style.first_color;
        case GapKind::LastGap: return style.last_color;
        case GapKind::CombinedGap: return style.combined_color;
    }
    return style.first_color;
}

namespace detail {

/// Exact position in [0,1) to canvas coordinates: the route is an exact
/// 30-digit decimal, then long double trig. Clockwise from 12 o'clock.
struct CanvasPoint {
    long double x = 0;
    long double y = 0;
};

inline CanvasPoint place(const FieldValue& position, long double cx, long double cy,
                         long double radius) {
    const std::string dec = to_decimal(position, 30);
    const long double t = strtold(dec.c_str(), nullptr);
    const long double theta = 2.0L * std::numbers::pi_v<long double> * t;
    return {cx + radius * std::sin(theta), cy - radius * std::cos(theta)};
}

inline std::string coord(long double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.4Lf", v);
    return buf;
}

inline std::string xml_attr(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace detail

/// The configuration as an SVG circle diagram: one stroked arc per gap,
/// colored by kind, points marked and optionally labeled with their index.
/// Every arc carries data-kind, data-start (the index of the point it
/// begins at) and data-sweep-deg (its exact angular extent, 18 significant
/// digits) so the picture stays machine-checkable.
inline std::string render_svg(const CircleConfig& cfg, const RenderStyle& style = {}) {
    require_nonempty(cfg);
    const unsigned size = style.size_px;
    const long double cx = size / 2.0L;
    const long double cy = cx;
    const long double radius = size * 0.4L;
    const unsigned stroke = size / 64 < 2 ? 2 : size / 64;
    const unsigned font = size / 40 < 8 ? 8 : size / 40;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(size) +
           "\" height=\"" + std::to_string(size) + "\" viewBox=\"0 0 " +
           std::to_string(size) + " " + std::to_string(size) + "\" data-alpha=\"" +
           detail::xml_attr(cfg.alpha.text) + "\" data-n=\"" +
           std::to_string(cfg.n_points) + "\">\n";
    svg += "  <rect width=\"" + std::to_string(size) + "\" height=\"" +
           std::to_string(size) + "\" fill=\"#ffffff\"/>\n";

    if (cfg.n_points == 1) {
        svg += "  <circle cx=\"" + detail::coord(cx) + "\" cy=\"" + detail::coord(cy) +
               "\" r=\"" + detail::coord(radius) + "\" fill=\"none\" stroke=\"" +
               style.last_color + "\" stroke-width=\"" + std::to_string(stroke) +
               "\" data-kind=\"LastGap\" data-start=\"0\" data-sweep-deg=\"360\"/>\n";
        svg += "  <circle cx=\"" + detail::coord(cx) + "\" cy=\"" +
               detail::coord(cy - radius) + "\" r=\"3\" fill=\"#333333\"/>\n";
        if (style.label_points) {
            svg += "  <text x=\"" + detail::coord(cx) + "\" y=\"" +
                   detail::coord(cy - radius - 8) +
                   "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"" +
                   std::to_string(font) + "\">0</text>\n";
        }
        svg += "</svg>\n";
        return svg;
    }

    const SortedOrbit so = sorted_orbit(cfg);
    const std::uint64_t n = cfg.n_points;
    const std::uint64_t f = so.entries[1].position;
    const std::uint64_t l = so.entries.back().position;
    const FieldValue half = FieldValue::rational(1, 2);

    std::vector<detail::CanvasPoint> canvas;
    canvas.reserve(n);
    for (const SortedOrbit::Entry& e : so.entries) {
        canvas.push_back(detail::place(e.point, cx, cy, radius));
    }

    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint64_t j = (i + 1) % n;
        const FieldValue len = j == 0
                                   ? sub_raw(field_one(), so.entries[i].point)
                                   : sub_raw(so.entries[j].point, so.entries[i].point);
        const GapKind kind = branch_kind(branch_of(n, f, l, so.entries[i].position));
        const bool large = compare(len, half) > 0;
        svg += "  <path d=\"M " + detail::coord(canvas[i].x) + "," +
               detail::coord(canvas[i].y) + " A " + detail::coord(radius) + "," +
               detail::coord(radius) + " 0 " + (large ? "1" : "0") + ",1 " +
               detail::coord(canvas[j].x) + "," + detail::coord(canvas[j].y) +
               "\" fill=\"none\" stroke=\"" + kind_color(style, kind) +
               "\" stroke-width=\"" + std::to_string(stroke) + "\" data-kind=\"" +
               gap_kind_name(kind) + "\" data-start=\"" +
               std::to_string(so.entries[i].position) + "\" data-sweep-deg=\"" +
               to_decimal(scale_raw(len, 360), 18) + "\"/>\n";
    }

    for (std::uint64_t i = 0; i < n; ++i) {
        svg += "  <circle cx=\"" + detail::coord(canvas[i].x) + "\" cy=\"" +
               detail::coord(canvas[i].y) + "\" r=\"3\" fill=\"#333333\"/>\n";
    }
    if (style.label_points) {
        const long double label_r = radius + stroke + 10;
        for (std::uint64_t i = 0; i < n; ++i) {
            const detail::CanvasPoint p =
                detail::place(so.entries[i].point, cx, cy, label_r);
            svg += "  <text x=\"" + detail::coord(p.x) + "\" y=\"" +
                   detail::coord(p.y + font / 3.0L) +
                   "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"" +
                   std::to_string(font) + "\">" +
                   std::to_string(so.entries[i].position) + "</text>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace threegap
