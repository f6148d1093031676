#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hdds/color.hpp"
#include "hdds/geometry.hpp"

namespace hdds {

/// Filled (and/or stroked) circular sector: two radii plus one arc, anchored
/// at (cx, cy) on the flat side. `up` domes above the diameter line.
struct sector_elem {
    double cx{0}, cy{0}, radius{0};
    double theta_start{0}, theta_end{0};
    orientation orient{orientation::up};
    std::optional<rgb_color> fill;
    std::optional<rgb_color> stroke;
    double stroke_width{0};
};

struct line_elem {
    double x1{0}, y1{0}, x2{0}, y2{0};
    double width{1};
    rgb_color stroke;
};

struct circle_elem {
    double cx{0}, cy{0}, radius{1};
    rgb_color fill;
};

enum class text_anchor { start, middle, end };

struct text_elem {
    double x{0}, y{0};
    double size{12};
    text_anchor anchor{text_anchor::middle};
    std::string text;
    rgb_color fill{0, 0, 0};
};

using element = std::variant<sector_elem, line_elem, circle_elem, text_elem>;

/// An ordered drawing; elements paint back-to-front. Identical inputs and
/// seed serialize to identical bytes.
struct figure_doc {
    double width{0};
    double height{0};
    std::uint64_t seed{0};
    std::vector<element> elements;
};

/// Uniformly rescale all coordinates and sizes; fills are untouched.
inline figure_doc scaled(const figure_doc& doc, double factor) {
    figure_doc out = doc;
    out.width *= factor;
    out.height *= factor;
    for (element& e : out.elements) {
        if (auto* s = std::get_if<sector_elem>(&e)) {
            s->cx *= factor; s->cy *= factor; s->radius *= factor;
            s->stroke_width *= factor;
        } else if (auto* l = std::get_if<line_elem>(&e)) {
            l->x1 *= factor; l->y1 *= factor; l->x2 *= factor; l->y2 *= factor;
            l->width *= factor;
        } else if (auto* c = std::get_if<circle_elem>(&e)) {
            c->cx *= factor; c->cy *= factor; c->radius *= factor;
        } else if (auto* t = std::get_if<text_elem>(&e)) {
            t->x *= factor; t->y *= factor; t->size *= factor;
        }
    }
    return out;
}

namespace detail {

/// Fixed 4-decimal formatting, locale-independent, with -0.0000 normalized.
inline std::string fmt4(double v) {
    if (std::fabs(v) < 0.00005) v = 0.0;
    char buf[48];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 4);
    return std::string(buf, res.ptr);
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

inline void append_sector(std::string& svg, const sector_elem& s) {
    const double sign = s.orient == orientation::up ? -1.0 : 1.0;
    const double x0 = s.cx + s.radius * std::cos(s.theta_start);
    const double y0 = s.cy + sign * s.radius * std::sin(s.theta_start);
    const double x1 = s.cx + s.radius * std::cos(s.theta_end);
    const double y1 = s.cy + sign * s.radius * std::sin(s.theta_end);
    const int large = (s.theta_end - s.theta_start) > M_PI ? 1 : 0;
    const int sweep = s.orient == orientation::up ? 0 : 1;
    svg += "<path d=\"M " + fmt4(s.cx) + " " + fmt4(s.cy) + " L " + fmt4(x0) + " " +
           fmt4(y0) + " A " + fmt4(s.radius) + " " + fmt4(s.radius) + " 0 " +
           std::to_string(large) + " " + std::to_string(sweep) + " " + fmt4(x1) + " " +
           fmt4(y1) + " Z\" fill=\"" + (s.fill ? to_hex(*s.fill) : std::string("none")) +
           "\"";
    if (s.stroke)
        svg += " stroke=\"" + to_hex(*s.stroke) + "\" stroke-width=\"" +
               fmt4(s.stroke_width) + "\"";
    svg += "/>\n";
}

}  // namespace detail

/// Serialize to a standalone SVG 1.1 document (UTF-8, byte-deterministic).
inline std::string serialize(const figure_doc& doc) {
    using detail::fmt4;
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           fmt4(doc.width) + "\" height=\"" + fmt4(doc.height) + "\" viewBox=\"0 0 " +
           fmt4(doc.width) + " " + fmt4(doc.height) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + fmt4(doc.width) + "\" height=\"" +
           fmt4(doc.height) + "\" fill=\"#ffffff\"/>\n";
    for (const element& e : doc.elements) {
        if (const auto* s = std::get_if<sector_elem>(&e)) {
            detail::append_sector(svg, *s);
        } else if (const auto* l = std::get_if<line_elem>(&e)) {
            svg += "<line x1=\"" + fmt4(l->x1) + "\" y1=\"" + fmt4(l->y1) + "\" x2=\"" +
                   fmt4(l->x2) + "\" y2=\"" + fmt4(l->y2) + "\" stroke=\"" +
                   to_hex(l->stroke) + "\" stroke-width=\"" + fmt4(l->width) + "\"/>\n";
        } else if (const auto* c = std::get_if<circle_elem>(&e)) {
            svg += "<circle cx=\"" + fmt4(c->cx) + "\" cy=\"" + fmt4(c->cy) +
                   "\" r=\"" + fmt4(c->radius) + "\" fill=\"" + to_hex(c->fill) +
                   "\"/>\n";
        } else if (const auto* t = std::get_if<text_elem>(&e)) {
            const char* anchor = t->anchor == text_anchor::start ? "start"
                                 : t->anchor == text_anchor::middle ? "middle"
                                                                    : "end";
            svg += "<text x=\"" + fmt4(t->x) + "\" y=\"" + fmt4(t->y) +
                   "\" font-family=\"sans-serif\" font-size=\"" + fmt4(t->size) +
                   "\" text-anchor=\"" + anchor + "\" fill=\"" + to_hex(t->fill) +
                   "\">" + detail::xml_escape(t->text) + "</text>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace hdds
