#include "fewears/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

#include "fewears/errors.hpp"

namespace fewears {

namespace {

struct Point {
    double x;
    double y;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    if (s == "-0.00") s = "0.00";
    return s;
}

std::string polygon_points(const std::vector<Point>& pts) {
    std::string out;
    for (const Point& p : pts) {
        if (!out.empty()) out += ' ';
        out += num(p.x) + "," + num(p.y);
    }
    return out;
}

}  // namespace

Highlight parse_highlight(const std::string& name) {
    if (name == "none") return Highlight::None;
    if (name == "ears") return Highlight::Ears;
    if (name == "internal") return Highlight::Internal;
    if (name == "both") return Highlight::Both;
    throw InputError("highlight must be none|ears|internal|both, got '" + name + "'");
}

std::string render_svg(const Triangulation& t, const SvgOptions& options) {
    if (options.radius <= 0 || options.margin < 0 || options.font_size <= 0 || options.stroke_width <= 0) {
        throw InputError("SVG layout constants must be positive");
    }
    const int n = t.n();
    const double center = options.radius + options.margin;
    const double size = 2 * center;
    std::vector<Point> vertex(n);
    for (int v = 0; v < n; ++v) {
        const double angle = std::numbers::pi / 2 + 2 * std::numbers::pi * v / n;
        vertex[v] = {center + options.radius * std::cos(angle), center - options.radius * std::sin(angle)};
    }

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(size) << "\" height=\""
       << num(size) << "\" viewBox=\"0 0 " << num(size) << " " << num(size) << "\">\n";
    os << "  <title>" << format_triangulation(t) << "</title>\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"" << num(size) << "\" height=\"" << num(size) << "\" fill=\"white\"/>\n";

    const bool ears = options.highlight == Highlight::Ears || options.highlight == Highlight::Both;
    const bool internal = options.highlight == Highlight::Internal || options.highlight == Highlight::Both;
    if ((ears || internal) && n >= 4) {
        os << "  <g id=\"highlight\" stroke=\"none\">\n";
        for (const Triangle& tri : triangles_of(t)) {
            const int sides = tri.boundary_sides(n);
            const char* fill = nullptr;
            const char* cls = nullptr;
            if (ears && sides == 2) {
                fill = "#f4c28f";
                cls = "ear";
            } else if (internal && sides == 0) {
                fill = "#9fc5e8";
                cls = "internal";
            }
            if (!fill) continue;
            os << "    <polygon class=\"" << cls << "\" fill=\"" << fill << "\" points=\""
               << polygon_points({vertex[tri.v[0]], vertex[tri.v[1]], vertex[tri.v[2]]}) << "\"/>\n";
        }
        os << "  </g>\n";
    }

    os << "  <polygon id=\"boundary\" fill=\"none\" stroke=\"black\" stroke-width=\"" << num(options.stroke_width)
       << "\" stroke-linejoin=\"round\" points=\"" << polygon_points(vertex) << "\"/>\n";

    os << "  <g id=\"diagonals\" stroke=\"black\" stroke-width=\"" << num(options.stroke_width) << "\">\n";
    for (const Diagonal& d : t.diagonals()) {
        os << "    <line x1=\"" << num(vertex[d.a].x) << "\" y1=\"" << num(vertex[d.a].y) << "\" x2=\""
           << num(vertex[d.b].x) << "\" y2=\"" << num(vertex[d.b].y) << "\"/>\n";
    }
    os << "  </g>\n";

    os << "  <g id=\"vertices\" fill=\"black\">\n";
    for (int v = 0; v < n; ++v) {
        os << "    <circle cx=\"" << num(vertex[v].x) << "\" cy=\"" << num(vertex[v].y) << "\" r=\""
           << num(options.stroke_width * 1.5) << "\"/>\n";
    }
    os << "  </g>\n";

    if (options.labels) {
        const double label_radius = options.radius + options.font_size * 1.2;
        os << "  <g id=\"labels\" font-family=\"sans-serif\" font-size=\"" << num(options.font_size)
           << "\" text-anchor=\"middle\" dominant-baseline=\"central\">\n";
        for (int v = 0; v < n; ++v) {
            const double angle = std::numbers::pi / 2 + 2 * std::numbers::pi * v / n;
            os << "    <text x=\"" << num(center + label_radius * std::cos(angle)) << "\" y=\""
               << num(center - label_radius * std::sin(angle)) << "\">" << v << "</text>\n";
        }
        os << "  </g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace fewears
