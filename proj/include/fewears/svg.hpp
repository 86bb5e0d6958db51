#ifndef FEWEARS_SVG_HPP
#define FEWEARS_SVG_HPP

#include <string>

#include "fewears/triangulation.hpp"

namespace fewears {

enum class Highlight { None, Ears, Internal, Both };

/// Throws InputError for names other than none|ears|internal|both.
Highlight parse_highlight(const std::string& name);

struct SvgOptions {
    double radius = 180.0;
    double margin = 40.0;
    double font_size = 14.0;
    double stroke_width = 2.0;
    bool labels = true;
    Highlight highlight = Highlight::None;
};

/// Standalone SVG of t drawn on a regular n-gon: vertex 0 at the top, labels
/// increasing counterclockwise, boundary and diagonals as solid strokes.
std::string render_svg(const Triangulation& t, const SvgOptions& options = {});

}  // namespace fewears

#endif  // FEWEARS_SVG_HPP
