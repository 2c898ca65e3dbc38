#pragma once

#include <string>
#include <vector>

#include "latgon/vec2.hpp"

namespace latgon {

struct SvgPath {
    std::vector<Vec2> points;
    bool closed = true;
    std::string css_class = "shape";
};

struct SvgOptions {
    bool lattice_grid = false;  // draw integer gridlines over the viewBox
    double margin_fraction = 0.05;
    double width = 640.0;  // output width in px; height follows the aspect
};

// Writes a standalone SVG. The viewBox is fitted to the objects with the
// given margin; output bytes are deterministic for identical inputs.
// Throws ValidationError on an empty object list, Error on I/O failure.
void render_svg(const std::vector<SvgPath>& objects, const std::string& path,
                const SvgOptions& options = {});

// Same, returning the document instead of writing it.
std::string render_svg_string(const std::vector<SvgPath>& objects,
                              const SvgOptions& options = {});

}  // namespace latgon
