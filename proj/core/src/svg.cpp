#include "latgon/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "latgon/errors.hpp"

namespace latgon {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

std::string render_svg_string(const std::vector<SvgPath>& objects, const SvgOptions& options) {
    if (objects.empty()) throw ValidationError("render_svg: nothing to draw");
    double xmin = std::numeric_limits<double>::infinity(), ymin = xmin;
    double xmax = -xmin, ymax = -xmin;
    for (const SvgPath& obj : objects) {
        if (obj.points.empty()) throw ValidationError("render_svg: empty path");
        for (const Vec2& p : obj.points) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    }
    const double span_x = std::max(xmax - xmin, 1e-9);
    const double span_y = std::max(ymax - ymin, 1e-9);
    const double mx = options.margin_fraction * span_x;
    const double my = options.margin_fraction * span_y;
    // SVG y runs downward; emit (x, -y) and fit the viewBox accordingly.
    const double vb_x = xmin - mx, vb_y = -(ymax + my);
    const double vb_w = span_x + 2.0 * mx, vb_h = span_y + 2.0 * my;
    const double height = options.width * vb_h / vb_w;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(options.width) +
           "\" height=\"" + fmt(height) + "\" viewBox=\"" + fmt(vb_x) + " " + fmt(vb_y) + " " +
           fmt(vb_w) + " " + fmt(vb_h) + "\">\n";
    const double stroke = vb_w / options.width;  // ~1 px in user units
    out += "<style>path{fill:none;stroke-width:" + fmt(stroke) +
           ";}.shape{stroke:#1f77b4;}.curve{stroke:#d62728;}.polygon{stroke:#2ca02c;}"
           ".grid{stroke:#cccccc;stroke-width:" +
           fmt(0.5 * stroke) + ";}</style>\n";

    if (options.lattice_grid) {
        const double span = std::max(vb_w, vb_h);
        const auto stride = std::max<long>(1, static_cast<long>(std::ceil(span / 40.0)));
        for (long x = static_cast<long>(std::ceil(vb_x)); x <= static_cast<long>(vb_x + vb_w);
             x += stride)
            out += "<path class=\"grid\" d=\"M " + fmt(static_cast<double>(x)) + " " + fmt(vb_y) +
                   " L " + fmt(static_cast<double>(x)) + " " + fmt(vb_y + vb_h) + "\"/>\n";
        for (long y = static_cast<long>(std::ceil(vb_y)); y <= static_cast<long>(vb_y + vb_h);
             y += stride)
            out += "<path class=\"grid\" d=\"M " + fmt(vb_x) + " " + fmt(static_cast<double>(y)) +
                   " L " + fmt(vb_x + vb_w) + " " + fmt(static_cast<double>(y)) + "\"/>\n";
    }

    for (const SvgPath& obj : objects) {
        out += "<path class=\"" + obj.css_class + "\" d=\"";
        for (std::size_t i = 0; i < obj.points.size(); ++i) {
            out += (i == 0 ? "M " : " L ");
            out += fmt(obj.points[i].x) + " " + fmt(-obj.points[i].y);
        }
        if (obj.closed) out += " Z";
        out += "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

void render_svg(const std::vector<SvgPath>& objects, const std::string& path,
                const SvgOptions& options) {
    const std::string doc = render_svg_string(objects, options);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("render_svg: cannot open '" + path + "' for writing");
    f << doc;
    if (!f) throw Error("render_svg: write failed for '" + path + "'");
}

}  // namespace latgon
