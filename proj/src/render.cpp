#include "montes/polygon.hpp"

#include <set>
#include <sstream>

namespace montes {

std::string render_ascii(const NewtonPolygon& principal) {
    auto verts = principal.vertices();
    if (verts.empty()) return "(empty polygon)\n";
    long xmax = verts.back().first;
    long ymax = 0;
    for (auto& [x, y] : verts) ymax = std::max(ymax, y);
    if (xmax > 120 || ymax > 60) {
        std::ostringstream os;
        os << "(polygon too large to draw: " << xmax << " x " << ymax << ")\n";
        return os.str();
    }

    std::set<std::pair<long, long>> vset(verts.begin(), verts.end());
    auto counted = lattice_points_under(principal);
    std::set<std::pair<long, long>> cset(counted.begin(), counted.end());

    std::ostringstream os;
    for (long y = ymax; y >= 0; --y) {
        os.width(4);
        os << y;
        os << " |";
        for (long x = 0; x <= xmax; ++x) {
            if (vset.count({x, y}))
                os << " *";
            else if (cset.count({x, y}))
                os << " o";
            else
                os << " .";
        }
        os << "\n";
    }
    os << "      ";
    for (long x = 0; x <= xmax; ++x) os << "--";
    os << "\n      ";
    for (long x = 0; x <= xmax; ++x) {
        if (x % 5 == 0) {
            std::string label = std::to_string(x);
            os << " " << label[0];
        } else {
            os << "  ";
        }
    }
    os << "\n";
    return os.str();
}

std::string render_svg(const NewtonPolygon& principal) {
    auto verts = principal.vertices();
    const long scale = 40, pad = 50;
    long xmax = 1, ymax = 1;
    for (auto& [x, y] : verts) {
        xmax = std::max(xmax, x);
        ymax = std::max(ymax, y);
    }
    long w = xmax * scale + 2 * pad, h = ymax * scale + 2 * pad;
    auto X = [&](double x) { return pad + x * scale; };
    auto Y = [&](double y) { return h - pad - y * scale; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // integer lattice
    for (long x = 0; x <= xmax; ++x)
        for (long y = 0; y <= ymax; ++y)
            os << "  <circle cx=\"" << X(x) << "\" cy=\"" << Y(y)
               << "\" r=\"1.5\" fill=\"#cccccc\"/>\n";
    // axes
    os << "  <line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(xmax) + 20
       << "\" y2=\"" << Y(0) << "\" stroke=\"#888888\"/>\n";
    os << "  <line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\""
       << Y(ymax) - 20 << "\" stroke=\"#888888\"/>\n";
    // counted lattice points
    for (auto& [x, y] : lattice_points_under(principal))
        os << "  <circle cx=\"" << X(x) << "\" cy=\"" << Y(y)
           << "\" r=\"4\" fill=\"#d62728\"/>\n";
    // sides with labels
    for (const Side& s : principal.sides) {
        os << "  <line x1=\"" << X(s.x1) << "\" y1=\"" << Y(s.y1) << "\" x2=\"" << X(s.x2)
           << "\" y2=\"" << Y(s.y2) << "\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n";
        os << "  <text x=\"" << X((s.x1 + s.x2) / 2.0) + 6 << "\" y=\""
           << Y((s.y1 + s.y2) / 2.0) - 6 << "\" font-size=\"12\">slope " << s.slope_string()
           << ", l=" << s.length << ", H=" << s.height << ", d=" << s.d << "</text>\n";
    }
    // vertices
    for (auto& [x, y] : verts) {
        os << "  <circle cx=\"" << X(x) << "\" cy=\"" << Y(y)
           << "\" r=\"5\" fill=\"#1f77b4\"/>\n";
        os << "  <text x=\"" << X(x) + 7 << "\" y=\"" << Y(y) - 7 << "\" font-size=\"12\">("
           << x << "," << y << ")</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace montes
