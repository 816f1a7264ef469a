#pragma once

// SVG 1.1 drawings of solved instances. Coordinates are converted to double
// only here, for display; fixed-precision formatting keeps output byte-stable.

#include "tverberg/circle_solver.hpp"
#include "tverberg/dual_lines.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace tverberg::io {

inline const char* color_of_class(int c) {
    static const char* names[] = {"red", "blue", "green"};
    return c >= 0 && c < 3 ? names[c] : "black";
}

namespace detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
    return buf;
}

inline const char* svg_header() {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
}

struct View {
    double xmin, xmax, ymin, ymax;
    double sx(double x) const { return 20 + 560 * (x - xmin) / (xmax - xmin); }
    double sy(double y) const { return 580 - 560 * (y - ymin) / (ymax - ymin); }
};

}  // namespace detail

inline std::string render_svg(const LineInstance& inst, const LineSolution& sol) {
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < inst.lines.size(); ++i)
        for (std::size_t j = i + 1; j < inst.lines.size(); ++j)
            if (auto p = intersect(inst.lines[i], inst.lines[j])) pts.emplace_back(p->x.get_d(), p->y.get_d());
    pts.emplace_back(sol.witness.x.get_d(), sol.witness.y.get_d());
    double xmin = pts[0].first, xmax = xmin, ymin = pts[0].second, ymax = ymin;
    for (auto [x, y] : pts) {
        xmin = std::min(xmin, x), xmax = std::max(xmax, x);
        ymin = std::min(ymin, y), ymax = std::max(ymax, y);
    }
    const double side = std::max({xmax - xmin, ymax - ymin, 1.0});
    const double cx = (xmin + xmax) / 2, cy = (ymin + ymax) / 2, half = 0.6 * side;
    const detail::View view{cx - half, cx + half, cy - half, cy + half};

    std::ostringstream os;
    os << detail::svg_header();
    os << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
    for (const auto& t : sol.partition.triples) {
        os << "<polygon class=\"triangle\" fill=\"gray\" fill-opacity=\"0.25\" stroke=\"none\" points=\"";
        for (int e = 0; e < 3; ++e) {
            const auto v = *intersect(inst.lines[t[(e + 1) % 3]], inst.lines[t[(e + 2) % 3]]);
            os << (e ? " " : "") << detail::num(view.sx(v.x.get_d())) << "," << detail::num(view.sy(v.y.get_d()));
        }
        os << "\"/>\n";
    }
    for (std::size_t i = 0; i < inst.lines.size(); ++i) {
        const double a = inst.lines[i].a.get_d(), b = inst.lines[i].b.get_d(), c = inst.lines[i].c.get_d();
        double x0, y0, x1, y1;
        if (std::abs(b) >= std::abs(a)) {
            x0 = view.xmin, x1 = view.xmax;
            y0 = (c - a * x0) / b, y1 = (c - a * x1) / b;
        } else {
            y0 = view.ymin, y1 = view.ymax;
            x0 = (c - b * y0) / a, x1 = (c - b * y1) / a;
        }
        os << "<line class=\"line\" id=\"l" << i + 1 << "\" stroke=\"" << color_of_class(inst.coloring[i])
           << "\" stroke-width=\"2\" x1=\"" << detail::num(view.sx(x0)) << "\" y1=\"" << detail::num(view.sy(y0))
           << "\" x2=\"" << detail::num(view.sx(x1)) << "\" y2=\"" << detail::num(view.sy(y1)) << "\"/>\n";
    }
    os << "<circle class=\"witness\" fill=\"black\" r=\"5\" cx=\"" << detail::num(view.sx(sol.witness.x.get_d()))
       << "\" cy=\"" << detail::num(view.sy(sol.witness.y.get_d())) << "\"/>\n";
    os << "</svg>\n";
    return os.str();
}

inline std::string render_svg(const CircleInstance& inst, const AnnotatedPartition& ap) {
    const double r = 240, c0 = 300;
    auto pos = [&](std::size_t i) {
        const double x = inst.points[i].dx.get_d(), y = inst.points[i].dy.get_d();
        const double n = std::hypot(x, y);
        return std::pair{c0 + r * x / n, c0 - r * y / n};
    };
    std::ostringstream os;
    os << detail::svg_header();
    os << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
    os << "<circle class=\"circle\" fill=\"none\" stroke=\"black\" cx=\"300\" cy=\"300\" r=\"240\"/>\n";
    if (ap.gamma) {
        const auto [x0, y0] = pos(ap.gamma->from);
        const auto [x1, y1] = pos(ap.gamma->to);
        // Clockwise on the page is the positive sweep direction with y pointing down.
        os << "<path class=\"gamma\" fill=\"none\" stroke=\"orange\" stroke-width=\"8\" stroke-opacity=\"0.6\" d=\"M "
           << detail::num(x0) << " " << detail::num(y0) << " A 240 240 0 0 1 " << detail::num(x1) << " "
           << detail::num(y1) << "\"/>\n";
    }
    for (const auto& t : ap.partition.triples) {
        os << "<polygon class=\"triple\" fill=\"gray\" fill-opacity=\"0.15\" stroke=\"gray\" points=\"";
        for (int e = 0; e < 3; ++e) {
            const auto [x, y] = pos(t[e]);
            os << (e ? " " : "") << detail::num(x) << "," << detail::num(y);
        }
        os << "\"/>\n";
    }
    const auto mids = ap.middle_points();
    for (auto m : mids) {
        const auto [x, y] = pos(m);
        os << "<circle class=\"middle\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" r=\"11\" cx=\"" << detail::num(x)
           << "\" cy=\"" << detail::num(y) << "\"/>\n";
    }
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const auto [x, y] = pos(i);
        os << "<circle class=\"point\" id=\"p" << i + 1 << "\" fill=\"" << color_of_class(inst.coloring[i])
           << "\" r=\"6\" cx=\"" << detail::num(x) << "\" cy=\"" << detail::num(y) << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace tverberg::io
