#pragma once

// Figure-derived line sets and the octahedron cover argument: six lines where
// every colorful split gives disjoint triangles, its blown-up parity
// obstruction, and a six-line set not in convex position where every coloring
// still admits intersecting triangles.

#include "tverberg/combinatorics.hpp"
#include "tverberg/dual_lines.hpp"
#include "tverberg/kernel.hpp"

#include <array>
#include <bit>
#include <optional>
#include <string>
#include <vector>

namespace tverberg::counterexamples {

/// A line drawn through two points, as read off a figure.
struct DrawnLine {
    std::string label;
    Point2 p;
    Point2 q;

    Line2 line() const { return Line2::through(p, q); }
};

inline Point2 pt(long x2, long y2) { return Point2{make_rat(x2, 2), make_rat(y2, 2)}; }  // half-units

/// Figure 1, in label order l1..l6.
inline std::vector<DrawnLine> figure1_lines() {
    return {
        {"l1", pt(-6, 0), pt(8, 0)},   {"l2", pt(-6, 5), pt(8, -1)},  {"l3", pt(-5, -5), pt(1, 7)},
        {"l4", pt(0, 7), pt(0, -6)},   {"l5", pt(-4, 6), pt(1, -6)},  {"l6", pt(-6, -4), pt(6, 2)},
    };
}
// RED = {l1, l4}, BLUE = {l2, l5}, GREEN = {l3, l6}.
inline Coloring figure1_coloring() { return make_coloring({0, 1, 2, 0, 1, 2}); }

/// Figure 5, in label order l1..l6.
inline std::vector<DrawnLine> figure5_lines() {
    return {
        {"l1", pt(10, -6), pt(-8, 6)}, {"l2", pt(2, 10), pt(-9, -6)},  {"l3", pt(-10, 5), pt(10, 5)},
        {"l4", pt(0, 10), pt(8, -6)},  {"l5", pt(7, 10), pt(2, -6)},   {"l6", pt(10, -2), pt(-10, -4)},
    };
}

inline std::vector<Line2> to_lines(const std::vector<DrawnLine>& drawn) {
    std::vector<Line2> out;
    for (const auto& d : drawn) out.push_back(d.line());
    return out;
}

/// A point common to the triangles of two line triples, if any.
inline std::optional<Point2> common_point(const std::vector<Line2>& lines, const Triple& a, const Triple& b) {
    const auto ta = triangle_halfplanes(lines[a[0]], lines[a[1]], lines[a[2]]);
    const auto tb = triangle_halfplanes(lines[b[0]], lines[b[1]], lines[b[2]]);
    std::vector<Halfplane> hs(ta.begin(), ta.end());
    hs.insert(hs.end(), tb.begin(), tb.end());
    return feasible_point(hs);
}

inline bool in_triangle(const std::vector<Line2>& lines, const Triple& t, const Point2& p) {
    const auto tri = triangle_halfplanes(lines[t[0]], lines[t[1]], lines[t[2]]);
    return std::all_of(tri.begin(), tri.end(), [&](const Halfplane& h) { return h.contains(p); });
}

struct SplitVerdict {
    TriplePartition partition;
    std::optional<Point2> common;  // nullopt: triangles are disjoint
};

struct Figure1Report {
    std::vector<SplitVerdict> splits;
    bool general_position = false;
    bool convex_position = false;
    bool passed() const {
        return general_position && !convex_position && splits.size() == 4 &&
               std::all_of(splits.begin(), splits.end(), [](const SplitVerdict& s) { return !s.common; });
    }
};

inline Figure1Report verify_figure1(const std::vector<Line2>& lines = to_lines(figure1_lines()),
                                    const Coloring& coloring = figure1_coloring()) {
    Figure1Report rep;
    rep.general_position = validate_general_position(lines).ok();
    rep.convex_position = rep.general_position && in_convex_position(lines);
    for_each_colorful_partition(coloring, [&](const TriplePartition& p) {
        rep.splits.push_back({p, common_point(lines, p.triples[0], p.triples[1])});
        return true;
    });
    return rep;
}

// ---------------------------------------------------------------------------
// Octahedron facet covers

// Facet f of the regular octahedron has sign pattern bit b set <=> coordinate b
// negative. Opposite facet: f ^ 7. Vertex 2b + s (s = 1 for the negative
// axis end) lies on facet f iff bit b of f equals s.
inline constexpr int opposite_facet(int f) { return f ^ 7; }
inline constexpr bool covers(int facet, int vertex) { return ((facet >> (vertex / 2)) & 1) == (vertex % 2); }
inline constexpr bool vertex_adjacent(int f, int g) { return std::popcount(unsigned(f ^ g)) == 2; }

struct OctahedronCover {
    int t = 0;
    std::array<int, 8> multiplicity{};

    std::vector<int> facet_types() const {
        std::vector<int> out;
        for (int f = 0; f < 8; ++f)
            if (multiplicity[f] > 0) out.push_back(f);
        return out;
    }
};

inline constexpr int default_octahedron_cap = 4;

/// 2t facets, possibly repeated, with no opposite pair among the chosen types
/// and each of the six vertices covered exactly t times.
inline std::optional<OctahedronCover> octahedron_cover_search(int t, int cap = default_octahedron_cap) {
    if (t < 1) throw ValidationError("octahedron_cover_search: t must be positive");
    if (t > cap) throw SearchCapExceeded("octahedron_cover_search: t = " + std::to_string(t) + " exceeds cap " +
                                          std::to_string(cap));
    OctahedronCover cur{t, {}};
    std::optional<OctahedronCover> found;
    auto valid = [&] {
        for (int f = 0; f < 8; ++f)
            if (cur.multiplicity[f] > 0 && cur.multiplicity[opposite_facet(f)] > 0) return false;
        for (int v = 0; v < 6; ++v) {
            int c = 0;
            for (int f = 0; f < 8; ++f)
                if (covers(f, v)) c += cur.multiplicity[f];
            if (c != t) return false;
        }
        return true;
    };
    auto dfs = [&](auto&& self, int f, int remaining) -> void {
        if (found) return;
        if (f == 8) {
            if (remaining == 0 && valid()) found = cur;
            return;
        }
        for (int m = remaining; m >= 0 && !found; --m) {
            if (m > 0 && f > opposite_facet(f) && cur.multiplicity[opposite_facet(f)] > 0) continue;
            cur.multiplicity[f] = m;
            self(self, f + 1, remaining - m);
        }
        cur.multiplicity[f] = 0;
    };
    dfs(dfs, 0, 2 * t);
    return found;
}

// ---------------------------------------------------------------------------
// Six lines not in convex position

struct ColoringVerdict {
    std::array<std::array<std::size_t, 2>, 3> classes;  // 0-based line indices
    std::optional<TriplePartition> partition;           // a split with intersecting triangles
    std::optional<Point2> common;
    bool certified = false;  // common point re-checked inside both triangles
};

struct NonconvexReport {
    bool general_position = false;
    bool convex_position = false;
    std::vector<ColoringVerdict> colorings;
    bool passed() const {
        return general_position && !convex_position && colorings.size() == 15 &&
               std::all_of(colorings.begin(), colorings.end(), [](const ColoringVerdict& c) { return c.certified; });
    }
};

/// All ways to split six items into three unordered pairs (15 of them).
inline std::vector<std::array<std::array<std::size_t, 2>, 3>> pair_splits_of_six() {
    std::vector<std::array<std::array<std::size_t, 2>, 3>> out;
    for (std::size_t a = 1; a < 6; ++a) {
        std::vector<std::size_t> rest;
        for (std::size_t i = 1; i < 6; ++i)
            if (i != a) rest.push_back(i);
        for (std::size_t b = 1; b < 4; ++b) {
            std::vector<std::size_t> last;
            for (std::size_t i = 1; i < 4; ++i)
                if (i != b) last.push_back(rest[i]);
            out.push_back({{{0, a}, {rest[0], rest[b]}, {last[0], last[1]}}});
        }
    }
    return out;
}

inline NonconvexReport verify_nonconvex_example(const std::vector<Line2>& lines = to_lines(figure5_lines())) {
    NonconvexReport rep;
    rep.general_position = validate_general_position(lines).ok();
    rep.convex_position = rep.general_position && in_convex_position(lines);
    for (const auto& classes : pair_splits_of_six()) {
        std::vector<int> col(6);
        for (int c = 0; c < 3; ++c)
            for (auto i : classes[c]) col[i] = c;
        ColoringVerdict verdict{classes, std::nullopt, std::nullopt, false};
        for_each_colorful_partition(make_coloring(col), [&](const TriplePartition& p) {
            if (auto q = common_point(lines, p.triples[0], p.triples[1])) {
                verdict.partition = p;
                verdict.common = q;
                verdict.certified = in_triangle(lines, p.triples[0], *q) && in_triangle(lines, p.triples[1], *q);
                return false;
            }
            return true;
        });
        rep.colorings.push_back(verdict);
    }
    return rep;
}

}  // namespace tverberg::counterexamples
