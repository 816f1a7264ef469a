#pragma once

// Sign-based predicates on circle directions and rational lines. No square
// roots or angles are ever computed; every decision is the sign of a
// polynomial in the input coordinates.

#include "tverberg/errors.hpp"
#include "tverberg/rational.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tverberg {

/// A point of the unit circle, given by an unnormalized nonzero direction.
struct CirclePoint {
    Rat dx;
    Rat dy;

    CirclePoint() : dx(1), dy(0) {}
    CirclePoint(Rat x, Rat y) : dx(std::move(x)), dy(std::move(y)) {
        if (sign(dx) == 0 && sign(dy) == 0) throw DegenerateError("circle point with zero direction");
    }

    CirclePoint operator-() const { return CirclePoint(-dx, -dy); }
};

inline Rat cross(const CirclePoint& u, const CirclePoint& v) { return Rat(u.dx * v.dy - u.dy * v.dx); }
inline Rat dot(const CirclePoint& u, const CirclePoint& v) { return Rat(u.dx * v.dx + u.dy * v.dy); }

inline bool same_direction(const CirclePoint& u, const CirclePoint& v) {
    return sign(cross(u, v)) == 0 && sign(dot(u, v)) > 0;
}
inline bool antipodal(const CirclePoint& u, const CirclePoint& v) {
    return sign(cross(u, v)) == 0 && sign(dot(u, v)) < 0;
}
// Equal or antipodal: the only configurations the predicates reject.
inline bool collinear_directions(const CirclePoint& u, const CirclePoint& v) { return sign(cross(u, v)) == 0; }

// ---------------------------------------------------------------------------
// Clockwise order

// Half of the clockwise turn from `ref` that `x` falls in: 0 for clockwise
// angles in [0, pi), 1 for [pi, 2pi).
inline int clockwise_half(const CirclePoint& ref, const CirclePoint& x) {
    const int c = sign(cross(ref, x));
    if (c < 0) return 0;
    if (c > 0) return 1;
    return sign(dot(ref, x)) > 0 ? 0 : 1;
}

/// True iff the clockwise angle from `ref` to `x` is smaller than the one from
/// `ref` to `y`.
inline bool clockwise_before(const CirclePoint& ref, const CirclePoint& x, const CirclePoint& y) {
    const int hx = clockwise_half(ref, x);
    const int hy = clockwise_half(ref, y);
    if (hx != hy) return hx < hy;
    return sign(cross(x, y)) < 0;
}

// Clockwise angle from u to v lies strictly between 0 and pi.
inline bool clockwise_within_half_turn(const CirclePoint& u, const CirclePoint& v) { return sign(cross(u, v)) < 0; }

/// The clockwise arc from `from` to `to`.
struct Arc {
    CirclePoint from;
    CirclePoint to;

    Arc reversed() const { return Arc{to, from}; }
};

/// Strict membership of x in the clockwise arc from arc.from to arc.to.
/// Antipodal inputs are decided exactly; only equal directions are rejected.
inline bool in_clockwise_arc(const CirclePoint& x, const Arc& arc) {
    if (same_direction(arc.from, arc.to)) throw DegenerateError("arc with equal endpoints");
    if (same_direction(x, arc.from) || same_direction(x, arc.to))
        throw DegenerateError("query point equal to an arc endpoint");
    return clockwise_before(arc.from, x, arc.to);
}

// Closed membership; endpoints count as inside.
inline bool in_closed_clockwise_arc(const CirclePoint& x, const Arc& arc) {
    if (same_direction(x, arc.from) || same_direction(x, arc.to)) return true;
    if (collinear_directions(x, arc.from) || collinear_directions(x, arc.to)) return false;
    return clockwise_before(arc.from, x, arc.to);
}

inline void require_general_directions(std::span<const CirclePoint> points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (collinear_directions(points[i], points[j]))
                throw DegenerateError("points " + std::to_string(i) + " and " + std::to_string(j) +
                                      (same_direction(points[i], points[j]) ? " are equal" : " are antipodal"));
}

/// A gap between circularly adjacent points: the gap immediately clockwise
/// after point `after`.
struct CutPosition {
    std::size_t after = 0;
    bool operator==(const CutPosition&) const = default;
};

inline void require_distinct_directions(std::span<const CirclePoint> points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (same_direction(points[i], points[j]))
                throw DegenerateError("points " + std::to_string(i) + " and " + std::to_string(j) + " are equal");
}

/// Indices of `points` sorted clockwise, starting right after the cut. The
/// order is strict for any distinct directions, antipodal ones included.
inline std::vector<std::size_t> circular_order(std::span<const CirclePoint> points, CutPosition cut) {
    require_distinct_directions(points);
    if (cut.after >= points.size()) throw DegenerateError("cut index out of range");
    const CirclePoint& ref = points[cut.after];
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return clockwise_before(ref, points[a], points[b]);
    });
    // order[0] is `cut.after` itself (clockwise angle 0); move it to the back.
    std::rotate(order.begin(), order.begin() + 1, order.end());
    return order;
}

// ---------------------------------------------------------------------------
// Triples

struct TripleClass {
    bool bounding = false;
    int middle = -1;  // position 0..2 of the middle point when unbounding

    bool operator==(const TripleClass&) const = default;
};

// p lies strictly inside the convex cone positively spanned by q and r.
inline bool in_open_cone(const CirclePoint& p, const CirclePoint& q, const CirclePoint& r) {
    const int s = sign(cross(q, r));
    return s != 0 && sign(cross(q, p)) == s && sign(cross(p, r)) == s;
}

/// Bounding iff the circle center lies strictly inside the triangle; otherwise
/// reports which of the three is the middle point.
inline TripleClass classify_triple(const CirclePoint& p, const CirclePoint& q, const CirclePoint& r) {
    if (collinear_directions(p, q) || collinear_directions(q, r) || collinear_directions(p, r))
        throw DegenerateError("degenerate triple: equal or antipodal pair");
    // Counterclockwise order p, s2, s3 is the clockwise order from p reversed.
    const bool q_first = clockwise_before(p, q, r);
    const CirclePoint& s2 = q_first ? r : q;
    const CirclePoint& s3 = q_first ? q : r;
    const bool bounding = sign(cross(p, s2)) > 0 && sign(cross(s2, s3)) > 0 && sign(cross(s3, p)) > 0;

    const std::array<bool, 3> mid{in_open_cone(p, q, r), in_open_cone(q, p, r), in_open_cone(r, p, q)};
    const int count = int(mid[0]) + int(mid[1]) + int(mid[2]);
    if (bounding) {
        if (count != 0) throw ContractViolation("bounding triple with a middle point");
        return TripleClass{true, -1};
    }
    if (count != 1) throw ContractViolation("unbounding triple without a unique middle point");
    return TripleClass{false, mid[0] ? 0 : (mid[1] ? 1 : 2)};
}

// ---------------------------------------------------------------------------
// Lines and halfplanes

struct Point2 {
    Rat x;
    Rat y;
    bool operator==(const Point2&) const = default;
};

/// The line a*x + b*y = c.
struct Line2 {
    Rat a;
    Rat b;
    Rat c;

    Line2() : a(1), b(0), c(0) {}
    Line2(Rat a_, Rat b_, Rat c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
        if (sign(a) == 0 && sign(b) == 0) throw ValidationError("line with zero normal");
    }

    static Line2 through(const Point2& p, const Point2& q) {
        Rat a = q.y - p.y;
        Rat b = p.x - q.x;
        Rat c = a * p.x + b * p.y;
        return Line2(a, b, c);
    }

    // a*x + b*y - c
    Rat eval(const Point2& p) const { return Rat(a * p.x + b * p.y - c); }
    int side(const Point2& p) const { return sign(eval(p)); }

    bool operator==(const Line2&) const = default;
};

inline bool parallel(const Line2& l, const Line2& m) { return sign(Rat(l.a * m.b - l.b * m.a)) == 0; }

inline std::optional<Point2> intersect(const Line2& l, const Line2& m) {
    const Rat det = l.a * m.b - l.b * m.a;
    if (sign(det) == 0) return std::nullopt;
    return Point2{Rat((l.c * m.b - l.b * m.c) / det), Rat((l.a * m.c - l.c * m.a) / det)};
}

/// Closed halfplane side * (a*x + b*y - c) >= 0.
struct Halfplane {
    Line2 line;
    int side = 1;

    bool contains(const Point2& p) const { return side * line.side(p) >= 0; }
    bool strictly_contains(const Point2& p) const { return side * line.side(p) > 0; }
};

/// A point in the intersection of closed halfplanes, or nullopt if empty.
/// Every nonempty intersection of halfplanes spanning two non-parallel
/// directions has a vertex, so checking pairwise intersections plus the
/// optional extra candidates is complete in that case.
inline std::optional<Point2> feasible_point(std::span<const Halfplane> hs, std::span<const Point2> extra = {}) {
    auto inside_all = [&](const Point2& p) {
        return std::all_of(hs.begin(), hs.end(), [&](const Halfplane& h) { return h.contains(p); });
    };
    for (const auto& p : extra)
        if (inside_all(p)) return p;
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j)
            if (auto p = intersect(hs[i].line, hs[j].line); p && inside_all(*p)) return p;
    return std::nullopt;
}

/// The three closed halfplanes whose intersection is the triangle bounded by
/// three lines in general position.
inline std::array<Halfplane, 3> triangle_halfplanes(const Line2& l0, const Line2& l1, const Line2& l2) {
    const std::array<const Line2*, 3> ls{&l0, &l1, &l2};
    std::array<Halfplane, 3> out;
    for (int i = 0; i < 3; ++i) {
        auto v = intersect(*ls[(i + 1) % 3], *ls[(i + 2) % 3]);
        if (!v) throw GeneralPositionViolation("triangle lines are parallel");
        const int s = ls[i]->side(*v);
        if (s == 0) throw GeneralPositionViolation("triangle lines are concurrent");
        out[i] = Halfplane{*ls[i], s};
    }
    return out;
}

}  // namespace tverberg
