#pragma once

// Lines in convex position: find an arrangement cell touching every line,
// dualize to circle directions seen from a point of that cell, solve on the
// circle and pull the partition back to halfplanes with a common point.

#include "tverberg/circle_solver.hpp"
#include "tverberg/kernel.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tverberg {

struct LineInstance {
    std::vector<Line2> lines;
    Coloring coloring;

    std::size_t k() const { return coloring.k; }
};

struct PositionReport {
    enum class Kind { ok, parallel, concurrent };
    Kind kind = Kind::ok;
    std::vector<std::size_t> indices;

    bool ok() const { return kind == Kind::ok; }
    std::string message() const {
        if (ok()) return "general position";
        std::string s = kind == Kind::parallel ? "parallel lines" : "concurrent lines";
        for (auto i : indices) s += " " + std::to_string(i + 1);
        return s;
    }
};

inline PositionReport validate_general_position(std::span<const Line2> lines) {
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (parallel(lines[i], lines[j])) return {PositionReport::Kind::parallel, {i, j}};
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const auto v = *intersect(lines[i], lines[j]);
            for (std::size_t l = j + 1; l < lines.size(); ++l)
                if (lines[l].side(v) == 0) return {PositionReport::Kind::concurrent, {i, j, l}};
        }
    return {};
}

inline LineInstance make_line_instance(std::vector<Line2> lines, Coloring coloring) {
    if (lines.size() != coloring.size())
        throw ValidationError("instance has " + std::to_string(lines.size()) + " lines but " +
                              std::to_string(coloring.size()) + " colors");
    if (auto r = validate_general_position(lines); !r.ok()) throw GeneralPositionViolation(r.message());
    return LineInstance{std::move(lines), std::move(coloring)};
}

/// A cell of the arrangement: a point strictly inside it and the side (+1/-1)
/// of every line that point is on.
struct CellWitness {
    Point2 interior_point;
    std::vector<int> sign_vector;
};

inline std::vector<int> sign_vector_at(std::span<const Line2> lines, const Point2& p) {
    std::vector<int> s;
    for (const auto& l : lines) s.push_back(l.side(p));
    return s;
}

/// Which lines contribute a boundary edge of positive length to the cell with
/// the given sign vector. For line i this is the part of the line satisfying all
/// other cell constraints, an interval computed exactly.
inline std::vector<char> touched_lines(std::span<const Line2> lines, const std::vector<int>& signs) {
    std::vector<char> out(lines.size(), 0);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const Line2& li = lines[i];
        const Rat norm2 = li.a * li.a + li.b * li.b;
        const Point2 base{Rat(li.a * li.c / norm2), Rat(li.b * li.c / norm2)};
        const Rat dx = -li.b;
        const Rat dy = li.a;
        std::optional<Rat> lo, hi;
        bool empty = false;
        for (std::size_t j = 0; j < lines.size(); ++j) {
            if (j == i) continue;
            const Rat e = lines[j].eval(base);
            const Rat slope = lines[j].a * dx + lines[j].b * dy;
            if (sign(slope) == 0) {
                // Parallel: the constraint holds on all of line i or nowhere.
                if (signs[j] * sign(e) <= 0) empty = true;
                continue;
            }
            const Rat bound = -e / slope;
            if (signs[j] * sign(slope) > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        out[i] = !empty && (!lo || !hi || *lo < *hi) ? 1 : 0;
    }
    return out;
}

// Point strictly inside the quadrant (side_i, side_j) at the vertex of lines i
// and j, close enough to the vertex that no other line is crossed.
inline Point2 quadrant_point(std::span<const Line2> lines, std::size_t i, std::size_t j, int side_i, int side_j) {
    const Line2& li = lines[i];
    const Line2& lj = lines[j];
    const Point2 v = *intersect(li, lj);
    // Direction d with a_i.d = side_i and a_j.d = side_j.
    const Rat det = li.a * lj.b - li.b * lj.a;
    const Rat dx = (side_i * lj.b - li.b * side_j) / det;
    const Rat dy = (li.a * side_j - side_i * lj.a) / det;
    Rat step = 1;
    for (std::size_t l = 0; l < lines.size(); ++l) {
        if (l == i || l == j) continue;
        const Rat val = lines[l].eval(v);
        const Rat slope = lines[l].a * dx + lines[l].b * dy;
        if (sign(slope) != 0 && sign(slope) != sign(val)) {
            const Rat reach = abs(val / slope);
            if (reach < step * 2) step = reach / 2;
        }
    }
    return Point2{Rat(v.x + step * dx), Rat(v.y + step * dy)};
}

/// First cell, in vertex/quadrant order, whose boundary meets every line.
/// A hint point short-circuits the scan and is checked instead.
inline CellWitness find_witness_cell(std::span<const Line2> lines, const std::optional<Point2>& hint = std::nullopt) {
    if (lines.size() < 2) throw ValidationError("need at least two lines");
    if (auto r = validate_general_position(lines); !r.ok()) throw GeneralPositionViolation(r.message());

    auto untouched_list = [](const std::vector<char>& touched) {
        std::string s;
        for (std::size_t i = 0; i < touched.size(); ++i)
            if (!touched[i]) s += " " + std::to_string(i + 1);
        return s;
    };

    if (hint) {
        auto sv = sign_vector_at(lines, *hint);
        for (std::size_t i = 0; i < sv.size(); ++i)
            if (sv[i] == 0) throw ValidationError("hint point lies on line " + std::to_string(i + 1));
        const auto touched = touched_lines(lines, sv);
        if (std::find(touched.begin(), touched.end(), 0) != touched.end())
            throw NotConvexPosition("cell of the hint point misses lines" + untouched_list(touched));
        return CellWitness{*hint, std::move(sv)};
    }

    std::vector<std::vector<int>> seen;
    std::vector<char> best_touched;
    std::size_t best_count = 0;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    const Point2 p = quadrant_point(lines, i, j, si, sj);
                    auto sv = sign_vector_at(lines, p);
                    if (std::find(seen.begin(), seen.end(), sv) != seen.end()) continue;
                    seen.push_back(sv);
                    const auto touched = touched_lines(lines, sv);
                    const auto count = std::size_t(std::count(touched.begin(), touched.end(), 1));
                    if (count == lines.size()) return CellWitness{p, std::move(sv)};
                    if (count > best_count) {
                        best_count = count;
                        best_touched = touched;
                    }
                }
    throw NotConvexPosition("no cell touches every line; best cell misses lines" + untouched_list(best_touched));
}

inline bool in_convex_position(std::span<const Line2> lines) {
    if (!validate_general_position(lines).ok()) return false;
    try {
        find_witness_cell(lines);
        return true;
    } catch (const NotConvexPosition&) {
        return false;
    }
}

struct DualInstance {
    CircleInstance circle;
    Point2 center;
};

/// Circle direction of each line: from the center to the foot of the
/// perpendicular on the line.
inline CirclePoint dual_direction(const Line2& l, const Point2& center) {
    const int s = -l.side(center);
    if (s == 0) throw DegenerateError("center lies on a line");
    return CirclePoint(Rat(s * l.a), Rat(s * l.b));
}

inline DualInstance dualize(const LineInstance& inst, const CellWitness& cell) {
    std::vector<CirclePoint> pts;
    for (const auto& l : inst.lines) pts.push_back(dual_direction(l, cell.interior_point));
    return DualInstance{make_circle_instance(std::move(pts), inst.coloring), cell.interior_point};
}

struct LineSolution {
    TriplePartition partition;  // triples of line indices
    std::vector<TripleClass> verdicts;
    std::optional<GammaArc> gamma;
    std::vector<Halfplane> halfplanes;  // H(l) per line
    std::vector<char> away_from_center;
    Point2 center;
    Point2 witness;
    bool witness_from_gamma_ends = false;
};

/// Halfplanes from a circle solution and a point in all of them.
inline LineSolution pull_back(const AnnotatedPartition& ap, const LineInstance& inst, const CellWitness& cell) {
    LineSolution sol;
    sol.partition = ap.partition;
    sol.verdicts = ap.verdicts;
    sol.gamma = ap.gamma;
    sol.center = cell.interior_point;
    const auto mids = ap.middle_points();
    sol.away_from_center.assign(inst.lines.size(), 0);
    for (auto m : mids) sol.away_from_center[m] = 1;
    for (std::size_t i = 0; i < inst.lines.size(); ++i) {
        const int toward = inst.lines[i].side(cell.interior_point);
        sol.halfplanes.push_back(Halfplane{inst.lines[i], sol.away_from_center[i] ? -toward : toward});
    }

    auto satisfies_all = [&](const Point2& p) {
        return std::all_of(sol.halfplanes.begin(), sol.halfplanes.end(), [&](const Halfplane& h) { return h.contains(p); });
    };
    std::optional<Point2> witness;
    if (mids.size() >= 2 && ap.gamma) {
        if (auto q = intersect(inst.lines[ap.gamma->from], inst.lines[ap.gamma->to]); q && satisfies_all(*q)) {
            witness = q;
            sol.witness_from_gamma_ends = true;
        }
    }
    if (!witness) {
        const Point2 extra[] = {cell.interior_point};
        witness = feasible_point(sol.halfplanes, extra);
    }
    if (!witness) throw ContractViolation("pull_back: no point satisfies every halfplane");
    sol.witness = *witness;
    for (const auto& t : sol.partition.triples) {
        const auto tri = triangle_halfplanes(inst.lines[t[0]], inst.lines[t[1]], inst.lines[t[2]]);
        for (const auto& h : tri)
            if (!h.contains(sol.witness)) throw ContractViolation("pull_back: witness outside a triangle");
    }
    return sol;
}

struct LineSolveOptions {
    std::size_t cap = default_search_cap;
    std::optional<Point2> hint;
};

inline LineSolution solve_lines(const LineInstance& inst, const LineSolveOptions& opts = {},
                                std::vector<TraceStep>* trace = nullptr) {
    const auto cell = find_witness_cell(inst.lines, opts.hint);
    const auto dual = dualize(inst, cell);
    const auto ap = solve_circle(dual.circle, SolveOptions{opts.cap}, trace);
    return pull_back(ap, inst, cell);
}

}  // namespace tverberg
