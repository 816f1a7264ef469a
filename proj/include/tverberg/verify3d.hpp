#pragma once

// Eight planes tangent to the upper unit half-sphere, colored in four pairs,
// for which every colorful split into two quadruples gives disjoint simplices.

#include "tverberg/errors.hpp"
#include "tverberg/rational.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tverberg::space {

struct Vec3 {
    Rat x, y, z;
    bool operator==(const Vec3&) const = default;
};

inline Rat dot(const Vec3& u, const Vec3& v) { return Rat(u.x * v.x + u.y * v.y + u.z * v.z); }
inline Vec3 cross(const Vec3& u, const Vec3& v) {
    return Vec3{Rat(u.y * v.z - u.z * v.y), Rat(u.z * v.x - u.x * v.z), Rat(u.x * v.y - u.y * v.x)};
}
inline Rat det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }
inline bool is_zero(const Vec3& v) { return sign(v.x) == 0 && sign(v.y) == 0 && sign(v.z) == 0; }

/// The plane a*x + b*y + c*z = d.
struct Plane3 {
    Rat a, b, c, d;

    Vec3 normal() const { return Vec3{a, b, c}; }
    Rat eval(const Vec3& p) const { return Rat(a * p.x + b * p.y + c * p.z - d); }
    bool operator==(const Plane3&) const = default;
};

/// Closed halfspace side * (n.x - d) >= 0.
struct Halfspace {
    const Plane3* plane;
    int side;
    bool contains(const Vec3& p) const { return side * sign(plane->eval(p)) >= 0; }
};

inline std::optional<Vec3> intersect3(const Plane3& p, const Plane3& q, const Plane3& r) {
    const Vec3 np = p.normal(), nq = q.normal(), nr = r.normal();
    const Rat det = det3(np, nq, nr);
    if (sign(det) == 0) return std::nullopt;
    // Cramer via cross products: x = (d_p (nq x nr) + d_q (nr x np) + d_r (np x nq)) / det.
    const Vec3 a = cross(nq, nr), b = cross(nr, np), c = cross(np, nq);
    return Vec3{Rat((p.d * a.x + q.d * b.x + r.d * c.x) / det), Rat((p.d * a.y + q.d * b.y + r.d * c.y) / det),
                Rat((p.d * a.z + q.d * b.z + r.d * c.z) / det)};
}

/// A point in the intersection, via vertex candidates. Complete when the
/// normals span space: the region is then pointed and, if nonempty, has a
/// vertex on three of the planes.
inline std::optional<Vec3> feasible_point(std::span<const Halfspace> hs) {
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j)
            for (std::size_t l = j + 1; l < hs.size(); ++l) {
                auto v = intersect3(*hs[i].plane, *hs[j].plane, *hs[l].plane);
                if (v && std::all_of(hs.begin(), hs.end(), [&](const Halfspace& h) { return h.contains(*v); }))
                    return v;
            }
    return std::nullopt;
}

/// Whether some nonzero direction satisfies every homogeneous constraint
/// side * (n.dir) >= 0. Extreme rays of the pointed recession cone lie on two
/// constraint planes, so the candidates are +-(n_i x n_j).
inline bool has_recession_direction(std::span<const Halfspace> hs) {
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            const Vec3 d = cross(hs[i].plane->normal(), hs[j].plane->normal());
            if (is_zero(d)) continue;
            for (int s : {1, -1}) {
                const Vec3 dir{Rat(s * d.x), Rat(s * d.y), Rat(s * d.z)};
                if (std::all_of(hs.begin(), hs.end(),
                                [&](const Halfspace& h) { return h.side * sign(dot(h.plane->normal(), dir)) >= 0; }))
                    return true;
            }
        }
    return false;
}

// Entries in {+1, -1, 0}: +1 is the closed side away from the origin, -1 the
// origin side, 0 unconstrained.
using SignVector = std::array<int, 8>;

inline std::string format_signs(const SignVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i] > 0 ? "+" : (v[i] < 0 ? "-" : "0");
    }
    return s + ")";
}

struct PlaneSet {
    std::vector<Vec3> tangency;  // empty for planes not built from tangency points
    std::vector<Plane3> planes;
    std::array<int, 8> color{};  // classes 0..3, two planes each
};

/// The plane tangent to the unit sphere at p is p.x = 1.
inline Plane3 tangent_plane(const Vec3& p) { return Plane3{p.x, p.y, p.z, Rat(1)}; }

inline PlaneSet eight_tangent_planes() {
    auto q = [](long n, long d) { return make_rat(n, d); };
    PlaneSet s;
    s.tangency = {
        {q(1, 3), q(2, 3), q(2, 3)},     {q(7, 9), q(-4, 9), q(4, 9)},   {q(6, 7), q(2, 7), q(3, 7)},
        {q(17, 19), q(6, 19), q(6, 19)}, {q(1, 3), q(-2, 3), q(2, 3)},   {q(2, 3), q(-2, 3), q(1, 3)},
        {q(6, 7), q(3, 7), q(2, 7)},     {q(-2, 7), q(3, 7), q(6, 7)},
    };
    for (const auto& p : s.tangency) s.planes.push_back(tangent_plane(p));
    s.color = {0, 1, 2, 3, 0, 1, 2, 3};
    return s;
}

inline Halfspace signed_halfspace(const Plane3& p, int entry) {
    // The origin evaluates to -d, so "away from origin" has the sign of d.
    if (sign(p.d) == 0) throw GeneralPositionViolation("plane through the origin has no away side");
    return Halfspace{&p, entry * sign(p.d)};
}

inline std::vector<Halfspace> halfspaces_of(const std::vector<Plane3>& planes, const SignVector& v) {
    std::vector<Halfspace> hs;
    for (std::size_t i = 0; i < planes.size(); ++i)
        if (v[i] != 0) hs.push_back(signed_halfspace(planes[i], v[i]));
    return hs;
}

inline bool region_empty(const std::vector<Plane3>& planes, const SignVector& v) {
    const auto hs = halfspaces_of(planes, v);
    return !feasible_point(hs).has_value();
}

inline void require_general_position(const std::vector<Plane3>& planes, std::span<const std::size_t> ids) {
    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b)
            for (std::size_t c = b + 1; c < ids.size(); ++c)
                if (sign(det3(planes[ids[a]].normal(), planes[ids[b]].normal(), planes[ids[c]].normal())) == 0)
                    throw GeneralPositionViolation("planes " + std::to_string(ids[a] + 1) + "," +
                                                   std::to_string(ids[b] + 1) + "," + std::to_string(ids[c] + 1) +
                                                   " do not meet in a single point");
    if (ids.size() == 4) {
        const auto v = intersect3(planes[ids[0]], planes[ids[1]], planes[ids[2]]);
        if (sign(planes[ids[3]].eval(*v)) == 0)
            throw GeneralPositionViolation("four planes share a point");
    }
}

/// The unique pattern on four planes whose region is a bounded nonempty
/// simplex; zero elsewhere.
inline SignVector bounded_simplex_sign_vector(const std::vector<Plane3>& planes, std::array<std::size_t, 4> ids) {
    require_general_position(planes, ids);
    std::optional<SignVector> found;
    for (int mask = 0; mask < 16; ++mask) {
        SignVector v{};
        for (int b = 0; b < 4; ++b) v[ids[b]] = (mask >> b) & 1 ? -1 : 1;
        const auto hs = halfspaces_of(planes, v);
        if (!feasible_point(hs) || has_recession_direction(hs)) continue;
        if (found) throw ContractViolation("two bounded sign patterns on one quadruple");
        found = v;
    }
    if (!found) throw ContractViolation("no bounded sign pattern on a quadruple");
    return *found;
}

inline SignVector negate(SignVector v) {
    for (auto& x : v) x = -x;
    return v;
}

inline SignVector restrict_to(const SignVector& v, std::span<const std::size_t> ids) {
    SignVector out{};
    for (auto i : ids) out[i] = v[i];
    return out;
}

// Disjoint supports, so the sum never produces +1 + -1.
inline SignVector add(const SignVector& a, const SignVector& b) {
    SignVector out{};
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

struct TableRow {
    std::array<std::size_t, 8> partition;  // 1-based, first four | last four
    SignVector printed_sum;
    std::array<std::size_t, 4> printed_quadruple;  // 1-based
};

inline SignVector parse_signs(std::string_view s) {
    SignVector v{};
    std::size_t i = 0;
    for (char c : s)
        if (c == '+' || c == '-' || c == '0') v.at(i++) = c == '+' ? 1 : (c == '-' ? -1 : 0);
    return v;
}

inline std::vector<TableRow> printed_table() {
    auto row = [](std::array<std::size_t, 8> p, const char* sv, std::array<std::size_t, 4> j) {
        return TableRow{p, parse_signs(sv), j};
    };
    return {
        row({1, 2, 3, 4, 5, 6, 7, 8}, "--+-+-+-", {1, 2, 5, 7}),
        row({1, 2, 3, 8, 5, 6, 7, 4}, "++-+----", {1, 2, 3, 4}),
        row({1, 2, 7, 4, 5, 6, 3, 8}, "+-+++---", {2, 4, 5, 8}),
        row({1, 2, 7, 8, 5, 6, 3, 4}, "+++--+--", {1, 4, 5, 6}),
        row({1, 6, 3, 4, 5, 2, 7, 8}, "-++----+", {1, 2, 5, 8}),
        row({1, 6, 3, 8, 5, 2, 7, 4}, "--+++--+", {1, 2, 3, 8}),
        row({1, 6, 7, 4, 5, 2, 3, 8}, "--+++---", {1, 2, 4, 5}),
        row({1, 6, 7, 8, 5, 2, 3, 4}, "+++--+--", {1, 4, 5, 6}),
    };
}

struct RowResult {
    TableRow row;
    SignVector computed_sum{};
    bool sum_matches = false;
    bool quadruple_certifies = false;  // sum on J equals -v(J) and that region is empty
    bool simplices_disjoint = false;   // exact infeasibility of all 8 constraints
    bool passed() const { return sum_matches && quadruple_certifies && simplices_disjoint; }
};

struct TableReport {
    std::vector<RowResult> rows;
    bool covers_all_partitions = false;
    bool passed() const {
        return covers_all_partitions && std::all_of(rows.begin(), rows.end(), [](const RowResult& r) { return r.passed(); });
    }
};

// Sum of the two bounded-simplex sign vectors of a split (1-based indices).
inline SignVector split_sign_vector(const std::vector<Plane3>& planes, const std::array<std::size_t, 8>& split) {
    std::array<std::size_t, 4> a, b;
    for (int i = 0; i < 4; ++i) {
        a[i] = split[i] - 1;
        b[i] = split[i + 4] - 1;
    }
    return add(bounded_simplex_sign_vector(planes, a), bounded_simplex_sign_vector(planes, b));
}

// The 8 unordered colorful splits: plane 1's quadruple picks one of each
// remaining color pair.
inline std::vector<std::array<std::size_t, 8>> colorful_splits(const std::array<int, 8>& color) {
    std::array<std::array<std::size_t, 2>, 4> pairs{};
    std::array<int, 4> fill{};
    for (std::size_t i = 0; i < 8; ++i) pairs[color[i]][fill[color[i]]++] = i + 1;
    std::vector<std::array<std::size_t, 8>> out;
    const int first = color[0];
    for (int mask = 0; mask < 16; ++mask) {
        if ((mask >> first) & 1) continue;  // plane 1 stays in the first quadruple
        std::array<std::size_t, 8> split{};
        for (int c = 0; c < 4; ++c) {
            split[c] = pairs[c][(mask >> c) & 1];
            split[c + 4] = pairs[c][1 - ((mask >> c) & 1)];
        }
        out.push_back(split);
    }
    return out;
}

inline TableReport verify_table(const PlaneSet& set = eight_tangent_planes(),
                                const std::vector<TableRow>& table = printed_table()) {
    TableReport report;
    std::vector<std::array<std::size_t, 8>> seen;
    for (const auto& row : table) {
        RowResult r{row};
        r.computed_sum = split_sign_vector(set.planes, row.partition);
        r.sum_matches = r.computed_sum == row.printed_sum;

        std::array<std::size_t, 4> j;
        for (int i = 0; i < 4; ++i) j[i] = row.printed_quadruple[i] - 1;
        const SignVector neg_vj = negate(bounded_simplex_sign_vector(set.planes, j));
        r.quadruple_certifies = restrict_to(r.computed_sum, j) == neg_vj && region_empty(set.planes, neg_vj);

        r.simplices_disjoint = region_empty(set.planes, r.computed_sum);
        report.rows.push_back(r);

        auto key = row.partition;
        std::sort(key.begin(), key.begin() + 4);
        std::sort(key.begin() + 4, key.end());
        if (key[0] != 1) {
            std::array<std::size_t, 8> swapped;
            std::copy(key.begin() + 4, key.end(), swapped.begin());
            std::copy(key.begin(), key.begin() + 4, swapped.begin() + 4);
            key = swapped;
        }
        seen.push_back(key);
    }
    auto splits = colorful_splits(set.color);
    for (auto& s : splits) {
        std::sort(s.begin(), s.begin() + 4);
        std::sort(s.begin() + 4, s.end());
    }
    std::sort(splits.begin(), splits.end());
    std::sort(seen.begin(), seen.end());
    report.covers_all_partitions = splits == seen;
    return report;
}

struct ConvexPositionReport {
    bool ok = true;
    std::string message = "ok";
};

/// Every three planes meet in one point, no four share a point, and each
/// tangency point lies strictly on the origin side of every other plane.
inline ConvexPositionReport verify_convex_position_3d(const PlaneSet& set = eight_tangent_planes()) {
    const auto& pl = set.planes;
    const std::size_t n = pl.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                const auto v = intersect3(pl[a], pl[b], pl[c]);
                if (!v)
                    return {false, "planes " + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
                                       std::to_string(c + 1) + " have no unique common point"};
                for (std::size_t d = c + 1; d < n; ++d)
                    if (sign(pl[d].eval(*v)) == 0)
                        return {false, "planes " + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
                                           std::to_string(c + 1) + "," + std::to_string(d + 1) + " share a point"};
            }
    for (std::size_t i = 0; i < set.tangency.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            // Origin side of plane j is where eval has the sign of eval(0) = -d.
            if (sign(pl[j].eval(set.tangency[i])) != -sign(pl[j].d))
                return {false, "tangency point " + std::to_string(i + 1) + " is not strictly on the origin side of plane " +
                                   std::to_string(j + 1)};
        }
    return {};
}

struct SplitResult {
    std::array<std::size_t, 8> split;
    SignVector sum{};
    bool disjoint = false;
};

/// All colorful splits of an arbitrary colored plane set, with exact
/// disjointness of the two simplices.
inline std::vector<SplitResult> analyze_splits(const PlaneSet& set) {
    std::vector<SplitResult> out;
    for (const auto& s : colorful_splits(set.color)) {
        SplitResult r{s};
        r.sum = split_sign_vector(set.planes, s);
        r.disjoint = region_empty(set.planes, r.sum);
        out.push_back(r);
    }
    return out;
}

}  // namespace tverberg::space
