#pragma once

// Colorful partitions of 3k circle points with consecutive middle points.
//
// The construction follows the constructive proof: start from a partition with
// the fewest unbounding triples, rearrange the unbounding ones along a
// circular ordering cut where the geometric join's radial projection leaves a
// gap, then repeatedly swap a bounding triple inside the middle-point arc with
// the two triples at the arc's ends until the arc holds nothing but middle
// points.

#include "tverberg/combinatorics.hpp"
#include "tverberg/kernel.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace tverberg {

struct CircleInstance {
    std::vector<CirclePoint> points;
    Coloring coloring;

    std::size_t k() const { return coloring.k; }
    std::size_t size() const { return points.size(); }
};

inline CircleInstance make_circle_instance(std::vector<CirclePoint> points, Coloring coloring) {
    if (points.size() != coloring.size())
        throw ValidationError("instance has " + std::to_string(points.size()) + " points but " +
                              std::to_string(coloring.size()) + " colors");
    require_general_directions(points);
    return CircleInstance{std::move(points), std::move(coloring)};
}

/// Sub-instance on `subset` (which must be color-balanced); element i of the
/// result is element subset[i] of `inst`.
inline CircleInstance restrict_instance(const CircleInstance& inst, const std::vector<std::size_t>& subset) {
    std::vector<CirclePoint> pts;
    std::vector<int> colors;
    for (auto i : subset) {
        pts.push_back(inst.points[i]);
        colors.push_back(inst.coloring[i]);
    }
    return CircleInstance{std::move(pts), make_coloring(std::move(colors))};
}

/// Clockwise arc between two middle points, by element index.
struct GammaArc {
    std::size_t from = 0;
    std::size_t to = 0;
    bool operator==(const GammaArc&) const = default;
};

struct AnnotatedPartition {
    TriplePartition partition;
    std::vector<TripleClass> verdicts;
    std::optional<GammaArc> gamma;

    std::size_t unbounding_count() const {
        return std::size_t(std::count_if(verdicts.begin(), verdicts.end(), [](const TripleClass& v) { return !v.bounding; }));
    }

    std::vector<std::size_t> middle_points() const {
        std::vector<std::size_t> out;
        for (std::size_t t = 0; t < verdicts.size(); ++t)
            if (!verdicts[t].bounding) out.push_back(partition.triples[t][verdicts[t].middle]);
        return out;
    }
};

inline TripleClass classify(const CircleInstance& inst, const Triple& t) {
    return classify_triple(inst.points[t[0]], inst.points[t[1]], inst.points[t[2]]);
}

/// Shortest closed arc containing the given points, when there are at least
/// two of them and they fit in a semicircle. The arc starts at the point from
/// which every other lies less than a half turn clockwise.
inline std::optional<GammaArc> shortest_covering_arc(const CircleInstance& inst, const std::vector<std::size_t>& ids) {
    if (ids.size() < 2) return std::nullopt;
    auto first_of = [&](bool as_start) -> std::optional<std::size_t> {
        for (auto s : ids) {
            bool ok = true;
            for (auto m : ids) {
                if (m == s) continue;
                const bool within = as_start ? clockwise_within_half_turn(inst.points[s], inst.points[m])
                                             : clockwise_within_half_turn(inst.points[m], inst.points[s]);
                if (!within) {
                    ok = false;
                    break;
                }
            }
            if (ok) return s;
        }
        return std::nullopt;
    };
    auto s = first_of(true);
    if (!s) return std::nullopt;
    auto e = first_of(false);
    if (!e) throw ContractViolation("arc start found without an arc end");
    return GammaArc{*s, *e};
}

inline Arc to_arc(const CircleInstance& inst, const GammaArc& g) { return Arc{inst.points[g.from], inst.points[g.to]}; }

inline AnnotatedPartition annotate(const CircleInstance& inst, TriplePartition partition) {
    AnnotatedPartition ap;
    ap.partition = std::move(partition);
    for (const auto& t : ap.partition.triples) ap.verdicts.push_back(classify(inst, t));
    ap.gamma = shortest_covering_arc(inst, ap.middle_points());
    return ap;
}

/// Element indices in the closed arc, in clockwise order from its start.
inline std::vector<std::size_t> points_in_arc(const CircleInstance& inst, const GammaArc& g) {
    const Arc arc = to_arc(inst, g);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < inst.size(); ++i)
        if (in_closed_clockwise_arc(inst.points[i], arc)) out.push_back(i);
    std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
        return clockwise_before(arc.from, inst.points[a], inst.points[b]);
    });
    return out;
}

/// At most one middle point, or all of them fit in a semicircle and the
/// shortest arc holding them holds no other point.
inline bool is_consecutive(const AnnotatedPartition& ap, const CircleInstance& inst) {
    const auto mids = ap.middle_points();
    if (mids.size() <= 1) return true;
    if (!ap.gamma) return false;
    const Arc arc = to_arc(inst, *ap.gamma);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        if (std::find(mids.begin(), mids.end(), i) != mids.end()) continue;
        if (in_clockwise_arc(inst.points[i], arc)) return false;
    }
    return true;
}

inline constexpr std::size_t default_search_cap = 7;

/// Exhaustive branch-and-bound over colorful partitions for one with the fewest
/// unbounding triples. Among equally good partitions the first in enumeration
/// order is returned.
inline TriplePartition min_unbounding_partition(const CircleInstance& inst, std::size_t cap = default_search_cap) {
    const std::size_t k = inst.k();
    if (k > cap) {
        mpz_class leaves = 1;
        for (std::size_t i = 2; i <= k; ++i) leaves *= static_cast<unsigned long>(i);
        leaves *= leaves;
        throw SearchCapExceeded("k = " + std::to_string(k) + " exceeds search cap " + std::to_string(cap) +
                                " ((k!)^2 = " + leaves.get_str() + " partitions)");
    }
    const auto cls = inst.coloring.classes();
    std::vector<char> unbounding(k * k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < k; ++l)
                unbounding[(i * k + j) * k + l] =
                    !classify(inst, Triple{cls[0][i], cls[1][j], cls[2][l]}).bounding;

    std::vector<std::size_t> pick2(k), pick3(k), best2, best3;
    std::vector<char> used2(k, 0), used3(k, 0);
    std::size_t best = k + 1;

    std::function<void(std::size_t, std::size_t)> search = [&](std::size_t i, std::size_t count) {
        if (count >= best) return;
        if (i == k) {
            best = count;
            best2 = pick2;
            best3 = pick3;
            return;
        }
        for (std::size_t j = 0; j < k && best > 0; ++j) {
            if (used2[j]) continue;
            used2[j] = 1;
            pick2[i] = j;
            for (std::size_t l = 0; l < k && best > 0; ++l) {
                if (used3[l]) continue;
                used3[l] = 1;
                pick3[i] = l;
                search(i + 1, count + unbounding[(i * k + j) * k + l]);
                used3[l] = 0;
            }
            used2[j] = 0;
        }
    };
    search(0, 0);

    TriplePartition out;
    for (std::size_t i = 0; i < k; ++i) out.triples.push_back(Triple{cls[0][i], cls[1][best2[i]], cls[2][best3[i]]});
    return out;
}

/// The clockwise span of an unbounding triple: from one end through the middle
/// point to the other end. It is the radial projection of the triangle.
inline GammaArc spanning_arc(const CircleInstance& inst, const Triple& t, const TripleClass& v) {
    const std::size_t m = t[v.middle];
    const std::size_t e1 = t[(v.middle + 1) % 3];
    const std::size_t e2 = t[(v.middle + 2) % 3];
    if (clockwise_before(inst.points[e1], inst.points[m], inst.points[e2])) return GammaArc{e1, e2};
    return GammaArc{e2, e1};
}

/// A gap of the circular order that the radial projection of the geometric join
/// of the color classes misses. Requires every colorful triple to be
/// unbounding.
inline CutPosition find_uncovered_cut(const CircleInstance& inst) {
    const std::size_t n = inst.size();
    const auto cls = inst.coloring.classes();
    for (const auto& c : cls)
        if (c.empty()) throw ContractViolation("find_uncovered_cut: a color class is empty");

    const auto order = circular_order(inst.points, CutPosition{0});
    std::vector<std::size_t> pos(n);
    for (std::size_t g = 0; g < n; ++g) pos[order[g]] = g;

    // covered[g]: gap between order[g] and order[g + 1].
    std::vector<char> covered(n, 0);
    for (auto a : cls[0])
        for (auto b : cls[1])
            for (auto c : cls[2]) {
                const Triple t{a, b, c};
                const auto v = classify(inst, t);
                if (v.bounding)
                    throw ContractViolation("find_uncovered_cut: colorful bounding triple {" + std::to_string(a) +
                                            "," + std::to_string(b) + "," + std::to_string(c) + "}");
                const auto arc = spanning_arc(inst, t, v);
                for (std::size_t g = pos[arc.from]; g != pos[arc.to]; g = (g + 1) % n) covered[g] = 1;
            }
    // Colorful pairs and single points project into these arcs as well.
    for (std::size_t g = 0; g < n; ++g)
        if (!covered[g]) return CutPosition{order[g]};
    throw ContractViolation("find_uncovered_cut: no uncovered gap");
}

/// Partition of a colorful-bounding-free instance whose middle points are one
/// contiguous block of the circular order.
inline AnnotatedPartition partition_all_unbounding(const CircleInstance& inst) {
    const std::size_t m = inst.k();
    const auto cut = find_uncovered_cut(inst);
    const auto order = circular_order(inst.points, cut);
    ClassSets blocks;
    for (std::size_t i = 0; i < order.size(); ++i) blocks[i / m].push_back(order[i]);
    const std::vector<std::size_t> middle_block = blocks[1];

    auto ap = annotate(inst, transversal_partition(blocks, inst.coloring.classes()));
    for (std::size_t t = 0; t < ap.verdicts.size(); ++t) {
        if (ap.verdicts[t].bounding) throw ContractViolation("partition_all_unbounding: bounding triple produced");
        const auto mid = ap.partition.triples[t][ap.verdicts[t].middle];
        if (std::find(middle_block.begin(), middle_block.end(), mid) == middle_block.end())
            throw ContractViolation("partition_all_unbounding: middle point outside the second block");
    }
    if (!is_consecutive(ap, inst)) throw ContractViolation("partition_all_unbounding: middle points not consecutive");
    return ap;
}

struct NineRepartition {
    Triple bounding;
    std::array<Triple, 2> unbounding;
};

/// Rearranges B ∪ U1 ∪ U2 into one bounding and two unbounding colorful triples
/// whose middle points lie in gamma and include every point of B inside gamma.
/// The first admissible candidate in enumeration order is returned.
inline NineRepartition repartition_nine(const CircleInstance& inst, const Triple& b, const Triple& u1,
                                        const Triple& u2, const GammaArc& gamma) {
    auto describe = [&] {
        std::ostringstream os;
        os << "Q = {";
        for (const auto* t : {&b, &u1, &u2})
            for (auto e : *t)
                os << " " << e << ":(" << to_string(inst.points[e].dx) << "," << to_string(inst.points[e].dy)
                   << ")c" << inst.coloring[e] + 1;
        os << " }, gamma = " << gamma.from << "->" << gamma.to;
        return os.str();
    };
    if (!classify(inst, b).bounding) throw ContractViolation("repartition_nine: B is not bounding; " + describe());
    const Arc arc = to_arc(inst, gamma);
    std::vector<std::size_t> b_in_gamma;
    for (auto e : b)
        if (in_closed_clockwise_arc(inst.points[e], arc)) b_in_gamma.push_back(e);
    if (b_in_gamma.empty()) throw ContractViolation("repartition_nine: B misses gamma; " + describe());
    for (const auto* u : {&u1, &u2}) {
        const auto v = classify(inst, *u);
        if (v.bounding) throw ContractViolation("repartition_nine: U is bounding; " + describe());
        const auto mid = (*u)[v.middle];
        if (mid != gamma.from && mid != gamma.to)
            throw ContractViolation("repartition_nine: U's middle point is not a gamma endpoint; " + describe());
    }

    std::vector<std::size_t> q;
    for (const auto* t : {&b, &u1, &u2}) q.insert(q.end(), t->begin(), t->end());
    const auto sub = restrict_instance(inst, q);

    std::optional<NineRepartition> found;
    for_each_colorful_partition(sub.coloring, [&](const TriplePartition& p) {
        NineRepartition cand;
        int bounding = 0;
        int unbounding = 0;
        std::vector<std::size_t> mids;
        for (const auto& t : p.triples) {
            const Triple orig{q[t[0]], q[t[1]], q[t[2]]};
            const auto v = classify(inst, orig);
            if (v.bounding) {
                if (bounding++ == 0) cand.bounding = orig;
            } else {
                if (unbounding < 2) cand.unbounding[unbounding] = orig;
                ++unbounding;
                mids.push_back(orig[v.middle]);
            }
        }
        if (bounding != 1 || unbounding != 2) return true;
        for (auto mid : mids)
            if (!in_closed_clockwise_arc(inst.points[mid], arc)) return true;
        for (auto e : b_in_gamma)
            if (std::find(mids.begin(), mids.end(), e) == mids.end()) return true;
        found = cand;
        return false;
    });
    if (!found) throw ContractViolation("repartition_nine: no admissible repartition; " + describe());
    return *found;
}

/// One arc-shrinking round: |gamma ∩ P| before and after, the positions of
/// the three triples rewritten (B, U1, U2), and what they held before.
struct TraceStep {
    std::size_t iteration = 0;
    std::size_t gamma_points_before = 0;
    std::size_t gamma_points_after = 0;
    std::array<std::size_t, 3> triples{};
    std::array<Triple, 3> replaced{};
    GammaArc gamma{};
};

struct SolveOptions {
    std::size_t cap = default_search_cap;
};

inline void check_shrinking_invariants(const AnnotatedPartition& ap, const CircleInstance& inst,
                                       std::size_t min_unbounding) {
    if (ap.unbounding_count() != min_unbounding)
        throw ContractViolation("solve_circle: unbounding count changed from the minimum");
    if (!ap.gamma) throw ContractViolation("solve_circle: middle points left every semicircle");
    const auto mids = ap.middle_points();
    std::vector<char> in_bounding(inst.size(), 0);
    for (std::size_t t = 0; t < ap.verdicts.size(); ++t)
        if (ap.verdicts[t].bounding)
            for (auto e : ap.partition.triples[t]) in_bounding[e] = 1;
    for (auto p : points_in_arc(inst, *ap.gamma))
        if (!in_bounding[p] && std::find(mids.begin(), mids.end(), p) == mids.end())
            throw ContractViolation("solve_circle: gamma holds a point of an unbounding triple that is not its middle");
}

/// A colorful partition whose middle points are consecutive.
inline AnnotatedPartition solve_circle(const CircleInstance& inst, const SolveOptions& opts = {},
                                       std::vector<TraceStep>* trace = nullptr) {
    auto ap = annotate(inst, min_unbounding_partition(inst, opts.cap));
    const std::size_t min_unbounding = ap.unbounding_count();
    if (min_unbounding <= 1) return ap;

    // Rebuild the unbounding subfamily along an uncovered cut of its ground set.
    {
        std::vector<std::size_t> slots, ground;
        for (std::size_t t = 0; t < ap.verdicts.size(); ++t)
            if (!ap.verdicts[t].bounding) {
                slots.push_back(t);
                ground.insert(ground.end(), ap.partition.triples[t].begin(), ap.partition.triples[t].end());
            }
        const auto sub = restrict_instance(inst, ground);
        const auto sub_ap = partition_all_unbounding(sub);
        auto triples = ap.partition;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            const auto& t = sub_ap.partition.triples[s];
            triples.triples[slots[s]] = Triple{ground[t[0]], ground[t[1]], ground[t[2]]};
        }
        ap = annotate(inst, std::move(triples));
    }
    check_shrinking_invariants(ap, inst, min_unbounding);

    const std::size_t max_rounds = 3 * inst.k();
    for (std::size_t round = 1;; ++round) {
        const GammaArc gamma = *ap.gamma;
        const auto inside = points_in_arc(inst, gamma);
        const auto mids = ap.middle_points();

        std::vector<std::size_t> owner(inst.size());
        for (std::size_t t = 0; t < ap.partition.triples.size(); ++t)
            for (auto e : ap.partition.triples[t]) owner[e] = t;

        std::optional<std::size_t> b_slot;
        for (auto p : inside)
            if (std::find(mids.begin(), mids.end(), p) == mids.end()) {
                b_slot = owner[p];
                break;
            }
        if (!b_slot) break;
        if (round > max_rounds) throw ContractViolation("solve_circle: arc shrinking exceeded 3k rounds");

        const std::size_t u1_slot = owner[gamma.from];
        const std::size_t u2_slot = owner[gamma.to];
        const auto tr = ap.partition.triples;
        const auto rep = repartition_nine(inst, tr[*b_slot], tr[u1_slot], tr[u2_slot], gamma);

        auto next = ap.partition;
        next.triples[*b_slot] = rep.bounding;
        next.triples[u1_slot] = rep.unbounding[0];
        next.triples[u2_slot] = rep.unbounding[1];
        ap = annotate(inst, std::move(next));
        check_shrinking_invariants(ap, inst, min_unbounding);

        const std::size_t after = points_in_arc(inst, *ap.gamma).size();
        if (after >= inside.size()) throw ContractViolation("solve_circle: gamma did not shrink");
        if (trace)
            trace->push_back(TraceStep{round, inside.size(), after, {*b_slot, u1_slot, u2_slot},
                                       {tr[*b_slot], tr[u1_slot], tr[u2_slot]}, gamma});
    }
    if (!is_consecutive(ap, inst)) throw ContractViolation("solve_circle: result is not consecutive");
    return ap;
}

}  // namespace tverberg
