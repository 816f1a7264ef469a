#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace tverberg;
using namespace tverberg::testing;

namespace {

std::set<std::size_t> as_set(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

std::size_t min_unbounding_by_enumeration(const CircleInstance& inst) {
    std::size_t best = inst.k() + 1;
    for (const auto& p : colorful_partitions(inst.coloring)) best = std::min(best, annotate(inst, p).unbounding_count());
    return best;
}

bool has_colorful_bounding_triple(const CircleInstance& inst) {
    const auto cls = inst.coloring.classes();
    for (auto a : cls[0])
        for (auto b : cls[1])
            for (auto c : cls[2])
                if (classify(inst, Triple{a, b, c}).bounding) return true;
    return false;
}

// Random instance whose points lie in an arc of the given clockwise extent
// starting at a random direction, built from integer directions.
CircleInstance random_in_arc(std::mt19937_64& rng, std::size_t k, double extent_deg) {
    const double pi = std::acos(-1.0);
    const double start = double(rng() % 3600) / 10.0;
    std::vector<CirclePoint> pts;
    while (pts.size() < 3 * k) {
        const double deg = start - extent_deg * double(rng() % 100000) / 100000.0;
        const CirclePoint p(Rat(std::lround(1000 * std::cos(deg * pi / 180))), Rat(std::lround(1000 * std::sin(deg * pi / 180))));
        if (std::any_of(pts.begin(), pts.end(), [&](const CirclePoint& o) { return collinear_directions(o, p); })) continue;
        pts.push_back(p);
    }
    std::vector<int> col;
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < k; ++i) col.push_back(c);
    std::shuffle(col.begin(), col.end(), rng);
    return with_colors(std::move(pts), std::move(col));
}

CircleInstance random_instance(std::mt19937_64& rng, std::size_t k) {
    std::vector<CirclePoint> pts;
    while (pts.size() < 3 * k) {
        const auto p = random_direction(rng);
        if (std::any_of(pts.begin(), pts.end(), [&](const CirclePoint& o) { return collinear_directions(o, p); })) continue;
        pts.push_back(p);
    }
    std::vector<int> col;
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < k; ++i) col.push_back(c);
    std::shuffle(col.begin(), col.end(), rng);
    return with_colors(std::move(pts), std::move(col));
}

// Every colorful partition of the nine points holds at most one bounding triple.
bool at_most_one_bounding(const CircleInstance& inst, const std::vector<std::size_t>& q) {
    const auto sub = restrict_instance(inst, q);
    for (const auto& p : colorful_partitions(sub.coloring)) {
        int bounding = 0;
        for (const auto& t : p.triples) bounding += classify(sub, t).bounding ? 1 : 0;
        if (bounding > 1) return false;
    }
    return true;
}

// Rearrangement of Q admissible for one arc-shrinking round.
bool admissible(const CircleInstance& inst, const std::array<Triple, 3>& triples, const GammaArc& gamma,
                const Triple& old_b) {
    const Arc arc = to_arc(inst, gamma);
    int bounding = 0;
    std::vector<std::size_t> mids;
    for (const auto& t : triples) {
        if (!is_colorful(t, inst.coloring)) return false;
        const auto v = classify(inst, t);
        if (v.bounding)
            ++bounding;
        else
            mids.push_back(t[v.middle]);
    }
    if (bounding != 1 || mids.size() != 2) return false;
    for (auto m : mids)
        if (!in_closed_clockwise_arc(inst.points[m], arc)) return false;
    for (auto e : old_b)
        if (in_closed_clockwise_arc(inst.points[e], arc) && std::find(mids.begin(), mids.end(), e) == mids.end())
            return false;
    return true;
}

std::vector<std::size_t> middle_points_of(const CircleInstance& inst, const std::array<Triple, 3>& triples) {
    std::vector<std::size_t> mids;
    for (const auto& t : triples)
        if (auto v = classify(inst, t); !v.bounding) mids.push_back(t[v.middle]);
    return mids;
}

bool contains(const Triple& t, std::size_t e) { return std::find(t.begin(), t.end(), e) != t.end(); }

// The second construction: choose B' by the case analysis, order the other six
// points clockwise from a reference direction, cut into three blocks of two and
// take a transversal partition.
std::optional<std::array<Triple, 3>> case_analysis_repartition(const CircleInstance& inst, const Triple& b,
                                                               const Triple& u1, const Triple& u2,
                                                               const GammaArc& gamma) {
    const auto& P = inst.points;
    const Arc arc = to_arc(inst, gamma);
    const std::size_t m1 = gamma.from, m2 = gamma.to;
    auto ends = [&](const Triple& u, std::size_t m) {
        std::array<std::size_t, 2> o{};
        int n = 0;
        for (auto e : u)
            if (e != m) o[n++] = e;
        // l is the end from which the middle point is reached clockwise first.
        if (clockwise_before(P[o[0]], P[m], P[o[1]])) return std::pair{o[0], o[1]};
        return std::pair{o[1], o[0]};
    };
    const auto [l1, r1] = ends(u1, m1);
    const auto [l2, r2] = ends(u2, m2);

    std::vector<std::size_t> in_g, out_g;
    for (auto e : b) (in_closed_clockwise_arc(P[e], arc) ? in_g : out_g).push_back(e);

    std::vector<std::size_t> q;
    for (const auto* t : {&b, &u1, &u2}) q.insert(q.end(), t->begin(), t->end());

    std::vector<Triple> candidates;
    CirclePoint ref;
    if (in_g.size() == 2) {
        const std::size_t b3 = out_g[0];
        ref = P[b3];
        for (auto x : {m1, l1, l2})
            for (auto y : {m2, r1, r2}) candidates.push_back(Triple{b3, x, y});
    } else if (in_g.size() == 1) {
        const std::size_t b1 = in_g[0];
        const CirclePoint neg_b1 = -P[b1];
        // b2 lies in the clockwise arc from m2 to -b1, b3 in the one from -b1 to m1.
        std::size_t b2 = out_g[0], b3 = out_g[1];
        if (!clockwise_before(P[m2], P[b2], neg_b1)) std::swap(b2, b3);
        ref = neg_b1;
        const std::vector<std::size_t> s1{l1, l2, b3}, s2{m2, r1, r2, b2};
        const std::vector<std::size_t> s3{r1, r2, b2}, s4{m1, l1, l2, b3};
        const bool need_b2 = clockwise_before(-P[m1], P[b2], neg_b1);
        const bool need_b3 = clockwise_before(neg_b1, P[b3], -P[m2]);
        for (auto x : s1)
            for (std::size_t i = 0; i < s2.size(); ++i)
                for (std::size_t j = i + 1; j < s2.size(); ++j) {
                    Triple t{x, s2[i], s2[j]};
                    if (!need_b2 || contains(t, b2)) candidates.push_back(t);
                }
        for (auto x : s3)
            for (std::size_t i = 0; i < s4.size(); ++i)
                for (std::size_t j = i + 1; j < s4.size(); ++j) {
                    Triple t{x, s4[i], s4[j]};
                    if (!need_b3 || contains(t, b3)) candidates.push_back(t);
                }
    } else {
        return std::nullopt;
    }

    for (const auto& bp : candidates) {
        if (!is_colorful(bp, inst.coloring) || !classify(inst, bp).bounding) continue;
        std::vector<std::size_t> rest;
        for (auto e : q)
            if (!contains(bp, e)) rest.push_back(e);
        std::sort(rest.begin(), rest.end(), [&](std::size_t x, std::size_t y) { return clockwise_before(ref, P[x], P[y]); });
        ClassSets blocks, colors;
        for (std::size_t i = 0; i < 6; ++i) {
            blocks[i / 2].push_back(rest[i]);
            colors[inst.coloring[rest[i]]].push_back(rest[i]);
        }
        const auto tp = transversal_partition(blocks, colors);
        return std::array<Triple, 3>{bp, tp.triples[0], tp.triples[1]};
    }
    return std::nullopt;
}

// Figure 2 directions p1..p6 with the figure's colors.
CircleInstance figure2() {
    return with_colors({cp100(-1.9, -0.7), cp100(-1.6, 1.25), cp100(-0.5, 1.95), cp100(0.8, 1.85), cp100(1.8, 0.95),
                        cp100(1.75, -1)},
                       {2, 1, 0, 1, 0, 2});
}

// Figure 3: b1 b2 b3 m1 m2 l1 l2 r1 r2.
CircleInstance figure3() {
    return with_colors({cp100(-0.5, 1.93), cp100(0.5, 1.93), cp100(0, -2), cp100(-1.1, 1.7), cp100(1.1, 1.7),
                        cp100(-1.8, 0.8), cp100(-2, 0), cp100(1.95, -0.5), cp100(1.9, 0.7)},
                       {0, 1, 2, 2, 0, 0, 1, 1, 2});
}

// Figure 4: b1 b2 b3 m1 m2 l1 l2 r1 r2.
CircleInstance figure4() {
    return with_colors({cp100(0, 2), cp100(0.5, -1.93), cp100(-1.7, -1.1), cp100(-1.1, 1.7), cp100(1.1, 1.7),
                        cp100(-1.8, 0.8), cp100(-2, 0), cp100(1.95, -0.5), cp100(1.9, 0.7)},
                       {0, 1, 2, 1, 1, 0, 2, 2, 0});
}

const Triple fig_b{0, 1, 2}, fig_u1{3, 5, 7}, fig_u2{4, 6, 8};
const GammaArc fig_gamma{3, 4};

}  // namespace

TEST(IsConsecutive, NoMiddlePoints) {
    const auto inst = with_colors({cp(1, 0), cp(-1, 1), cp(-1, -1), cp(2, 1), cp(-1, 3), cp(-1, -4)}, {0, 1, 2, 0, 1, 2});
    const auto ap = annotate(inst, TriplePartition{{Triple{0, 1, 2}, Triple{3, 4, 5}}});
    ASSERT_EQ(ap.unbounding_count(), 0u);
    EXPECT_TRUE(is_consecutive(ap, inst));
}

TEST(IsConsecutive, AdjacentMiddlePoints) {
    const auto inst = with_colors({cp(-4, 1), cp(-1, 4), cp(4, 1), cp(-2, 1), cp(1, 2), cp(3, -1)}, {0, 1, 2, 0, 1, 2});
    const auto ap = annotate(inst, TriplePartition{{Triple{0, 1, 2}, Triple{3, 4, 5}}});
    ASSERT_EQ(as_set(ap.middle_points()), (std::set<std::size_t>{1, 4}));
    EXPECT_TRUE(is_consecutive(ap, inst));
}

TEST(IsConsecutive, SeparatedMiddlePoints) {
    // (0,1) sits between the middle points (-1,4) and (1,2) and is not a middle point.
    const auto inst = with_colors({cp(-4, 1), cp(-1, 4), cp(4, 1), cp(0, 1), cp(1, 2), cp(3, -1)}, {0, 1, 2, 0, 1, 2});
    const auto ap = annotate(inst, TriplePartition{{Triple{0, 1, 2}, Triple{3, 4, 5}}});
    ASSERT_EQ(as_set(ap.middle_points()), (std::set<std::size_t>{1, 4}));
    ASSERT_TRUE(ap.gamma);
    EXPECT_TRUE(in_clockwise_arc(inst.points[3], to_arc(inst, *ap.gamma)));
    EXPECT_FALSE(is_consecutive(ap, inst));
    std::vector<char> mid(6, 0);
    mid[1] = mid[4] = 1;
    EXPECT_FALSE(oracle::consecutive_by_runs(inst, mid));
}

TEST(Gamma, AbsentWhenMiddlePointsLeaveEverySemicircle) {
    // Middle points (0,1), (-1,-1), (1,-1) surround the center.
    const auto inst = with_colors({cp(-1, 2), cp(0, 1), cp(1, 2), cp(-2, -1), cp(-1, -1), cp(-2, -3), cp(2, -3),
                                   cp(1, -1), cp(2, -1)},
                                  {0, 1, 2, 0, 1, 2, 0, 1, 2});
    const auto ap = annotate(inst, TriplePartition{{Triple{0, 1, 2}, Triple{3, 4, 5}, Triple{6, 7, 8}}});
    ASSERT_EQ(as_set(ap.middle_points()), (std::set<std::size_t>{1, 4, 7}));
    EXPECT_FALSE(ap.gamma);
    EXPECT_FALSE(is_consecutive(ap, inst));
}

TEST(MinUnbounding, AllInOneSemicircleGivesK) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t k = 1 + trial % 4;
        const auto inst = random_in_arc(rng, k, 170);
        EXPECT_EQ(annotate(inst, min_unbounding_partition(inst)).unbounding_count(), k);
    }
}

TEST(MinUnbounding, SingleBoundingTripleGivesZero) {
    const auto inst = with_colors({cp(1, 0), cp(-1, 1), cp(-1, -1)}, {0, 1, 2});
    EXPECT_EQ(annotate(inst, min_unbounding_partition(inst)).unbounding_count(), 0u);
}

TEST(MinUnbounding, MatchesEnumeration) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t k = 2 + trial % 3;
        const auto inst = random_instance(rng, k);
        const auto p = min_unbounding_partition(inst);
        ASSERT_TRUE(is_partition_of(p, inst.size()));
        ASSERT_TRUE(is_colorful(p, inst.coloring));
        EXPECT_EQ(annotate(inst, p).unbounding_count(), min_unbounding_by_enumeration(inst));
    }
}

TEST(MinUnbounding, CapExceededNamesTheBound) {
    std::mt19937_64 rng(33);
    const auto inst = random_instance(rng, 3);
    try {
        min_unbounding_partition(inst, 2);
        FAIL() << "expected SearchCapExceeded";
    } catch (const SearchCapExceeded& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("cap 2"), std::string::npos);
        EXPECT_NE(msg.find("36"), std::string::npos);
    }
}

TEST(UncoveredCut, QuarterCircleTriple) {
    const auto inst = with_colors({cp(1, 0), cp(1, 1), cp(0, 1)}, {0, 1, 2});
    // Clockwise from (1,0) the next point is (0,1), three quarters away.
    EXPECT_EQ(find_uncovered_cut(inst), CutPosition{0});
}

TEST(UncoveredCut, FigureTwoCutPrecedesP1) {
    const auto inst = figure2();
    ASSERT_FALSE(has_colorful_bounding_triple(inst));
    const auto cut = find_uncovered_cut(inst);
    EXPECT_EQ(cut, CutPosition{5});
    EXPECT_EQ(circular_order(inst.points, cut), (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
}

TEST(UncoveredCut, RandomGapMissesEverySpanningArc) {
    std::mt19937_64 rng(34);
    int checked = 0;
    while (checked < 100) {
        const auto inst = random_in_arc(rng, 3, double(150 + rng() % 120));
        if (has_colorful_bounding_triple(inst)) continue;
        ++checked;
        const auto cut = find_uncovered_cut(inst);
        const auto order = circular_order(inst.points, cut);
        const std::size_t next = order.front();
        const auto cls = inst.coloring.classes();
        for (auto a : cls[0])
            for (auto b : cls[1])
                for (auto c : cls[2]) {
                    const Triple t{a, b, c};
                    const auto g = spanning_arc(inst, t, classify(inst, t));
                    const Arc arc = to_arc(inst, g);
                    const bool covers_gap = in_closed_clockwise_arc(inst.points[cut.after], arc) && cut.after != g.to &&
                                            in_closed_clockwise_arc(inst.points[next], arc);
                    ASSERT_FALSE(covers_gap);
                }
    }
}

TEST(UncoveredCut, BoundingTripleIsAContractViolation) {
    const auto inst = with_colors({cp(1, 0), cp(-1, 1), cp(-1, -1)}, {0, 1, 2});
    EXPECT_THROW(find_uncovered_cut(inst), ContractViolation);
}

TEST(PartitionAllUnbounding, SingleTriple) {
    const auto inst = with_colors({cp(1, 0), cp(1, 1), cp(0, 1)}, {0, 1, 2});
    const auto ap = partition_all_unbounding(inst);
    ASSERT_EQ(ap.middle_points().size(), 1u);
    const auto order = circular_order(inst.points, find_uncovered_cut(inst));
    EXPECT_EQ(ap.middle_points()[0], order[1]);
    EXPECT_EQ(ap.middle_points()[0], 1u);
}

TEST(PartitionAllUnbounding, FigureTwo) {
    const auto inst = figure2();
    const auto ap = partition_all_unbounding(inst);
    EXPECT_EQ(ap.unbounding_count(), 2u);
    // Second block of the clockwise order: p3, p4.
    EXPECT_EQ(as_set(ap.middle_points()), (std::set<std::size_t>{2, 3}));
    EXPECT_EQ(canonical(ap.partition), canonical(TriplePartition{{Triple{0, 3, 4}, Triple{1, 2, 5}}}));
    EXPECT_TRUE(is_consecutive(ap, inst));
}

TEST(PartitionAllUnbounding, RandomTwoByThree) {
    std::mt19937_64 rng(35);
    int checked = 0;
    while (checked < 100) {
        const auto inst = random_in_arc(rng, 2, double(150 + rng() % 120));
        if (has_colorful_bounding_triple(inst)) continue;
        ++checked;
        const auto ap = partition_all_unbounding(inst);
        EXPECT_EQ(ap.unbounding_count(), 2u);
        EXPECT_TRUE(is_consecutive(ap, inst));
    }
}

TEST(RepartitionNine, FigureThreeTwoPointsOfBInGamma) {
    const auto inst = figure3();
    ASSERT_TRUE(classify(inst, fig_b).bounding);
    ASSERT_EQ(classify(inst, fig_u1), (TripleClass{false, 0}));
    ASSERT_EQ(classify(inst, fig_u2), (TripleClass{false, 0}));
    ASSERT_EQ(shortest_covering_arc(inst, {3, 4}), fig_gamma);
    ASSERT_EQ(as_set(points_in_arc(inst, fig_gamma)), (std::set<std::size_t>{0, 1, 3, 4}));
    ASSERT_TRUE(at_most_one_bounding(inst, {0, 1, 2, 3, 4, 5, 6, 7, 8}));

    const auto rep = repartition_nine(inst, fig_b, fig_u1, fig_u2, fig_gamma);
    const std::array<Triple, 3> out{rep.bounding, rep.unbounding[0], rep.unbounding[1]};
    EXPECT_TRUE(admissible(inst, out, fig_gamma, fig_b));
    EXPECT_EQ(as_set(middle_points_of(inst, out)), (std::set<std::size_t>{0, 1}));
}

TEST(RepartitionNine, FigureFourOnePointOfBInGamma) {
    const auto inst = figure4();
    ASSERT_TRUE(classify(inst, fig_b).bounding);
    ASSERT_EQ(classify(inst, fig_u1), (TripleClass{false, 0}));
    ASSERT_EQ(classify(inst, fig_u2), (TripleClass{false, 0}));
    ASSERT_EQ(as_set(points_in_arc(inst, fig_gamma)), (std::set<std::size_t>{0, 3, 4}));
    // The drawn coordinates admit a colorful partition with two bounding
    // triples, so they illustrate the case without meeting the global
    // at-most-one hypothesis. The search does not rely on it.
    EXPECT_FALSE(at_most_one_bounding(inst, {0, 1, 2, 3, 4, 5, 6, 7, 8}));

    const auto rep = repartition_nine(inst, fig_b, fig_u1, fig_u2, fig_gamma);
    const std::array<Triple, 3> out{rep.bounding, rep.unbounding[0], rep.unbounding[1]};
    EXPECT_TRUE(admissible(inst, out, fig_gamma, fig_b));
    EXPECT_EQ(as_set(middle_points_of(inst, out)), (std::set<std::size_t>{3, 0}));
}

TEST(RepartitionNine, CaseAnalysisReproducesFigures) {
    const auto f3 = figure3();
    const auto r3 = case_analysis_repartition(f3, fig_b, fig_u1, fig_u2, fig_gamma);
    ASSERT_TRUE(r3);
    EXPECT_TRUE(admissible(f3, *r3, fig_gamma, fig_b));
    EXPECT_EQ(as_set(middle_points_of(f3, *r3)), (std::set<std::size_t>{0, 1}));

    const auto f4 = figure4();
    const auto r4 = case_analysis_repartition(f4, fig_b, fig_u1, fig_u2, fig_gamma);
    ASSERT_TRUE(r4);
    EXPECT_TRUE(admissible(f4, *r4, fig_gamma, fig_b));
}

TEST(RepartitionNine, PreconditionsChecked) {
    const auto inst = figure3();
    EXPECT_THROW(repartition_nine(inst, fig_u1, fig_b, fig_u2, fig_gamma), ContractViolation);
    EXPECT_THROW(repartition_nine(inst, fig_b, fig_u1, fig_u2, GammaArc{4, 3}), ContractViolation);
}

TEST(RepartitionNine, SolverRoundsAgreeWithCaseAnalysis) {
    std::mt19937_64 rng(36);
    std::size_t rounds = 0, two_case = 0, one_case = 0;
    for (int trial = 0; trial < 400 && rounds < 150; ++trial) {
        const auto inst = random_instance(rng, 3 + trial % 2);
        std::vector<TraceStep> trace;
        solve_circle(inst, {}, &trace);
        for (const auto& s : trace) {
            ++rounds;
            const auto& [b, u1, u2] = s.replaced;
            std::vector<std::size_t> q(b.begin(), b.end());
            q.insert(q.end(), u1.begin(), u1.end());
            q.insert(q.end(), u2.begin(), u2.end());
            ASSERT_TRUE(at_most_one_bounding(inst, q));

            const auto rep = repartition_nine(inst, b, u1, u2, s.gamma);
            ASSERT_TRUE(admissible(inst, {rep.bounding, rep.unbounding[0], rep.unbounding[1]}, s.gamma, b));

            const auto alt = case_analysis_repartition(inst, b, u1, u2, s.gamma);
            ASSERT_TRUE(alt) << "case analysis found no B'";
            ASSERT_TRUE(admissible(inst, *alt, s.gamma, b));

            std::size_t in_gamma = 0;
            for (auto e : b) in_gamma += in_closed_clockwise_arc(inst.points[e], to_arc(inst, s.gamma)) ? 1 : 0;
            (in_gamma == 2 ? two_case : one_case)++;
        }
    }
    EXPECT_GE(rounds, 20u);
    RecordProperty("rounds", int(rounds));
    RecordProperty("two_point_rounds", int(two_case));
    RecordProperty("one_point_rounds", int(one_case));
}

TEST(SolveCircle, SingleTriple) {
    const auto inst = with_colors({cp(3, 1), cp(-1, 2), cp(2, -5)}, {1, 0, 2});
    const auto ap = solve_circle(inst);
    ASSERT_EQ(ap.partition.triples.size(), 1u);
    EXPECT_EQ(canonical(ap.partition).triples[0], (Triple{0, 1, 2}));
    EXPECT_TRUE(is_consecutive(ap, inst));
}

TEST(SolveCircle, FigureTwoInstance) {
    const auto inst = figure2();
    std::vector<TraceStep> trace;
    const auto ap = solve_circle(inst, {}, &trace);
    EXPECT_TRUE(is_consecutive(ap, inst));
    EXPECT_TRUE(oracle::contains(oracle::oracle_solve(inst), ap.partition));
}

TEST(SolveCircle, RandomInstancesAreConsecutiveAndShrinkStrictly) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t k = 2 + trial % 4;
        const auto inst = random_instance(rng, k);
        std::vector<TraceStep> trace;
        const auto ap = solve_circle(inst, {}, &trace);
        ASSERT_TRUE(is_partition_of(ap.partition, inst.size()));
        ASSERT_TRUE(is_colorful(ap.partition, inst.coloring));
        ASSERT_TRUE(is_consecutive(ap, inst));
        ASSERT_LE(trace.size(), 3 * k);
        for (const auto& s : trace) ASSERT_LT(s.gamma_points_after, s.gamma_points_before);
        if (k <= 3) {
            ASSERT_TRUE(oracle::contains(oracle::oracle_solve(inst), ap.partition));
        }
    }
}

TEST(SolveCircle, IsDeterministic) {
    std::mt19937_64 rng(38);
    const auto inst = random_instance(rng, 4);
    std::vector<TraceStep> t1, t2;
    const auto a = solve_circle(inst, {}, &t1);
    const auto b = solve_circle(inst, {}, &t2);
    EXPECT_EQ(a.partition, b.partition);
    ASSERT_EQ(t1.size(), t2.size());
    for (std::size_t i = 0; i < t1.size(); ++i) EXPECT_EQ(io::format_trace_step(t1[i]), io::format_trace_step(t2[i]));
}
