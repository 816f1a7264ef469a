#pragma once

// Brute-force reference for the circle problem. It reuses only the kernel
// predicates and the partition enumerator; consecutiveness is decided by a
// separate formulation (middle points form one contiguous run of the circular
// order whose span is under a half turn).

#include "tverberg/circle_solver.hpp"

#include <vector>

namespace tverberg::oracle {

inline constexpr std::size_t max_k = 4;

struct Candidate {
    TriplePartition partition;  // canonical form
    std::vector<TripleClass> verdicts;
};

inline bool consecutive_by_runs(const CircleInstance& inst, const std::vector<char>& is_middle) {
    const std::size_t n = inst.size();
    std::size_t count = 0;
    for (char c : is_middle) count += c ? 1 : 0;
    if (count <= 1) return true;

    const auto order = circular_order(inst.points, CutPosition{0});
    // Find the run start: a middle point preceded by a non-middle point.
    std::size_t start = n;
    std::size_t runs = 0;
    for (std::size_t g = 0; g < n; ++g) {
        const bool cur = is_middle[order[g]];
        const bool prev = is_middle[order[(g + n - 1) % n]];
        if (cur && !prev) {
            ++runs;
            start = g;
        }
    }
    if (runs != 1) return false;
    const std::size_t last = (start + count - 1) % n;
    return clockwise_within_half_turn(inst.points[order[start]], inst.points[order[last]]);
}

/// Every colorful partition whose middle points are consecutive.
inline std::vector<Candidate> oracle_solve(const CircleInstance& inst) {
    if (inst.k() > max_k)
        throw SearchCapExceeded("oracle_solve: k = " + std::to_string(inst.k()) + " exceeds the oracle cap " +
                                std::to_string(max_k));
    std::vector<Candidate> out;
    for_each_colorful_partition(inst.coloring, [&](const TriplePartition& p) {
        std::vector<TripleClass> verdicts;
        std::vector<char> is_middle(inst.size(), 0);
        for (const auto& t : p.triples) {
            const auto v = classify_triple(inst.points[t[0]], inst.points[t[1]], inst.points[t[2]]);
            verdicts.push_back(v);
            if (!v.bounding) is_middle[t[v.middle]] = 1;
        }
        if (consecutive_by_runs(inst, is_middle)) out.push_back(Candidate{canonical(p), std::move(verdicts)});
        return true;
    });
    return out;
}

inline bool contains(const std::vector<Candidate>& list, const TriplePartition& p) {
    const auto c = canonical(p);
    for (const auto& cand : list)
        if (cand.partition == c) return true;
    return false;
}

}  // namespace tverberg::oracle
