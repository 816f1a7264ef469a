#pragma once

#include "tverberg/errors.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

namespace tverberg {

using Triple = std::array<std::size_t, 3>;
using ClassSets = std::array<std::vector<std::size_t>, 3>;

/// Three color classes 0, 1, 2 with k elements each, over elements 0..3k-1.
struct Coloring {
    std::vector<int> class_of;
    std::size_t k = 0;

    std::size_t size() const { return class_of.size(); }
    int operator[](std::size_t i) const { return class_of[i]; }

    // Members of each class in increasing index order.
    ClassSets classes() const {
        ClassSets out;
        for (std::size_t i = 0; i < class_of.size(); ++i) out[class_of[i]].push_back(i);
        return out;
    }

    bool operator==(const Coloring&) const = default;
};

inline Coloring make_coloring(std::vector<int> class_of) {
    if (class_of.empty() || class_of.size() % 3 != 0)
        throw ValidationError("coloring needs 3k elements, got " + std::to_string(class_of.size()));
    const std::size_t k = class_of.size() / 3;
    std::array<std::size_t, 3> counts{};
    for (int c : class_of) {
        if (c < 0 || c > 2) throw ValidationError("color index " + std::to_string(c) + " outside 0..2");
        ++counts[c];
    }
    for (int c = 0; c < 3; ++c)
        if (counts[c] != k)
            throw ValidationError("color class " + std::to_string(c + 1) + " has " + std::to_string(counts[c]) +
                                  " elements, expected " + std::to_string(k));
    return Coloring{std::move(class_of), k};
}

struct TriplePartition {
    std::vector<Triple> triples;

    bool operator==(const TriplePartition&) const = default;
};

inline bool is_partition_of(const TriplePartition& p, std::size_t n) {
    if (p.triples.size() * 3 != n) return false;
    std::vector<char> seen(n, 0);
    for (const auto& t : p.triples)
        for (auto e : t) {
            if (e >= n || seen[e]) return false;
            seen[e] = 1;
        }
    return true;
}

inline bool is_colorful(const Triple& t, const Coloring& c) {
    return c[t[0]] != c[t[1]] && c[t[1]] != c[t[2]] && c[t[0]] != c[t[2]];
}

inline bool is_colorful(const TriplePartition& p, const Coloring& c) {
    return std::all_of(p.triples.begin(), p.triples.end(), [&](const Triple& t) { return is_colorful(t, c); });
}

// Order-independent identity of a partition: sorted triples, sorted list.
inline TriplePartition canonical(TriplePartition p) {
    for (auto& t : p.triples) std::sort(t.begin(), t.end());
    std::sort(p.triples.begin(), p.triples.end());
    return p;
}

/// Splits the common ground set of two 3-class partitions into triples that
/// meet every class of both exactly once. Each triple is returned in A-order:
/// element j comes from a[j].
inline TriplePartition transversal_partition(ClassSets a, ClassSets c) {
    const std::size_t k = a[0].size();
    for (int j = 0; j < 3; ++j)
        if (a[j].size() != k || c[j].size() != k)
            throw BadPartition("transversal_partition: class sizes differ");
    auto sorted_union = [](const ClassSets& s) {
        std::vector<std::size_t> u;
        for (const auto& v : s) u.insert(u.end(), v.begin(), v.end());
        std::sort(u.begin(), u.end());
        return u;
    };
    for (auto& v : a) std::sort(v.begin(), v.end());
    for (auto& v : c) std::sort(v.begin(), v.end());
    const auto ua = sorted_union(a);
    if (ua != sorted_union(c) || std::adjacent_find(ua.begin(), ua.end()) != ua.end())
        throw BadPartition("transversal_partition: partitions are not over the same ground set");

    TriplePartition out;
    for (std::size_t round = 0; round < k; ++round) {
        // Intersections A_i ∩ C_j, each sorted ascending.
        std::array<std::array<std::vector<std::size_t>, 3>, 3> meet;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                std::set_intersection(a[i].begin(), a[i].end(), c[j].begin(), c[j].end(),
                                      std::back_inserter(meet[i][j]));
        // Perfect matching of the 3x3 intersection graph; Hall's condition holds
        // by pigeonhole since all classes have equal size.
        std::array<int, 3> perm{0, 1, 2};
        bool found = false;
        do {
            found = !meet[0][perm[0]].empty() && !meet[1][perm[1]].empty() && !meet[2][perm[2]].empty();
        } while (!found && std::next_permutation(perm.begin(), perm.end()));
        if (!found) throw ContractViolation("transversal_partition: no perfect matching");

        Triple t;
        for (int i = 0; i < 3; ++i) {
            t[i] = meet[i][perm[i]].front();
            std::erase(a[i], t[i]);
            std::erase(c[perm[i]], t[i]);
        }
        out.triples.push_back(t);
    }
    return out;
}

/// Visits every partition into colorful triples exactly once, (k!)^2 in total.
/// Triples are in color order and the i-th triple holds the i-th element of
/// class 0. The visitor returns false to stop early.
template <class Visitor>
void for_each_colorful_partition(const Coloring& coloring, Visitor&& visit) {
    const auto cls = coloring.classes();
    const std::size_t k = coloring.k;
    std::vector<std::size_t> p2(k), p3(k);
    std::iota(p2.begin(), p2.end(), 0);
    TriplePartition part;
    part.triples.resize(k);
    do {
        std::iota(p3.begin(), p3.end(), 0);
        do {
            for (std::size_t i = 0; i < k; ++i) part.triples[i] = Triple{cls[0][i], cls[1][p2[i]], cls[2][p3[i]]};
            if (!visit(static_cast<const TriplePartition&>(part))) return;
        } while (std::next_permutation(p3.begin(), p3.end()));
    } while (std::next_permutation(p2.begin(), p2.end()));
}

inline std::vector<TriplePartition> colorful_partitions(const Coloring& coloring) {
    std::vector<TriplePartition> out;
    for_each_colorful_partition(coloring, [&](const TriplePartition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

}  // namespace tverberg
