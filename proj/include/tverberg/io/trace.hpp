#pragma once

// One line per arc-shrinking round:
//   iteration=2 gamma_before=5 gamma_after=3 triples=4,0,2
// Triple positions are 0-based slots of the partition (bounding, then the two
// unbounding triples at gamma's ends).

#include "tverberg/circle_solver.hpp"
#include "tverberg/errors.hpp"

#include <charconv>
#include <string>
#include <string_view>

namespace tverberg::io {

inline std::string format_trace_step(const TraceStep& s) {
    return "iteration=" + std::to_string(s.iteration) + " gamma_before=" + std::to_string(s.gamma_points_before) +
           " gamma_after=" + std::to_string(s.gamma_points_after) + " triples=" + std::to_string(s.triples[0]) + "," +
           std::to_string(s.triples[1]) + "," + std::to_string(s.triples[2]);
}

inline TraceStep parse_trace_step(std::string_view line) {
    TraceStep s;
    auto field = [&](std::string_view key) -> std::string_view {
        const std::string pat = std::string(key) + "=";
        const auto at = line.find(pat);
        if (at == std::string_view::npos || (at > 0 && line[at - 1] != ' '))
            throw ParseError("trace line lacks \"" + std::string(key) + "\"", 1, 1);
        auto rest = line.substr(at + pat.size());
        return rest.substr(0, rest.find(' '));
    };
    auto number = [](std::string_view t) {
        std::size_t v = 0;
        const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc{} || p != t.data() + t.size()) throw ParseError("bad number \"" + std::string(t) + "\"", 1, 1);
        return v;
    };
    s.iteration = number(field("iteration"));
    s.gamma_points_before = number(field("gamma_before"));
    s.gamma_points_after = number(field("gamma_after"));
    auto t = field("triples");
    for (int i = 0; i < 3; ++i) {
        const auto comma = t.find(',');
        if ((i < 2) == (comma == std::string_view::npos)) throw ParseError("triples needs three entries", 1, 1);
        s.triples[i] = number(t.substr(0, comma));
        if (i < 2) t = t.substr(comma + 1);
    }
    return s;
}

}  // namespace tverberg::io
