#pragma once

// Plain-text instance files. One directive per line, '#' starts a comment:
//
//   kind lines2d            # lines2d | circle | planes3d
//   k 2
//   colors red blue green   # three names (four for planes3d)
//   hint 1/3 -2             # optional, lines2d only: point inside the witness cell
//   line 1 0 3/2 red        # a b c color      (a*x + b*y = c)
//   point 1 -1 blue         # dx dy color      (circle direction)
//   plane 1/3 2/3 2/3 1 c1  # a b c d color    (a*x + b*y + c*z = d)
//
// Coefficients are exact rationals "num" or "num/den"; decimals are rejected.

#include "tverberg/circle_solver.hpp"
#include "tverberg/dual_lines.hpp"
#include "tverberg/errors.hpp"
#include "tverberg/rational.hpp"
#include "tverberg/verify3d.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tverberg::io {

enum class Kind { lines2d, circle, planes3d };

inline std::string_view kind_name(Kind k) {
    switch (k) {
        case Kind::lines2d: return "lines2d";
        case Kind::circle: return "circle";
        case Kind::planes3d: return "planes3d";
    }
    return "?";
}

inline std::optional<Kind> parse_kind(std::string_view s) {
    if (s == "lines2d") return Kind::lines2d;
    if (s == "circle") return Kind::circle;
    if (s == "planes3d") return Kind::planes3d;
    return std::nullopt;
}

inline std::string_view record_keyword(Kind k) {
    switch (k) {
        case Kind::lines2d: return "line";
        case Kind::circle: return "point";
        case Kind::planes3d: return "plane";
    }
    return "?";
}

inline std::size_t coefficient_count(Kind k) { return k == Kind::lines2d ? 3 : (k == Kind::circle ? 2 : 4); }
inline std::size_t color_count(Kind k) { return k == Kind::planes3d ? 4 : 3; }

struct Record {
    std::vector<Rat> coeffs;
    std::string color;
    int line = 0;  // source line, 0 when built in memory

    bool operator==(const Record& o) const { return coeffs == o.coeffs && color == o.color; }
};

struct InstanceFile {
    Kind kind = Kind::circle;
    std::size_t k = 0;
    std::vector<std::string> colors;
    std::optional<std::vector<Rat>> hint;
    std::vector<Record> records;

    bool operator==(const InstanceFile& o) const {
        return kind == o.kind && k == o.k && colors == o.colors && hint == o.hint && records == o.records;
    }
};

namespace detail {

struct Token {
    std::string_view text;
    int column;
};

inline std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size() || line[i] == '#') break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
        out.push_back({line.substr(start, i - start), int(start) + 1});
    }
    return out;
}

inline Rat rat_token(const Token& t, int line) {
    auto r = parse_rat(t.text);
    if (!r) throw ParseError("expected a rational \"num\" or \"num/den\", got \"" + std::string(t.text) + "\"", line, t.column);
    return *r;
}

}  // namespace detail

/// Syntax-level read; semantic checks happen in parse_instance.
inline InstanceFile read_instance_file(std::string_view text) {
    InstanceFile f;
    bool have_kind = false, have_k = false, have_colors = false;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        const auto toks = detail::tokenize(raw);
        if (toks.empty()) continue;
        const auto& head = toks.front();
        auto expect_args = [&](std::size_t n) {
            if (toks.size() != n + 1)
                throw ParseError("\"" + std::string(head.text) + "\" takes " + std::to_string(n) + " argument(s), got " +
                                     std::to_string(toks.size() - 1),
                                 lineno, head.column);
        };
        auto once = [&](bool& flag) {
            if (flag) throw ParseError("duplicate \"" + std::string(head.text) + "\"", lineno, head.column);
            flag = true;
        };
        if (head.text == "kind") {
            once(have_kind);
            expect_args(1);
            auto k = parse_kind(toks[1].text);
            if (!k) throw ParseError("unknown kind \"" + std::string(toks[1].text) + "\"", lineno, toks[1].column);
            f.kind = *k;
        } else if (head.text == "k") {
            once(have_k);
            expect_args(1);
            const auto r = detail::rat_token(toks[1], lineno);
            if (r.get_den() != 1 || sign(r) <= 0 || !r.get_num().fits_ulong_p())
                throw ParseError("k must be a positive integer", lineno, toks[1].column);
            f.k = r.get_num().get_ui();
        } else if (head.text == "colors") {
            once(have_colors);
            if (toks.size() < 2) throw ParseError("\"colors\" needs names", lineno, head.column);
            for (std::size_t i = 1; i < toks.size(); ++i) {
                std::string name(toks[i].text);
                for (const auto& c : f.colors)
                    if (c == name) throw ParseError("duplicate color name \"" + name + "\"", lineno, toks[i].column);
                f.colors.push_back(std::move(name));
            }
        } else if (head.text == "hint") {
            if (f.hint) throw ParseError("duplicate \"hint\"", lineno, head.column);
            expect_args(2);
            f.hint = std::vector<Rat>{detail::rat_token(toks[1], lineno), detail::rat_token(toks[2], lineno)};
        } else if (head.text == "line" || head.text == "point" || head.text == "plane") {
            if (!have_kind) throw ParseError("record before \"kind\"", lineno, head.column);
            if (head.text != record_keyword(f.kind))
                throw ParseError("\"" + std::string(head.text) + "\" record in a " + std::string(kind_name(f.kind)) + " file",
                                 lineno, head.column);
            const std::size_t n = coefficient_count(f.kind);
            expect_args(n + 1);
            Record r;
            r.line = lineno;
            for (std::size_t i = 0; i < n; ++i) r.coeffs.push_back(detail::rat_token(toks[1 + i], lineno));
            r.color = std::string(toks[n + 1].text);
            f.records.push_back(std::move(r));
        } else {
            throw ParseError("unknown directive \"" + std::string(head.text) + "\"", lineno, head.column);
        }
    }
    if (!have_kind) throw ParseError("missing \"kind\"", lineno, 1);
    if (!have_k) throw ParseError("missing \"k\"", lineno, 1);
    if (!have_colors) throw ParseError("missing \"colors\"", lineno, 1);
    return f;
}

inline std::string write_instance_file(const InstanceFile& f) {
    std::ostringstream os;
    os << "kind " << kind_name(f.kind) << "\n";
    os << "k " << f.k << "\n";
    os << "colors";
    for (const auto& c : f.colors) os << " " << c;
    os << "\n";
    if (f.hint) os << "hint " << to_string((*f.hint)[0]) << " " << to_string((*f.hint)[1]) << "\n";
    for (const auto& r : f.records) {
        os << record_keyword(f.kind);
        for (const auto& c : r.coeffs) os << " " << to_string(c);
        os << " " << r.color << "\n";
    }
    return os.str();
}

struct LineInput {
    LineInstance instance;
    std::optional<Point2> hint;
};

using ParsedInstance = std::variant<LineInput, CircleInstance, space::PlaneSet>;

namespace detail {

inline std::string where(const Record& r, std::size_t index) {
    return "record " + std::to_string(index + 1) + (r.line ? " (line " + std::to_string(r.line) + ")" : "");
}

}  // namespace detail

/// Full parse with every geometric validation run eagerly.
inline ParsedInstance to_instance(const InstanceFile& f) {
    if (f.colors.size() != color_count(f.kind))
        throw ValidationError(std::string(kind_name(f.kind)) + " needs " + std::to_string(color_count(f.kind)) +
                              " color names, got " + std::to_string(f.colors.size()));
    const std::size_t expected = f.kind == Kind::planes3d ? 8 : 3 * f.k;
    if (f.kind == Kind::planes3d && f.k != 2) throw ValidationError("planes3d requires k 2");
    if (f.records.size() != expected)
        throw ValidationError("count mismatch: k = " + std::to_string(f.k) + " needs " + std::to_string(expected) +
                              " records, got " + std::to_string(f.records.size()));
    if (f.hint && f.kind != Kind::lines2d) throw ValidationError("hint is only valid for lines2d");

    std::vector<int> color_ids;
    for (std::size_t i = 0; i < f.records.size(); ++i) {
        const auto& r = f.records[i];
        auto it = std::find(f.colors.begin(), f.colors.end(), r.color);
        if (it == f.colors.end()) throw ValidationError(detail::where(r, i) + ": undeclared color \"" + r.color + "\"");
        color_ids.push_back(int(it - f.colors.begin()));
    }

    switch (f.kind) {
        case Kind::circle: {
            std::vector<CirclePoint> pts;
            for (std::size_t i = 0; i < f.records.size(); ++i) {
                const auto& c = f.records[i].coeffs;
                if (sign(c[0]) == 0 && sign(c[1]) == 0)
                    throw ValidationError(detail::where(f.records[i], i) + ": zero direction");
                pts.emplace_back(c[0], c[1]);
            }
            for (std::size_t i = 0; i < pts.size(); ++i)
                for (std::size_t j = i + 1; j < pts.size(); ++j)
                    if (collinear_directions(pts[i], pts[j]))
                        throw ValidationError(std::string(antipodal(pts[i], pts[j]) ? "antipodal pair: " : "equal points: ") +
                                              detail::where(f.records[i], i) + " and " + detail::where(f.records[j], j));
            return make_circle_instance(std::move(pts), make_coloring(std::move(color_ids)));
        }
        case Kind::lines2d: {
            std::vector<Line2> lines;
            for (std::size_t i = 0; i < f.records.size(); ++i) {
                const auto& c = f.records[i].coeffs;
                if (sign(c[0]) == 0 && sign(c[1]) == 0)
                    throw ValidationError(detail::where(f.records[i], i) + ": line with zero normal");
                lines.emplace_back(c[0], c[1], c[2]);
            }
            if (auto rep = validate_general_position(lines); !rep.ok()) throw ValidationError(rep.message());
            LineInput in{LineInstance{std::move(lines), make_coloring(std::move(color_ids))}, std::nullopt};
            if (f.hint) in.hint = Point2{(*f.hint)[0], (*f.hint)[1]};
            return in;
        }
        case Kind::planes3d: {
            space::PlaneSet s;
            std::array<int, 4> counts{};
            for (std::size_t i = 0; i < f.records.size(); ++i) {
                const auto& c = f.records[i].coeffs;
                if (sign(c[0]) == 0 && sign(c[1]) == 0 && sign(c[2]) == 0)
                    throw ValidationError(detail::where(f.records[i], i) + ": plane with zero normal");
                if (sign(c[3]) == 0) throw ValidationError(detail::where(f.records[i], i) + ": plane through the origin");
                s.planes.push_back(space::Plane3{c[0], c[1], c[2], c[3]});
                s.color[i] = color_ids[i];
                ++counts[color_ids[i]];
            }
            for (int c = 0; c < 4; ++c)
                if (counts[c] != 2) throw ValidationError("color \"" + f.colors[c] + "\" must have exactly 2 planes");
            std::vector<std::size_t> all{0, 1, 2, 3, 4, 5, 6, 7};
            try {
                for (std::size_t a = 0; a < 8; ++a)
                    for (std::size_t b = a + 1; b < 8; ++b)
                        for (std::size_t c = b + 1; c < 8; ++c)
                            for (std::size_t d = c + 1; d < 8; ++d) {
                                const std::array<std::size_t, 4> ids{a, b, c, d};
                                space::require_general_position(s.planes, ids);
                            }
            } catch (const GeneralPositionViolation& e) {
                throw ValidationError(e.what());
            }
            return s;
        }
    }
    throw ValidationError("unknown kind");
}

inline ParsedInstance parse_instance(std::string_view text) { return to_instance(read_instance_file(text)); }

inline std::vector<std::string> default_color_names(Kind k) {
    if (k == Kind::planes3d) return {"c1", "c2", "c3", "c4"};
    return {"red", "blue", "green"};
}

inline InstanceFile to_file(const CircleInstance& inst, std::vector<std::string> names = default_color_names(Kind::circle)) {
    InstanceFile f{Kind::circle, inst.k(), std::move(names), std::nullopt, {}};
    for (std::size_t i = 0; i < inst.size(); ++i)
        f.records.push_back(Record{{inst.points[i].dx, inst.points[i].dy}, f.colors[inst.coloring[i]]});
    return f;
}

inline InstanceFile to_file(const LineInstance& inst, std::optional<Point2> hint = std::nullopt,
                            std::vector<std::string> names = default_color_names(Kind::lines2d)) {
    InstanceFile f{Kind::lines2d, inst.k(), std::move(names), std::nullopt, {}};
    if (hint) f.hint = std::vector<Rat>{hint->x, hint->y};
    for (std::size_t i = 0; i < inst.lines.size(); ++i) {
        const auto& l = inst.lines[i];
        f.records.push_back(Record{{l.a, l.b, l.c}, f.colors[inst.coloring[i]]});
    }
    return f;
}

inline InstanceFile to_file(const space::PlaneSet& s, std::vector<std::string> names = default_color_names(Kind::planes3d)) {
    InstanceFile f{Kind::planes3d, 2, std::move(names), std::nullopt, {}};
    for (std::size_t i = 0; i < s.planes.size(); ++i) {
        const auto& p = s.planes[i];
        f.records.push_back(Record{{p.a, p.b, p.c, p.d}, f.colors[s.color[i]]});
    }
    return f;
}

}  // namespace tverberg::io
