// Command-line front end. Exit codes: 0 success, 2 validation or parse
// failure, 3 search cap exceeded, 4 verifier mismatch, 1 anything else.

#include "tverberg/tverberg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace tverberg;

constexpr int exit_ok = 0;
constexpr int exit_invalid = 2;
constexpr int exit_cap = 3;
constexpr int exit_mismatch = 4;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path);
    out << text;
}

std::optional<Point2> parse_hint(const std::string& s) {
    if (s.empty()) return std::nullopt;
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw ValidationError("--hint expects x,y");
    auto x = parse_rat(std::string_view(s).substr(0, comma));
    auto y = parse_rat(std::string_view(s).substr(comma + 1));
    if (!x || !y) throw ValidationError("--hint coordinates must be rationals num/den");
    return Point2{*x, *y};
}

std::string triple_text(const Triple& t) {
    return "{" + std::to_string(t[0] + 1) + "," + std::to_string(t[1] + 1) + "," + std::to_string(t[2] + 1) + "}";
}

void print_trace(const std::vector<TraceStep>& trace) {
    for (const auto& s : trace) std::cout << io::format_trace_step(s) << "\n";
}

template <class T>
T expect_kind(io::ParsedInstance&& parsed, const char* want) {
    if (auto* v = std::get_if<T>(&parsed)) return std::move(*v);
    throw ValidationError(std::string("expected a ") + want + " instance file");
}

struct Common {
    std::string file;
    std::size_t cap = default_search_cap;
    std::string hint;
    std::string svg_out;
    bool trace = false;
};

void print_circle_solution(const CircleInstance& inst, const AnnotatedPartition& ap) {
    for (std::size_t t = 0; t < ap.partition.triples.size(); ++t) {
        const auto& tr = ap.partition.triples[t];
        std::cout << "triple " << t << " " << triple_text(tr);
        if (ap.verdicts[t].bounding)
            std::cout << " bounding\n";
        else
            std::cout << " unbounding middle=" << tr[ap.verdicts[t].middle] + 1 << "\n";
    }
    if (ap.gamma) {
        std::cout << "gamma " << ap.gamma->from + 1 << " -> " << ap.gamma->to + 1 << " points";
        for (auto p : points_in_arc(inst, *ap.gamma)) std::cout << " " << p + 1;
        std::cout << "\n";
    } else if (const auto mids = ap.middle_points(); mids.size() == 1) {
        std::cout << "gamma " << mids[0] + 1 << " -> " << mids[0] + 1 << " points " << mids[0] + 1 << "\n";
    } else {
        std::cout << "gamma none\n";
    }
    std::cout << "consecutive " << (is_consecutive(ap, inst) ? "yes" : "no") << "\n";
}

int run_solve_circle(const Common& c) {
    auto inst = expect_kind<CircleInstance>(io::parse_instance(read_file(c.file)), "circle");
    std::vector<TraceStep> trace;
    const auto ap = solve_circle(inst, SolveOptions{c.cap}, &trace);
    if (c.trace) print_trace(trace);
    print_circle_solution(inst, ap);
    if (!c.svg_out.empty()) write_output(c.svg_out, io::render_svg(inst, ap));
    return exit_ok;
}

LineSolution solve_line_file(const Common& c, LineInstance& inst, std::vector<TraceStep>& trace) {
    auto in = expect_kind<io::LineInput>(io::parse_instance(read_file(c.file)), "lines2d");
    inst = std::move(in.instance);
    LineSolveOptions opts{c.cap, in.hint};
    if (auto h = parse_hint(c.hint)) opts.hint = h;
    return solve_lines(inst, opts, &trace);
}

int run_solve_lines(const Common& c) {
    LineInstance inst;
    std::vector<TraceStep> trace;
    const auto sol = solve_line_file(c, inst, trace);
    if (c.trace) print_trace(trace);
    std::cout << "center " << to_string(sol.center.x) << " " << to_string(sol.center.y) << "\n";
    for (std::size_t t = 0; t < sol.partition.triples.size(); ++t)
        std::cout << "triple " << t << " " << triple_text(sol.partition.triples[t]) << "\n";
    for (std::size_t i = 0; i < sol.halfplanes.size(); ++i) {
        const auto& h = sol.halfplanes[i];
        std::cout << "halfplane " << i + 1 << " " << (h.side > 0 ? "+" : "-") << " "
                  << (sol.away_from_center[i] ? "away" : "toward") << "\n";
    }
    std::cout << "witness " << to_string(sol.witness.x) << " " << to_string(sol.witness.y) << "\n";
    if (!c.svg_out.empty()) write_output(c.svg_out, io::render_svg(inst, sol));
    return exit_ok;
}

int run_render(const Common& c) {
    const auto parsed = io::parse_instance(read_file(c.file));
    std::string svg;
    if (std::holds_alternative<CircleInstance>(parsed)) {
        const auto& inst = std::get<CircleInstance>(parsed);
        svg = io::render_svg(inst, solve_circle(inst, SolveOptions{c.cap}));
    } else if (std::holds_alternative<io::LineInput>(parsed)) {
        LineInstance inst;
        std::vector<TraceStep> trace;
        const auto sol = solve_line_file(c, inst, trace);
        svg = io::render_svg(inst, sol);
    } else {
        throw ValidationError("render supports lines2d and circle files");
    }
    write_output(c.svg_out, svg);
    return exit_ok;
}

int run_oracle(const Common& c) {
    auto inst = expect_kind<CircleInstance>(io::parse_instance(read_file(c.file)), "circle");
    const auto list = oracle::oracle_solve(inst);
    for (const auto& cand : list) {
        std::cout << "partition";
        for (const auto& t : cand.partition.triples) std::cout << " " << triple_text(t);
        std::cout << "\n";
    }
    std::cout << "count " << list.size() << "\n";
    return exit_ok;
}

int run_verify_figure1() {
    const auto rep = counterexamples::verify_figure1();
    std::cout << "general position: " << (rep.general_position ? "yes" : "no") << "\n";
    std::cout << "convex position:  " << (rep.convex_position ? "yes" : "no") << "\n";
    for (const auto& s : rep.splits) {
        std::cout << "l" << s.partition.triples[0][0] + 1 << "l" << s.partition.triples[0][1] + 1 << "l"
                  << s.partition.triples[0][2] + 1 << " | l" << s.partition.triples[1][0] + 1 << "l"
                  << s.partition.triples[1][1] + 1 << "l" << s.partition.triples[1][2] + 1;
        if (s.common)
            std::cout << "  intersect at (" << to_string(s.common->x) << ", " << to_string(s.common->y) << ")  FAIL\n";
        else
            std::cout << "  disjoint  PASS\n";
    }
    std::cout << (rep.passed() ? "PASS" : "FAIL") << "\n";
    return rep.passed() ? exit_ok : exit_mismatch;
}

int run_verify_octahedron(int max_t) {
    bool ok = true;
    for (int t = 1; t <= max_t; ++t) {
        const auto cover = counterexamples::octahedron_cover_search(t, max_t);
        const bool expect_feasible = t % 2 == 0;
        std::cout << "t=" << t << " " << (cover ? "feasible" : "infeasible");
        if (cover) {
            std::cout << " facets";
            for (int f = 0; f < 8; ++f)
                for (int m = 0; m < cover->multiplicity[f]; ++m) {
                    std::cout << " (";
                    for (int b = 0; b < 3; ++b) std::cout << ((f >> b) & 1 ? '-' : '+');
                    std::cout << ")";
                }
        }
        const bool row_ok = cover.has_value() == expect_feasible;
        ok = ok && row_ok;
        std::cout << "  " << (row_ok ? "PASS" : "FAIL") << "\n";
    }
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? exit_ok : exit_mismatch;
}

std::string quad_text(const std::size_t* p) {
    std::string s = "{";
    for (int i = 0; i < 4; ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "}";
}

int run_verify_3d(const std::string& file) {
    if (!file.empty()) {
        auto set = expect_kind<space::PlaneSet>(io::parse_instance(read_file(file)), "planes3d");
        bool all = true;
        for (const auto& r : space::analyze_splits(set)) {
            std::cout << quad_text(r.split.data()) << " " << quad_text(r.split.data() + 4) << "  "
                      << space::format_signs(r.sum) << "  " << (r.disjoint ? "disjoint" : "intersecting") << "\n";
            all = all && r.disjoint;
        }
        std::cout << (all ? "every colorful split is disjoint" : "some colorful split intersects") << "\n";
        return exit_ok;
    }
    const auto conv = space::verify_convex_position_3d();
    std::cout << "convex position: " << conv.message << "\n";
    const auto rep = space::verify_table();
    std::size_t passed = 0;
    for (const auto& r : rep.rows) {
        passed += r.passed() ? 1 : 0;
        std::cout << quad_text(r.row.partition.data()) << " " << quad_text(r.row.partition.data() + 4) << "  "
                  << space::format_signs(r.computed_sum) << "  {";
        for (int i = 0; i < 4; ++i) std::cout << (i ? "," : "") << r.row.printed_quadruple[i];
        std::cout << "}  " << (r.passed() ? "PASS" : "FAIL") << "\n";
    }
    std::cout << "rows passed: " << passed << "/" << rep.rows.size() << "\n";
    std::cout << "covers every colorful split: " << (rep.covers_all_partitions ? "yes" : "no") << "\n";
    const bool ok = rep.passed() && conv.ok;
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? exit_ok : exit_mismatch;
}

int run_verify_nonconvex() {
    const auto rep = counterexamples::verify_nonconvex_example();
    std::cout << "general position: " << (rep.general_position ? "yes" : "no") << "\n";
    std::cout << "convex position:  " << (rep.convex_position ? "yes" : "no") << "\n";
    for (const auto& v : rep.colorings) {
        for (int c = 0; c < 3; ++c)
            std::cout << (c ? " " : "") << "{l" << v.classes[c][0] + 1 << ",l" << v.classes[c][1] + 1 << "}";
        if (v.partition) {
            const auto& p = *v.partition;
            std::cout << "  " << triple_text(p.triples[0]) << " " << triple_text(p.triples[1]) << " meet at ("
                      << to_string(v.common->x) << ", " << to_string(v.common->y) << ")";
        } else {
            std::cout << "  no intersecting split";
        }
        std::cout << "  " << (v.certified ? "PASS" : "FAIL") << "\n";
    }
    std::cout << (rep.passed() ? "PASS" : "FAIL") << "\n";
    return rep.passed() ? exit_ok : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Colorful dual Tverberg partitions for lines in convex position"};
    app.require_subcommand(1);

    Common common;
    auto add_common = [&](CLI::App* sub, bool solver) {
        sub->add_option("file", common.file, "instance file ('-' for stdin)")->required();
        if (!solver) return;
        sub->add_option("--cap", common.cap, "largest k for the minimum-unbounding search");
        sub->add_option("--svg-out", common.svg_out, "write an SVG drawing to this path");
        sub->add_flag("--trace", common.trace, "log every arc-shrinking round");
    };

    auto* solve_lines_cmd = app.add_subcommand("solve-lines", "partition 3k colored lines");
    add_common(solve_lines_cmd, true);
    solve_lines_cmd->add_option("--hint", common.hint, "point x,y inside the witness cell");

    auto* solve_circle_cmd = app.add_subcommand("solve-circle", "partition 3k colored circle points");
    add_common(solve_circle_cmd, true);

    auto* oracle_cmd = app.add_subcommand("oracle", "list every consecutive colorful partition (k <= 4)");
    add_common(oracle_cmd, false);

    auto* render_cmd = app.add_subcommand("render", "solve and draw an instance as SVG");
    render_cmd->add_option("file", common.file, "instance file")->required();
    render_cmd->add_option("--cap", common.cap, "largest k for the minimum-unbounding search");
    render_cmd->add_option("--hint", common.hint, "point x,y inside the witness cell");
    render_cmd->add_option("--svg-out", common.svg_out, "output path (default stdout)");

    app.add_subcommand("verify-figure1", "six lines whose colorful triangle pairs are all disjoint");
    int max_t = counterexamples::default_octahedron_cap;
    auto* oct_cmd = app.add_subcommand("verify-octahedron", "octahedron facet cover parity");
    oct_cmd->add_option("--cap", max_t, "largest t to search");
    std::string planes_file;
    auto* v3_cmd = app.add_subcommand("verify-3d", "eight tangent planes in R^3");
    v3_cmd->add_option("file", planes_file, "optional planes3d file to analyze instead");
    app.add_subcommand("verify-nonconvex", "six lines not in convex position, every coloring");

    std::string gen_kind;
    std::size_t gen_k = 1;
    std::uint64_t seed = 1;
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "write a random instance file");
    gen_cmd->add_option("kind", gen_kind, "lines2d | circle | planes3d")->required();
    gen_cmd->add_option("k", gen_k, "number of triples")->required();
    gen_cmd->add_option("--seed", seed, "random seed");
    gen_cmd->add_option("-o,--out", gen_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_invalid;
    }

    try {
        if (*solve_lines_cmd) return run_solve_lines(common);
        if (*solve_circle_cmd) return run_solve_circle(common);
        if (*oracle_cmd) return run_oracle(common);
        if (*render_cmd) return run_render(common);
        if (app.got_subcommand("verify-figure1")) return run_verify_figure1();
        if (*oct_cmd) return run_verify_octahedron(max_t);
        if (*v3_cmd) return run_verify_3d(planes_file);
        if (app.got_subcommand("verify-nonconvex")) return run_verify_nonconvex();
        if (*gen_cmd) {
            const auto kind = io::parse_kind(gen_kind);
            if (!kind) throw ValidationError("unknown kind " + gen_kind);
            write_output(gen_out, io::write_instance_file(io::generate(*kind, gen_k, seed)));
            return exit_ok;
        }
    } catch (const SearchCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_cap;
    } catch (const ParseError& e) {
        std::cerr << common.file << ":" << e.what() << "\n";
        return exit_invalid;
    } catch (const ValidationError& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return exit_invalid;
    } catch (const GeneralPositionViolation& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return exit_invalid;
    } catch (const NotConvexPosition& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return exit_invalid;
    } catch (const DegenerateError& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
