#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <fstream>
#include <optional>
#include <ostream>

#include "fewears/compositions.hpp"
#include "fewears/counting.hpp"
#include "fewears/disjointness.hpp"
#include "fewears/errors.hpp"
#include "fewears/svg.hpp"
#include "fewears/table.hpp"
#include "fewears/triangulation.hpp"
#include "fewears/verify.hpp"

namespace fewears::cli {

namespace {

// Which triangulation a command operates on; exactly one source must be given.
struct ShapeArgs {
    std::string inline_spec;
    bool use_arrow = false;
    bool use_snake = false;
    std::string type;
    int n = 0;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--t", inline_spec, "triangulation as n:a-b,c-d,...");
        cmd.add_flag("--arrow", use_arrow, "fan at vertex 1");
        cmd.add_flag("--snake", use_snake, "zig-zag triangulation 0-2, 2-(n-1), ...");
        cmd.add_option("--type", type, "3-eared representative of type p,q,r");
        cmd.add_option("--n", n, "polygon size for --arrow, --snake and --type");
    }

    Triangulation build() const {
        const int sources = int(!inline_spec.empty()) + int(use_arrow) + int(use_snake) + int(!type.empty());
        if (sources != 1) throw InputError("give exactly one of --t, --arrow, --snake, --type");
        if (!inline_spec.empty()) {
            const Triangulation t = parse_triangulation(inline_spec);
            if (n != 0 && n != t.n()) throw InputError("--n disagrees with the size in --t");
            return t;
        }
        if (n == 0) throw InputError("--n is required with --arrow, --snake or --type");
        if (use_arrow) return arrow(n);
        if (use_snake) return snake(n);
        return three_ear_rep(n, parse_ear_type(type));
    }
};

std::string ear_filter_name(const std::optional<int>& ears) { return ears ? std::to_string(*ears) : "all"; }

std::optional<int> parse_ear_filter(const std::string& text) {
    if (text == "all") return std::nullopt;
    try {
        std::size_t used = 0;
        const int k = std::stoi(text, &used);
        if (used == text.size() && k >= 0) return k;
    } catch (const std::exception&) {
    }
    throw InputError("--ears must be a number or 'all', got '" + text + "'");
}

// ---------------------------------------------------------------------------

int cmd_enumerate(int n, const std::optional<int>& ears, bool count_only, const std::string& format_name,
                  std::ostream& out) {
    const TableFormat format = parse_table_format(format_name);
    if (n < 3) throw InputError("--n must be >= 3");
    if (ears && n < 4) throw InputError("--ears needs n >= 4");
    Table table;
    std::size_t count = 0;
    table.columns = {count_only ? "count" : "triangulation"};
    for_each_triangulation(n, [&](const Triangulation& t) {
        if (ears && ear_count(t) != *ears) return;
        ++count;
        if (!count_only) table.rows.push_back({format_triangulation(t)});
    });
    if (count_only) table.rows.push_back({std::to_string(count)});
    out << format_table(table, format);
    return kOk;
}

int cmd_symmetry(const std::string& range_text, const std::string& ears_text, const std::string& method,
                 const std::string& format_name, std::ostream& out, std::ostream& err) {
    const TableFormat format = parse_table_format(format_name);
    const auto [lo, hi] = parse_range(range_text);
    const std::optional<int> ears = parse_ear_filter(ears_text);
    if (method != "closed" && method != "orbit" && method != "both" && method != "auto") {
        throw InputError("--method must be closed|orbit|both|auto");
    }
    if (lo < 4) throw InputError("symmetry classes need n >= 4");

    auto closed = [&](int n) -> ExactCount {
        if (ears == 2) return symmetry_classes_2ear(n);
        if (ears == 3) return symmetry_classes_3ear(n);
        throw DomainError("no closed form for ears=" + ear_filter_name(ears));
    };
    auto orbit = [&](int n) { return symmetry_classes_orbit(n, ears); };

    int code = kOk;
    Table table;
    table.columns = method == "both" ? std::vector<std::string>{"n", "closed", "orbit"}
                                     : std::vector<std::string>{"n", "classes"};
    for (int n = lo; n <= hi; ++n) {
        std::vector<std::string> row{std::to_string(n)};
        std::optional<ExactCount> c;
        if (method != "orbit") {
            try {
                c = closed(n);
            } catch (const DomainError& e) {
                if (method != "auto") {
                    err << "n=" << n << ": " << e.what() << '\n';
                    code = kUsage;
                }
            }
        }
        if (method == "closed") {
            row.push_back(c ? to_string(*c) : "n/a");
        } else if (method == "orbit") {
            row.push_back(to_string(orbit(n)));
        } else if (method == "auto") {
            if (c) {
                row.push_back(to_string(*c));
            } else {
                row.push_back(to_string(orbit(n)));
                if (ears == 2 || ears == 3) {
                    err << "note: n=" << n << ": closed form does not apply, reporting the orbit count\n";
                }
            }
        } else {
            const ExactCount o = orbit(n);
            row.push_back(c ? to_string(*c) : "n/a");
            row.push_back(to_string(o));
            if (c && *c != o) {
                err << "MISMATCH n=" << n << ": closed " << *c << " vs orbit " << o << '\n';
                code = std::max<int>(code, kVerifyFailed);
            }
        }
        table.rows.push_back(std::move(row));
    }
    out << format_table(table, format);
    return code;
}

int cmd_disjoint(const ShapeArgs& shape, bool all_pairs, const std::string& method, const std::string& format_name,
                 std::ostream& out, std::ostream& err) {
    if (format_name != "text" && format_name != "json") throw InputError("--format must be text|json");
    if (method != "brute" && method != "formula" && method != "both") {
        throw InputError("--method must be brute|formula|both");
    }
    if (all_pairs) {
        if (shape.n < 3) throw InputError("--all-pairs needs --n >= 3");
        const ExactCount total = total_disjoint_pairs(shape.n);
        if (format_name == "json") {
            out << nlohmann::json{{"n", shape.n}, {"ordered_pairs", to_string(total)}}.dump(2) << '\n';
        } else {
            out << total << '\n';
        }
        return kOk;
    }

    const Triangulation t = shape.build();
    std::optional<ExactCount> brute;
    std::optional<ExactCount> formula;
    std::optional<ExactCount> printed;
    std::string type_text;
    if (method != "formula") brute = disj_count(t);
    if (method != "brute") {
        if (t.n() < 4) throw DomainError("no formula for n < 4");
        const int ears = ear_count(t);
        if (ears == 2) {
            formula = disj_2ear_formula(t.n());
        } else if (ears == 3) {
            const EarType type = shape.type.empty() ? three_ear_type(t) : parse_ear_type(shape.type);
            formula = disj_3ear_cases(t.n(), type);
            printed = disj_3ear_printed(t.n(), type);
            type_text = format_ear_type(type);
        } else {
            throw DomainError("no closed form for a " + std::to_string(ears) + "-eared triangulation; use --method brute");
        }
    }

    int code = kOk;
    if (brute && formula && *brute != *formula) {
        err << "MISMATCH brute " << *brute << " vs formula " << *formula << '\n';
        code = kVerifyFailed;
    }
    if (format_name == "json") {
        nlohmann::json j{{"triangulation", format_triangulation(t)}};
        if (brute) j["brute"] = to_string(*brute);
        if (formula) j["formula"] = to_string(*formula);
        if (printed) j["printed_limits"] = to_string(*printed);
        out << j.dump(2) << '\n';
        return code;
    }
    std::string line;
    if (brute) line += to_string(*brute);
    if (formula) line += (line.empty() ? "" : " ") + to_string(*formula);
    out << line << '\n';
    if (printed && formula && *printed != *formula) {
        out << "ERRATUM  pqr-printed  n=" << t.n() << " params=type=" << type_text << " expected=" << *formula
            << " got=" << *printed << '\n';
    }
    return code;
}

int cmd_verify(const VerifyOptions& options, const std::string& format_name, const std::string& json_out,
               std::ostream& out, std::ostream& err) {
    if (format_name != "text" && format_name != "json") throw InputError("--format must be text|json");
    const RunReport report = run_verify(options);
    if (format_name == "json") {
        out << report_to_json(report).dump(2) << '\n';
    } else {
        out << format_report_text(report);
    }
    if (!json_out.empty()) {
        std::ofstream file(json_out);
        if (!file) {
            err << "cannot write " << json_out << '\n';
            return kUsage;
        }
        file << report_to_json(report).dump(2) << '\n';
    }
    return report.exit_code();
}

int cmd_svg(const ShapeArgs& shape, const SvgOptions& options, const std::string& path, std::ostream& out,
            std::ostream& err) {
    const std::string svg = render_svg(shape.build(), options);
    if (path.empty() || path == "-") {
        out << svg;
        return kOk;
    }
    std::ofstream file(path);
    if (!file) {
        err << "cannot write " << path << '\n';
        return kUsage;
    }
    file << svg;
    if (!file.flush()) {
        err << "cannot write " << path << '\n';
        return kUsage;
    }
    return kOk;
}

int cmd_sequence(const std::string& what, const std::string& range_text, const std::string& format,
                 std::ostream& out, std::ostream& err) {
    if (format != "oeis" && format != "text" && format != "csv" && format != "json") {
        throw InputError("--format must be oeis|text|csv|json");
    }
    const auto [lo, hi] = parse_range(range_text);
    std::function<ExactCount(int)> term;
    if (what == "catalan") {
        term = [](int k) { return catalan(k); };
    } else if (what.rfind("hurtado-noy:", 0) == 0) {
        int k = 0;
        try {
            k = std::stoi(what.substr(12));
        } catch (const std::exception&) {
            throw InputError("hurtado-noy needs an ear count, e.g. hurtado-noy:3");
        }
        term = [k](int n) { return hurtado_noy(n, k); };
    } else if (what == "sym2") {
        term = [](int n) { return symmetry_classes_2ear(n); };
    } else if (what == "sym3") {
        term = [](int n) { return symmetry_classes_3ear(n); };
    } else if (what == "disj2") {
        term = [](int n) { return disj_2ear_formula(n); };
    } else if (what == "classes-compositions") {
        term = [](int m) { return count_classes(m, m >= 2 ? ClassCountMethod::Closed : ClassCountMethod::Direct); };
    } else {
        throw InputError("--what must be catalan|hurtado-noy:k|sym2|sym3|disj2|classes-compositions");
    }

    int code = kOk;
    Table table{{"n", what}, {}};
    for (int n = lo; n <= hi; ++n) {
        try {
            table.rows.push_back({std::to_string(n), to_string(term(n))});
        } catch (const std::exception& e) {
            err << "n=" << n << ": " << e.what() << '\n';
            code = kUsage;
        }
    }
    if (format == "oeis") {
        for (const auto& row : table.rows) out << row[1] << '\n';
    } else {
        out << format_table(table, parse_table_format(format));
    }
    return code;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != s.size() || s.empty()) throw InputError("bad range '" + text + "', expected a..b or a");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = to_int(text);
        return {v, v};
    }
    const int lo = to_int(text.substr(0, dots));
    const int hi = to_int(text.substr(dots + 2));
    if (lo > hi) throw InputError("empty range '" + text + "'");
    return {lo, hi};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counts for triangulations of convex polygons with few ears", "fewears"};
    app.require_subcommand(1, 1);

    int n = 0;
    std::string ears_text = "all";
    bool count_only = false;
    std::string format = "text";
    auto* enumerate = app.add_subcommand("enumerate", "list triangulations of the n-gon");
    enumerate->add_option("--n", n, "polygon size")->required();
    enumerate->add_option("--ears", ears_text, "keep only triangulations with this many ears");
    enumerate->add_flag("--count-only", count_only, "print only the number of triangulations");
    enumerate->add_option("--format", format, "text|csv|json");

    std::string range_text;
    std::string method = "auto";
    auto* symmetry = app.add_subcommand("symmetry", "count dihedral symmetry classes");
    symmetry->add_option("--n", range_text, "polygon size or range a..b")->required();
    symmetry->add_option("--ears", ears_text, "2, 3, any k, or all");
    symmetry->add_option("--method", method, "closed|orbit|both|auto");
    symmetry->add_option("--format", format, "text|csv|json");

    ShapeArgs shape;
    bool all_pairs = false;
    std::string disj_method = "both";
    auto* disjoint = app.add_subcommand("disjoint", "count triangulations disjoint from a given one");
    shape.add_to(*disjoint);
    disjoint->add_flag("--all-pairs", all_pairs, "ordered disjoint pairs over all triangulations of the n-gon");
    disjoint->add_option("--method", disj_method, "brute|formula|both");
    disjoint->add_option("--format", format, "text|json");

    VerifyOptions verify_options;
    int max_n = 0;
    std::string json_out;
    auto* verify = app.add_subcommand("verify", "run the identity suites");
    verify->add_option("--max-n", max_n, "largest polygon size (clamped per suite)");
    verify->add_option("--suite", verify_options.suites, "suite name; repeatable")->take_all();
    verify->add_option("--threads", verify_options.threads, "worker threads (default FEWEARS_THREADS or all cores)");
    verify->add_flag("--timing", verify_options.timing, "append wall times");
    verify->add_option("--format", format, "text|json");
    verify->add_option("--out", json_out, "also write the JSON report here");
    bool list_suites = false;
    verify->add_flag("--list", list_suites, "list suites and exit");

    SvgOptions svg_options;
    std::string svg_out;
    std::string highlight = "none";
    bool no_labels = false;
    auto* svg = app.add_subcommand("svg", "draw a triangulation as SVG");
    ShapeArgs svg_shape;
    svg_shape.add_to(*svg);
    svg->add_option("--out", svg_out, "output path (default stdout)");
    svg->add_option("--highlight", highlight, "none|ears|internal|both");
    svg->add_option("--radius", svg_options.radius, "polygon radius");
    svg->add_option("--font-size", svg_options.font_size, "label font size");
    svg->add_option("--stroke-width", svg_options.stroke_width, "stroke width");
    svg->add_flag("--no-labels", no_labels, "omit vertex labels");

    std::string what;
    std::string seq_format = "oeis";
    auto* sequence = app.add_subcommand("sequence", "print one count per line over a range");
    sequence->add_option("--what", what, "catalan|hurtado-noy:k|sym2|sym3|disj2|classes-compositions")->required();
    sequence->add_option("--n", range_text, "index or range a..b")->required();
    sequence->add_option("--format", seq_format, "oeis|text|csv|json");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*enumerate) {
            const std::optional<int> ears = parse_ear_filter(ears_text);
            return cmd_enumerate(n, ears, count_only, format, out);
        }
        if (*symmetry) return cmd_symmetry(range_text, ears_text, method, format, out, err);
        if (*disjoint) return cmd_disjoint(shape, all_pairs, disj_method, format, out, err);
        if (*verify) {
            if (list_suites) {
                for (const auto& s : suite_catalog()) out << s.name << "  " << s.description << '\n';
                return kOk;
            }
            if (max_n != 0) verify_options.max_n = max_n;
            return cmd_verify(verify_options, format, json_out, out, err);
        }
        if (*svg) {
            svg_options.highlight = parse_highlight(highlight);
            svg_options.labels = !no_labels;
            return cmd_svg(svg_shape, svg_options, svg_out, out, err);
        }
        if (*sequence) return cmd_sequence(what, range_text, seq_format, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace fewears::cli
