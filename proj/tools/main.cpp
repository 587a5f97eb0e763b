// orthodontia: command-line front end for the polynomial engine.
//
// Exit codes: 0 success, 1 a mathematical check failed, 2 usage error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "orthodontia/diagram.hpp"
#include "orthodontia/families.hpp"
#include "orthodontia/json_io.hpp"
#include "orthodontia/lascoux_basis.hpp"
#include "orthodontia/operators.hpp"
#include "orthodontia/parse_error.hpp"
#include "orthodontia/pipe_dreams.hpp"
#include "orthodontia/sort_order.hpp"
#include "orthodontia/verify.hpp"

#ifndef ORTHODONTIA_VERSION
#define ORTHODONTIA_VERSION "dev"
#endif

namespace {

using namespace orthodontia;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string command_echo(int argc, char** argv) {
    std::string out;
    for (int k = 1; k < argc; ++k) out += (k > 1 ? " " : "") + std::string(argv[k]);
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

json header(const std::string& command) {
    return {{"command", command}, {"version", ORTHODONTIA_VERSION}};
}

std::string sets_string(const std::vector<std::vector<int>>& sets) {
    std::string s = "(";
    for (std::size_t k = 0; k < sets.size(); ++k) {
        s += k ? ", {" : "{";
        for (std::size_t e = 0; e < sets[k].size(); ++e) s += (e ? "," : "") + std::to_string(sets[k][e]);
        s += "}";
    }
    return s + ")";
}

std::string ints_string(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
}

std::string expansion_string(const LascouxExpansion& e) {
    if (e.coeffs.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [alpha, c] : e.coeffs) {
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        if (mag != 1) s += mag.str() + "*";
        s += "L[" + alpha.to_string() + "]";
        first = false;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Lascoux cache persistence

std::optional<std::filesystem::path> cache_file() {
    const char* dir = std::getenv("ORTHODONTIA_CACHE_DIR");
    if (!dir || !*dir) return std::nullopt;
    return std::filesystem::path(dir) / "lascoux.json";
}

// ---------------------------------------------------------------------------
// poly

struct PolyArgs {
    std::string family;
    std::string w;
    std::string alpha;
    std::string diagram;
    std::string input;
    std::string apply;
    int nvars = 0;
    bool latex = false;
    bool as_json = false;
    bool unbarred = false;
    bool unsigned_pd = false;
    bool expand = false;
    std::optional<long long> substitute_y;
    std::optional<int> flip_cap;
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void need(const std::string& value, const char* flag, const std::string& family) {
    if (value.empty()) throw UsageError("family " + family + " needs " + flag);
}

Polynomial family_polynomial(const PolyArgs& a, std::string& index) {
    const std::string& f = a.family;
    if (f == "double-grothendieck" || f == "double-schubert" || f == "grothendieck" || f == "schubert" ||
        f == "pipe-dream-sum" || f == "stable-grothendieck") {
        need(a.w, "--w", f);
        const Permutation w = parse_permutation(a.w);
        index = w.to_string();
        if (f == "double-grothendieck") return double_grothendieck(w);
        if (f == "double-schubert") return double_schubert(w);
        if (f == "grothendieck") return grothendieck(w);
        if (f == "schubert") return schubert(w);
        if (f == "pipe-dream-sum")
            return weight_sum(w, a.unsigned_pd ? PipeDreamSign::unsigned_literal : PipeDreamSign::signed_by_excess);
        return stable_grothendieck(w, a.nvars > 0 ? a.nvars : w.size());
    }
    if (f == "lascoux" || f == "key") {
        need(a.alpha, "--alpha", f);
        const Composition alpha = parse_composition(a.alpha);
        index = alpha.to_string();
        return f == "lascoux" ? lascoux(alpha) : key(alpha);
    }
    if (f == "script-G" || f == "script-S") {
        Diagram d;
        if (!a.diagram.empty())
            d = parse_diagram(a.diagram);
        else if (!a.w.empty())
            d = rothe(parse_permutation(a.w));
        else
            throw UsageError("family " + f + " needs --diagram or --w");
        index = d.to_string();
        if (f == "script-S") return script_S(d);
        return script_G(d, a.unbarred ? InnerOmega::unbarred : InnerOmega::barred);
    }
    if (f == "json") {
        need(a.input, "--input", f);
        index = a.input;
        try {
            return polynomial_from_json(json::parse(read_input(a.input)));
        } catch (const json::exception& e) {
            throw UsageError(std::string("malformed polynomial JSON: ") + e.what());
        }
    }
    throw UsageError("unknown family '" + f + "'");
}

int run_poly(const PolyArgs& a, const std::string& echo) {
    std::string index;
    Polynomial p = family_polynomial(a, index);
    if (!a.apply.empty()) p = apply_word(parse_operator_word(a.apply), p);
    if (a.substitute_y) p = p.substitute_y(*a.substitute_y);
    if (a.flip_cap) p = p.flip(*a.flip_cap);
    std::optional<LascouxExpansion> expansion;
    if (a.expand) {
        if (p.m() != 0) throw UsageError("--expand needs a polynomial free of y; add --substitute-y");
        expansion = lascoux_expand(p);
    }

    if (a.as_json) {
        json out = header(echo);
        out["family"] = a.family;
        out["index"] = index;
        out["polynomial"] = to_json(p);
        if (expansion) {
            out["expansion"] = to_json(*expansion);
            out["d0"] = expansion->baseline_degree;
            out["verdict"] = graded_positive(*expansion).positive ? "positive" : "violation";
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << (a.latex ? p.to_latex() : p.to_string()) << "\n";
        if (expansion) {
            const auto verdict = graded_positive(*expansion);
            std::cout << "lascoux expansion: " << expansion_string(*expansion) << "\n";
            std::cout << "d0 = " << expansion->baseline_degree << ", "
                      << (verdict.positive ? "graded positive" : "graded positivity violated") << "\n";
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// pipedreams

int run_pipedreams(const std::string& w_text, bool count_only, bool emit_json, const std::string& echo) {
    const Permutation w = parse_permutation(w_text);
    const auto dreams = enumerate_pd(w);
    if (emit_json) {
        json out = header(echo);
        out["w"] = w.to_string();
        out["count"] = dreams.size();
        if (!count_only) {
            json list = json::array();
            for (const auto& p : dreams) {
                json crosses = json::array();
                for (auto [r, c] : p.crosses()) crosses.push_back({r, c});
                list.push_back(crosses);
            }
            out["pipe_dreams"] = list;
            out["weight_sum"] = to_json(weight_sum(w));
        }
        std::cout << out.dump() << "\n";
        return kExitOk;
    }
    std::cout << dreams.size() << "\n";
    if (count_only) return kExitOk;
    const int n = w.size();
    for (const auto& p : dreams) {
        std::cout << "\n";
        for (int row = 1; row <= n; ++row) {
            std::string line;
            for (int col = 1; row + col <= n + 1; ++col) line += row + col <= n ? (p.has_cross(row, col) ? '+' : '.') : ' ';
            std::cout << line << "\n";
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// orthodontia

int run_orthodontia(const std::string& diagram_text, const std::string& w_text, bool allow, bool as_json,
                    const std::string& echo) {
    Diagram d;
    if (!diagram_text.empty())
        d = parse_diagram(diagram_text);
    else if (!w_text.empty())
        d = rothe(parse_permutation(w_text));
    else
        throw UsageError("orthodontia needs --diagram or --w");
    std::vector<Diagram> trace;
    OrthodontiaOptions options;
    options.allow_non_percent_avoiding = allow;
    options.trace = &trace;
    const auto seq = orthodontic_sequence(d, options);
    if (as_json) {
        json out = header(echo);
        out["diagram"] = d.to_string();
        out["K"] = seq.K;
        out["i"] = seq.i;
        out["j"] = seq.j;
        out["M"] = seq.M;
        json steps = json::array();
        for (const auto& t : trace) steps.push_back(t.to_string());
        out["trace"] = steps;
        std::cout << out.dump() << "\n";
        return kExitOk;
    }
    std::cout << "diagram " << d.to_string() << "\n";
    std::cout << "K = " << sets_string(seq.K) << "\n";
    std::cout << "i = " << ints_string(seq.i) << "\n";
    std::cout << "j = " << ints_string(seq.j) << "\n";
    std::cout << "M = " << sets_string(seq.M) << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// sortorder

int run_sortorder(const std::string& w_text, const std::string& endpoint_text, bool as_json, const std::string& echo) {
    const Permutation w = parse_permutation(w_text);
    OsEndpoint endpoint;
    if (endpoint_text == "alpha-plus-one")
        endpoint = OsEndpoint::alpha_plus_one;
    else if (endpoint_text == "alpha")
        endpoint = OsEndpoint::alpha;
    else
        throw UsageError("--os-endpoint must be alpha or alpha-plus-one");
    const auto data = primary_column_data(w);
    const Permutation sigma = sigma_of(w);
    const Permutation sorted = sort_of(w);
    const auto covers = os_covers(w, endpoint);
    if (as_json) {
        json out = header(echo);
        out["w"] = w.to_string();
        out["h"] = data.h;
        out["C"] = data.C.rows();
        out["alpha"] = data.alpha;
        out["i1"] = data.i1;
        out["beta"] = data.beta;
        out["sigma"] = sigma.to_string();
        out["w_sort"] = sorted.to_string();
        out["sorted"] = is_sorted(w);
        json preds = json::array();
        for (const auto& p : covers) preds.push_back(p.to_string());
        out["predecessors"] = preds;
        std::cout << out.dump() << "\n";
        return kExitOk;
    }
    std::cout << "w = " << w.to_string() << "\n";
    std::cout << "primary column data: h=" << data.h << " C={";
    const auto rows = data.C.rows();
    for (std::size_t k = 0; k < rows.size(); ++k) std::cout << (k ? "," : "") << rows[k];
    std::cout << "} alpha=" << data.alpha << " i1=" << data.i1 << " beta=" << data.beta << "\n";
    std::cout << "sigma(w) = " << sigma.to_string() << "\n";
    std::cout << "w_sort = " << sorted.to_string() << (is_sorted(w) ? " (sorted)" : "") << "\n";
    std::cout << "predecessors:";
    for (const auto& p : covers) std::cout << " " << p.to_string();
    std::cout << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

int run_verify_cmd(const std::string& suite, int nmax, int workers, bool as_json, const std::string& echo) {
    const auto start = std::chrono::steady_clock::now();
    if (suite == "ambiguity") {
        const auto findings = ambiguity_findings(nmax);
        if (as_json) {
            json out = header(echo);
            json qs = json::array();
            for (const auto& q : findings) {
                json vs = json::array();
                for (const auto& v : q.variants)
                    vs.push_back({{"name", v.name},
                                  {"checked", v.checked},
                                  {"failed", v.failed},
                                  {"first_counterexample", v.first_counterexample ? json(*v.first_counterexample) : json()}});
                qs.push_back({{"title", q.title}, {"criterion", q.criterion}, {"variants", vs}});
            }
            out["questions"] = qs;
            out["wall_time_s"] = seconds_since(start);
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << render_ambiguity_report(findings, nmax);
        }
        return kExitOk;
    }
    const auto report = run_verify(suite, nmax, workers);
    if (as_json) {
        json out = header(echo);
        out["suite"] = report.suite;
        out["nmax"] = report.nmax;
        out["checked"] = report.checks.size();
        out["passed"] = report.passed();
        out["failed"] = report.failed();
        json groups = json::array();
        for (const auto& [name, counts] : report.group_counts())
            groups.push_back({{"group", name}, {"checked", counts.first}, {"failed", counts.second}});
        out["groups"] = groups;
        json records = json::array();
        json counterexamples = json::array();
        for (const auto& c : report.checks) {
            json r = {{"group", c.group}, {"item", c.item}, {"passed", c.passed}};
            if (!c.passed) {
                r["detail"] = c.detail;
                counterexamples.push_back(r);
            }
            records.push_back(r);
        }
        out["records"] = records;
        out["counterexamples"] = counterexamples;
        out["wall_time_s"] = seconds_since(start);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "suite " << report.suite << " nmax=" << report.nmax << ": " << report.checks.size() << " checks, "
                  << report.failed() << " failures\n";
        for (const auto& [name, counts] : report.group_counts())
            std::cout << "  " << name << ": " << counts.first << " checked, " << counts.second << " failed\n";
        for (const auto& c : report.checks)
            if (!c.passed) std::cout << "FAIL " << c.group << " " << c.item << ": " << c.detail << "\n";
        std::cout << "wall time " << seconds_since(start) << " s\n";
    }
    return report.failed() == 0 ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------
// scan / check

struct ScanArgs {
    std::string target;
    int n = 0;
    int m = 0;
    int max_entry = 0;
    int nmax = 0;
    int workers = 1;
    bool as_json = false;
};

std::vector<ScanItem> scan_items(const ScanArgs& a, json& params) {
    auto require = [&](int value, const char* flag) {
        if (value <= 0) throw UsageError("scan " + a.target + " needs " + flag);
    };
    if (a.target == "conj15") {
        require(a.n, "--n");
        if (a.max_entry < 0) throw UsageError("--max-entry must be nonnegative");
        params = {{"n", a.n}, {"max_entry", a.max_entry}};
        return conjecture15_items(a.n, a.max_entry);
    }
    if (a.target == "conj14") {
        require(a.n, "--n");
        require(a.m, "--m");
        if (a.n * a.m > 24) throw UsageError("conj14 enumerates 2^(n*m) diagrams; n*m must be at most 24");
        params = {{"n", a.n}, {"m", a.m}};
        return conjecture14_items(a.n, a.m);
    }
    if (a.target == "conj14-rothe") {
        require(a.n, "--n");
        params = {{"n", a.n}};
        return conjecture14_rothe_items(a.n);
    }
    if (a.target == "thm12-vexillary") {
        require(a.nmax, "--nmax");
        params = {{"nmax", a.nmax}};
        return thm12_vexillary_items(a.nmax);
    }
    if (a.target == "thm12-inclusion") {
        require(a.n, "--n");
        require(a.m, "--m");
        params = {{"n", a.n}, {"m", a.m}};
        return thm12_inclusion_items(a.n, a.m);
    }
    throw UsageError("unknown scan target '" + a.target + "'");
}

int run_scan_cmd(const ScanArgs& a, const std::string& echo) {
    const auto start = std::chrono::steady_clock::now();
    json params;
    const auto items = scan_items(a, params);
    const auto records = run_scan(items, a.workers);
    std::size_t violations = 0;
    json counterexamples = json::array();
    for (const auto& r : records)
        if (!r.check.verdict.positive) {
            ++violations;
            counterexamples.push_back(item_to_json(r.item));
        }
    if (a.as_json) {
        json head = header(echo);
        head["target"] = a.target;
        head["params"] = params;
        std::cout << json{{"header", head}}.dump() << "\n";
        for (const auto& r : records) std::cout << to_json(r).dump() << "\n";
        std::cout << json{{"summary",
                           {{"checked", records.size()},
                            {"passed", records.size() - violations},
                            {"failed", violations},
                            {"counterexamples", counterexamples},
                            {"wall_time_s", seconds_since(start)}}}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "scan " << a.target << " " << params.dump() << ": " << records.size() << " items, " << violations
                  << " violations\n";
        for (const auto& r : records)
            if (!r.check.verdict.positive)
                std::cout << "VIOLATION " << r.item.label() << ": " << expansion_string(r.check.expansion) << "\n";
        std::cout << "wall time " << seconds_since(start) << " s\n";
    }
    return violations == 0 ? kExitOk : kExitFailure;
}

int run_check_thm12(const std::string& diagram_text, const std::string& w_text, bool waive, bool as_json,
                    const std::string& echo) {
    Diagram d;
    if (!diagram_text.empty())
        d = parse_diagram(diagram_text);
    else if (!w_text.empty())
        d = rothe(parse_permutation(w_text));
    else
        throw UsageError("check thm12 needs --diagram or --w");
    PositivityCheck result;
    try {
        result = theorem12_check(d, waive);
    } catch (const std::domain_error& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return kExitFailure;
    }
    if (as_json) {
        ScanRecord record{ScanItem{ScanTarget::thm12_inclusion, {}, 0, d, {}}, result};
        json out = to_json(record);
        out["polynomial"] = to_json(result.polynomial);
        out["header"] = header(echo);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "diagram " << d.to_string() << "\n";
        std::cout << "polynomial: " << result.polynomial.to_string() << "\n";
        std::cout << "lascoux expansion: " << expansion_string(result.expansion) << "\n";
        std::cout << "d0 = " << result.expansion.baseline_degree << ", "
                  << (result.verdict.positive ? "graded positive" : "graded positivity violated") << "\n";
    }
    return result.verdict.positive ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with double Grothendieck, Schubert, Lascoux and key polynomials"};
    app.require_subcommand(1);
    app.set_version_flag("--version", ORTHODONTIA_VERSION);
    const std::string echo = command_echo(argc, argv);

    PolyArgs poly;
    auto* poly_cmd = app.add_subcommand("poly", "Compute one polynomial");
    poly_cmd->add_option("family", poly.family,
                         "double-grothendieck | double-schubert | grothendieck | schubert | pipe-dream-sum | "
                         "stable-grothendieck | lascoux | key | script-G | script-S | json")
        ->required();
    poly_cmd->add_option("--w", poly.w, "Permutation in one-line notation");
    poly_cmd->add_option("--alpha", poly.alpha, "Composition, comma separated");
    poly_cmd->add_option("--diagram", poly.diagram, "Diagram such as \"n=3;1;1,3;\"");
    poly_cmd->add_option("--input", poly.input, "Polynomial JSON file for the json family ('-' for stdin)");
    poly_cmd->add_option("--nvars", poly.nvars, "Number of variables for stable-grothendieck");
    poly_cmd->add_option("--apply", poly.apply, "Operator word applied to the result, e.g. \"pibar1 d2\"");
    poly_cmd->add_option("--substitute-y", poly.substitute_y, "Set every y_j to this integer");
    poly_cmd->add_option("--flip", poly.flip_cap, "Apply x^m f(x_n^-1, .., x_1^-1) with this m");
    poly_cmd->add_flag("--expand", poly.expand, "Expand in the Lascoux basis");
    poly_cmd->add_flag("--latex", poly.latex, "Print as LaTeX");
    poly_cmd->add_flag("--json", poly.as_json, "Print JSON");
    poly_cmd->add_flag("--unbarred-inner-omega", poly.unbarred, "script-G with unbarred nested omegas");
    poly_cmd->add_flag("--unsigned-pipe-dreams", poly.unsigned_pd, "pipe-dream-sum without the (-1)^{|P|-l(w)} sign");

    std::string pd_w;
    bool pd_count = false, pd_json = false;
    auto* pd_cmd = app.add_subcommand("pipedreams", "Enumerate the pipe dreams of a permutation");
    pd_cmd->add_option("--w", pd_w, "Permutation")->required();
    pd_cmd->add_flag("--count", pd_count, "Only print the number of pipe dreams");
    pd_cmd->add_flag("--emit-json,--json", pd_json, "Print JSON");

    std::string orth_diagram, orth_w;
    bool orth_allow = false, orth_json = false;
    auto* orth_cmd = app.add_subcommand("orthodontia", "Print the double orthodontic sequence (K, i, j, M)");
    orth_cmd->add_option("--diagram", orth_diagram, "Diagram");
    orth_cmd->add_option("--w", orth_w, "Use the Rothe diagram of this permutation");
    orth_cmd->add_flag("--allow-non-percent-avoiding", orth_allow, "Run even if the diagram is not %-avoiding");
    orth_cmd->add_flag("--json", orth_json, "Print JSON");

    std::string so_w, so_endpoint = "alpha-plus-one";
    bool so_json = false;
    auto* so_cmd = app.add_subcommand("sortorder", "Primary column data, sorting and sort-order predecessors");
    so_cmd->add_option("--w", so_w, "Permutation")->required();
    so_cmd->add_option("--os-endpoint", so_endpoint, "alpha | alpha-plus-one");
    so_cmd->add_flag("--json", so_json, "Print JSON");

    std::string suite;
    int verify_nmax = 4, verify_workers = 1;
    bool verify_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite");
    verify_cmd
        ->add_option("suite", suite,
                     "thm11 | cor-double-schub | prop-os1 | thm-os2 | operators | lemma4 | triangularity | ambiguity")
        ->required();
    verify_cmd->add_option("--nmax", verify_nmax, "Size bound");
    verify_cmd->add_option("--workers", verify_workers, "Worker threads");
    verify_cmd->add_flag("--json", verify_json, "Print a JSON report");

    ScanArgs scan;
    auto* scan_cmd = app.add_subcommand("scan", "Scan a family of inputs for graded Lascoux positivity");
    scan_cmd->add_option("target", scan.target, "conj15 | conj14 | conj14-rothe | thm12-vexillary | thm12-inclusion")
        ->required();
    scan_cmd->add_option("--n", scan.n, "Number of rows / variables");
    scan_cmd->add_option("--m", scan.m, "Number of columns");
    scan_cmd->add_option("--max-entry", scan.max_entry, "Largest composition entry");
    scan_cmd->add_option("--nmax", scan.nmax, "Largest permutation size");
    scan_cmd->add_option("--workers", scan.workers, "Worker threads");
    scan_cmd->add_flag("--json", scan.as_json, "Stream JSON lines");

    std::string check_target, check_diagram, check_w;
    bool check_waive = false, check_json = false;
    auto* check_cmd = app.add_subcommand("check", "Check graded Lascoux positivity for one diagram");
    check_cmd->add_option("target", check_target, "thm12")->required();
    check_cmd->add_option("--diagram", check_diagram, "Diagram");
    check_cmd->add_option("--w", check_w, "Use the Rothe diagram of this permutation");
    check_cmd->add_flag("--waive-inclusion", check_waive, "Skip the columns-ordered-by-inclusion precondition");
    check_cmd->add_flag("--json", check_json, "Print JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const auto cache = cache_file();
    if (cache) load_lascoux_cache(*cache);
    const std::size_t cached = lascoux_cache_size();

    int code = kExitOk;
    try {
        if (*poly_cmd)
            code = run_poly(poly, echo);
        else if (*pd_cmd)
            code = run_pipedreams(pd_w, pd_count, pd_json, echo);
        else if (*orth_cmd)
            code = run_orthodontia(orth_diagram, orth_w, orth_allow, orth_json, echo);
        else if (*so_cmd)
            code = run_sortorder(so_w, so_endpoint, so_json, echo);
        else if (*verify_cmd)
            code = run_verify_cmd(suite, verify_nmax, verify_workers, verify_json, echo);
        else if (*scan_cmd)
            code = run_scan_cmd(scan, echo);
        else if (*check_cmd) {
            if (check_target != "thm12") throw UsageError("unknown check target '" + check_target + "'");
            code = run_check_thm12(check_diagram, check_w, check_waive, check_json, echo);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }

    if (cache && lascoux_cache_size() > cached) {
        std::error_code ec;
        std::filesystem::create_directories(cache->parent_path(), ec);
        save_lascoux_cache(*cache);
    }
    return code;
}
