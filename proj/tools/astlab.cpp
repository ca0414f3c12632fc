// astlab command-line interface.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "astlab/astlab.hpp"
#include "astlab/manifest.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace astlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kBruteForceLimit = 7;
constexpr const char* kSummarySchema = "astlab.summary/1";

struct Globals {
    bool quiet = false;
    std::string format = "json";
    bool force = false;
    int jobs = 1;
    std::string cache_dir;
    bool no_cache = false;
    std::string manifest;
};

std::vector<int> parse_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw invalid_argument(std::string("bad integer in ") + what + ": '" + item + "'");
        out.push_back(v);
    }
    return out;
}

json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

json rational_json(const Rational& q) {
    if (is_integer(q)) return integer_json(q.get_num());
    return q.get_str();
}

std::string rows_text(const std::vector<std::vector<int>>& rows) {
    std::string s;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) s += '/';
        for (std::size_t c = 0; c < rows[r].size(); ++c) s += (c ? " " : "") + std::to_string(rows[r][c]);
    }
    return s;
}

std::optional<fs::path> default_cache_dir() {
    if (const char* env = std::getenv("ASTLAB_CACHE"); env && *env) return fs::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "astlab";
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "astlab";
    return std::nullopt;
}

void guard_order(const Globals& g, int n, const char* what) {
    if (n > kBruteForceLimit && !g.force)
        throw invalid_argument(std::string(what) + " at order " + std::to_string(n) + " is brute force; pass --force above order " +
                               std::to_string(kBruteForceLimit));
}

class Runner {
public:
    Runner(Globals g, DigestingSink& sink) : g_(std::move(g)), sink_(sink) {}

    bool csv() const { return g_.format == "csv"; }
    void object(const json& j) {
        if (!g_.quiet) sink_.line(j.dump());
    }
    void object_line(const std::string& s) {
        if (!g_.quiet) sink_.line(s);
    }
    void result(const json& j) { sink_.line(j.dump()); }
    void result_line(const std::string& s) { sink_.line(s); }

    const Globals& globals() const { return g_; }

private:
    Globals g_;
    DigestingSink& sink_;
};

// ------------------------------------------------------------------ enumerate

struct EnumerateArgs {
    std::string kind;
    int order = 0;
    std::string positions;
    bool has_positions = false;
    std::string indexing = "symmetric";
    std::optional<int> rho;
    std::optional<int> top_col;
    std::string bottom_row;
    bool has_bottom_row = false;
};

template <class Obj>
void emit_object(Runner& run, long index, const Obj& obj, const std::vector<std::vector<int>>& rows) {
    if (run.csv())
        run.object_line(std::to_string(index) + "," + rows_text(rows));
    else
        run.object(to_json(obj));
}

int cmd_enumerate(Runner& run, const EnumerateArgs& a, json& params) {
    const auto& g = run.globals();
    const std::string& kind = a.kind;
    const bool is_ast = kind == "ast", is_asm = kind == "asm", is_oosasm = kind == "oosasm", is_mt = kind == "mt",
               is_gt = kind == "gt";
    if (!(is_ast || is_asm || is_oosasm || is_mt || is_gt)) throw invalid_argument("unknown kind: " + kind);
    if (a.has_positions && !(is_ast || is_oosasm)) throw invalid_argument("--positions applies to ast and oosasm only");
    if (a.rho && !is_ast) throw invalid_argument("--rho applies to ast only");
    if (a.top_col && !is_asm) throw invalid_argument("--top-col applies to asm only");
    if (a.has_bottom_row != is_mt) throw invalid_argument("--bottom-row is required for mt and invalid otherwise");
    if (a.indexing != "symmetric" && a.indexing != "theorem") throw invalid_argument("--indexing must be symmetric or theorem");

    int n = a.order;
    std::vector<int> bottom;
    if (is_mt) {
        bottom = parse_list(a.bottom_row, "--bottom-row");
        require(!bottom.empty(), "--bottom-row must not be empty");
        require(n == 0 || n == static_cast<int>(bottom.size()), "--order disagrees with the length of --bottom-row");
        n = static_cast<int>(bottom.size());
    }
    require(n >= 1, "order must be at least 1");
    guard_order(g, n, "enumeration");

    std::optional<std::vector<int>> want_pos;
    if (a.has_positions) {
        auto p = parse_list(a.positions, "--positions");
        if (is_ast && a.indexing == "theorem")
            for (int& x : p) x = theorem_to_symmetric(n, x);
        want_pos = p;
    }
    params = {{"kind", kind}, {"order", n}};
    if (want_pos) params["positions"] = *want_pos;
    if (a.rho) params["rho"] = *a.rho;
    if (a.top_col) params["top_col"] = *a.top_col;
    if (is_mt) params["bottom_row"] = bottom;

    if (run.csv()) run.object_line("index,rows");
    long count = 0;
    if (is_ast) {
        for_each_ast(n, [&](const Ast& t) {
            const auto p = one_column_profile(t);
            if (want_pos && p.positions != *want_pos) return;
            if (a.rho && rho(t) != *a.rho) return;
            emit_object(run, ++count, t, t.rows);
        });
    } else if (is_asm) {
        for_each_asm(n, [&](const Asm& m) {
            if (a.top_col && asm_top_one_column(m) != *a.top_col) return;
            emit_object(run, ++count, m, m.rows);
        });
    } else if (is_oosasm) {
        std::optional<std::vector<int>> norm;
        if (want_pos) norm = normalize_oosasm_positions(n, *want_pos);
        for_each_oosasm_triangle(n, [&](const OddOosasmTriangle& t) {
            if (norm && oosasm_one_columns(t) != *norm) return;
            emit_object(run, ++count, t, t.rows);
        });
    } else if (is_mt) {
        for_each_monotone_triangle(bottom, [&](const MonotoneTriangle& t) { emit_object(run, ++count, t, t.rows); });
    } else {
        for_each_gt_bounded(n, [&](const GtPatternBounded& p) { emit_object(run, ++count, p, p.rows); });
    }
    if (run.csv())
        run.result_line("count," + std::to_string(count));
    else
        run.result({{"schema", kSummarySchema}, {"command", "enumerate"}, {"kind", kind}, {"order", n}, {"count", count}});
    return kExitOk;
}

// ---------------------------------------------------------------------- coeff

int cmd_coeff(Runner& run, int n, const std::string& positions, const std::string& indexing, std::optional<int> r,
              json& params) {
    if (indexing != "symmetric" && indexing != "theorem") throw invalid_argument("--indexing must be symmetric or theorem");
    auto j = parse_list(positions, "--positions");
    if (indexing == "symmetric")
        for (int& x : j) x = symmetric_to_theorem(n, x);
    const Integer value = r ? star_refined(n, j, *r) : star(n, j);
    json out{{"schema", "astlab.coeff/1"}, {"n", n}, {"j", j}};
    if (r) out["r"] = *r;
    out["value"] = integer_json(value);
    params = {{"order", n}, {"j", j}, {"indexing", indexing}};
    if (r) params["rho"] = *r;
    if (run.csv())
        run.result_line("value," + value.get_str());
    else
        run.result(out);
    return kExitOk;
}

// ------------------------------------------------------------------- rho-dist

int cmd_rho_dist(Runner& run, int n, json& params) {
    const auto dist = rho_distribution(n);
    params = {{"order", n}};
    Integer total = 0;
    json counts = json::array();
    for (const auto& c : dist) {
        total += c;
        counts.push_back(integer_json(c));
    }
    if (run.csv()) {
        run.result_line("r,count");
        for (std::size_t r = 0; r < dist.size(); ++r) run.result_line(std::to_string(r + 1) + "," + dist[r].get_str());
    } else {
        run.result({{"schema", "astlab.rho-dist/1"}, {"n", n}, {"counts", counts}, {"total", integer_json(total)}});
    }
    return kExitOk;
}

// ------------------------------------------------------------------------- mn

int cmd_mn(Runner& run, int n, const std::string& at, bool has_at, json& params) {
    require(n >= 1, "order must be at least 1");
    const RatPoly& p = mn(n);
    params = {{"order", n}};
    if (has_at) {
        const auto point = parse_list(at, "--at");
        require(point.size() == static_cast<std::size_t>(n), "--at needs n values");
        params["at"] = point;
        const Rational v = evaluate(p, point);
        if (run.csv())
            run.result_line("value," + v.get_str());
        else
            run.result({{"schema", "astlab.mn-value/1"}, {"n", n}, {"at", point}, {"value", rational_json(v)}});
        return kExitOk;
    }
    if (run.csv()) {
        std::string head;
        for (int k = 1; k <= n; ++k) head += "e" + std::to_string(k) + ",";
        run.result_line(head + "c");
        for (const auto& [e, c] : p.terms()) {
            std::string row;
            for (auto x : e) row += std::to_string(x) + ",";
            run.result_line(row + c.get_str());
        }
    } else {
        run.result({{"schema", "astlab.mn/1"}, {"n", n}, {"poly", poly_to_json(p)}});
    }
    return kExitOk;
}

// ------------------------------------------------------------------- st-count

int cmd_st_count(Runner& run, int n, const std::string& s_text, const std::string& t_text, const std::string& b_text,
                 bool brute, json& params) {
    const auto s = parse_list(s_text, "--s");
    const auto t = parse_list(t_text, "--t");
    const auto b = parse_list(b_text, "--boundary");
    params = {{"order", n}, {"s", s}, {"t", t}, {"boundary", b}, {"brute", brute}};
    const Integer value = truncated_count(n, s, t, b);
    json out{{"schema", "astlab.st-count/1"}, {"n", n}, {"s", s}, {"t", t}, {"boundary", b}, {"value", integer_json(value)}};
    if (brute) {
        guard_order(run.globals(), n, "brute-force tree count");
        const StShape shape(n, s, t);
        out["brute_force"] = count_st_trees(shape, b);
    }
    if (run.csv())
        run.result_line("value," + value.get_str());
    else
        run.result(out);
    return kExitOk;
}

// --------------------------------------------------------------- oosasm-count

int cmd_oosasm_count(Runner& run, int n, const std::string& positions, json& params) {
    const auto pos = parse_list(positions, "--positions");
    params = {{"order", n}, {"positions", pos}};
    const Integer value = oosasm_count(n, pos);
    if (run.csv())
        run.result_line("value," + value.get_str());
    else
        run.result({{"schema", "astlab.oosasm-count/1"},
                    {"n", n},
                    {"positions", normalize_oosasm_positions(n, pos)},
                    {"value", integer_json(value)}});
    return kExitOk;
}

// ------------------------------------------------------------------------ psi

int cmd_psi(Runner& run, int n, bool lex, bool matrix, json& params) {
    require(n >= 1, "order must be at least 1");
    const auto order = lex ? dyck_words(n) : figure_order(n);
    params = {{"order", n}, {"lex", lex}, {"matrix", matrix}};
    if (matrix && run.csv()) {
        const auto m = build_c_matrix(order);
        std::istringstream in(c_matrix_csv(order, m));
        for (std::string line; std::getline(in, line);) run.result_line(line);
        return kExitOk;
    }
    const auto psi = solve_psi(n, order);
    if (run.csv()) {
        run.result_line("word,psi");
        for (std::size_t k = 0; k < order.size(); ++k) run.result_line(order[k] + "," + psi[k].get_str());
        return kExitOk;
    }
    json values = json::array();
    Rational sum = 0;
    for (const auto& q : psi) {
        values.push_back(rational_json(q));
        sum += q;
    }
    json out{{"schema", "astlab.psi/1"}, {"n", n}, {"order", lex ? "lex" : "figure"}, {"words", order},
             {"psi", values},            {"sum", rational_json(sum)}};
    if (matrix) {
        const auto m = build_c_matrix(order);
        json rows = json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_json(m(r, c)));
            rows.push_back(row);
        }
        out["c_matrix"] = rows;
    }
    run.result(out);
    return kExitOk;
}

// --------------------------------------------------------------------- verify

int cmd_verify(Runner& run, const std::string& suite, int max_order, bool experimental, json& params) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) throw invalid_argument("unknown suite: " + suite);
    guard_order(run.globals(), max_order, "verification");
    params = {{"suite", suite}, {"max_order", max_order}, {"experimental", experimental}};
    const auto verdicts = run_suite(suite, SuiteOptions{max_order, experimental}, run.globals().jobs);
    long passed = 0, failed = 0, exp_failed = 0;
    if (run.csv()) run.object_line("identity,params,left,right,pass,experimental");
    for (const auto& v : verdicts) {
        if (v.pass)
            ++passed;
        else if (v.experimental)
            ++exp_failed;
        else
            ++failed;
        if (run.csv()) {
            auto quote = [](const std::string& s) {
                std::string q = "\"";
                for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
                return q + "\"";
            };
            run.object_line(v.identity + "," + quote(v.params.dump()) + "," + quote(v.left) + "," + quote(v.right) + "," +
                            (v.pass ? "true" : "false") + "," + (v.experimental ? "true" : "false"));
        } else {
            run.object(to_json(v));
        }
    }
    json summary{{"schema", kSummarySchema}, {"command", "verify"}, {"suite", suite},       {"max_order", max_order},
                 {"checks", verdicts.size()}, {"passed", passed},  {"failed", failed}, {"experimental_failed", exp_failed}};
    if (run.csv())
        run.result_line("checks," + std::to_string(verdicts.size()) + ",passed," + std::to_string(passed) + ",failed," +
                        std::to_string(failed));
    else
        run.result(summary);
    return failed == 0 ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration and identity checks for alternating sign triangles"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    Globals g;
    app.add_flag("-q,--quiet", g.quiet, "Print summaries and results only");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--force", g.force, "Allow brute force above order 7");
    app.add_option("-j,--jobs", g.jobs, "Worker threads for verify")->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", g.cache_dir, "Directory for cached M_n polynomials (env ASTLAB_CACHE)");
    app.add_flag("--no-cache", g.no_cache, "Do not read or write the on-disk cache");
    app.add_option("--manifest", g.manifest, "Write a run manifest to this file");

    EnumerateArgs en;
    auto* enumerate = app.add_subcommand("enumerate", "Stream objects of one kind as JSON lines");
    enumerate->add_option("kind", en.kind, "ast | asm | oosasm | mt | gt")->required();
    enumerate->add_option("-n,--order", en.order, "Order (size)");
    enumerate->add_option("--positions", en.positions, "Comma-separated 1-column positions");
    enumerate->add_option("--indexing", en.indexing, "symmetric | theorem (ast positions)");
    enumerate->add_option("--rho", en.rho, "Keep ASTs with this rho value");
    enumerate->add_option("--top-col", en.top_col, "Keep ASMs whose top-row 1 is in this column (1-based)");
    enumerate->add_option("--bottom-row", en.bottom_row, "Bottom row of the monotone triangles (mt)");

    int order = 0;
    std::string positions, indexing = "theorem";
    std::optional<int> rho_value;
    auto* coeff = app.add_subcommand("coeff", "Coefficient of the AST generating function");
    coeff->add_option("-n,--order", order)->required();
    coeff->add_option("--positions", positions, "Comma-separated 1-column positions")->required();
    coeff->add_option("--indexing", indexing, "theorem (default) | symmetric");
    coeff->add_option("--rho", rho_value, "Refine by rho");

    auto* rho_dist = app.add_subcommand("rho-dist", "Distribution of rho over ASTs of one order");
    rho_dist->add_option("-n,--order", order)->required();

    std::string at;
    auto* mn_cmd = app.add_subcommand("mn", "The monotone-triangle polynomial M_n");
    mn_cmd->add_option("-n,--order", order)->required();
    auto* at_opt = mn_cmd->add_option("--at", at, "Evaluate at these bottom-row values");

    std::string s_text, t_text, b_text;
    bool brute = false;
    auto* st = app.add_subcommand("st-count", "Count (s,t)-trees via the operator formula");
    st->add_option("-n,--order", order)->required();
    st->add_option("--s", s_text, "Weakly decreasing s");
    st->add_option("--t", t_text, "Weakly increasing t");
    st->add_option("--boundary", b_text, "Weakly increasing boundary values")->required();
    st->add_flag("--brute", brute, "Also count by enumeration");

    auto* oo = app.add_subcommand("oosasm-count", "Count odd OOSASM triangles with given 1-columns");
    oo->add_option("-n,--order", order)->required();
    oo->add_option("--positions", positions, "Comma-separated 1-column positions")->required();

    bool lex = false, matrix = false;
    auto* psi = app.add_subcommand("psi", "Link-pattern counts psi = C^{-1} Psi");
    psi->add_option("-n,--order", order)->required();
    psi->add_flag("--lex", lex, "Use lexicographic word order instead of the table order");
    psi->add_flag("--matrix", matrix, "Also output C(n); with --format csv, output only C(n)");

    std::string suite;
    int max_order = 4;
    bool experimental = false;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "Suite name")->required();
    verify->add_option("--max-order", max_order, "Largest order checked");
    verify->add_flag("--experimental", experimental, "Include checks outside the proven hypotheses");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (g.no_cache)
        default_mn_store().set_cache_dir(std::nullopt);
    else if (!g.cache_dir.empty())
        default_mn_store().set_cache_dir(fs::path(g.cache_dir));
    else
        default_mn_store().set_cache_dir(default_cache_dir());

    const auto start = std::chrono::steady_clock::now();
    DigestingSink sink(std::cout);
    Runner run(g, sink);
    json params = json::object();
    std::string command;
    int code = kExitOk;
    try {
        if (enumerate->parsed()) {
            command = "enumerate";
            en.has_positions = enumerate->count("--positions") > 0;
            en.has_bottom_row = enumerate->count("--bottom-row") > 0;
            code = cmd_enumerate(run, en, params);
        } else if (coeff->parsed()) {
            command = "coeff";
            code = cmd_coeff(run, order, positions, indexing, rho_value, params);
        } else if (rho_dist->parsed()) {
            command = "rho-dist";
            code = cmd_rho_dist(run, order, params);
        } else if (mn_cmd->parsed()) {
            command = "mn";
            code = cmd_mn(run, order, at, at_opt->count() > 0, params);
        } else if (st->parsed()) {
            command = "st-count";
            code = cmd_st_count(run, order, s_text, t_text, b_text, brute, params);
        } else if (oo->parsed()) {
            command = "oosasm-count";
            code = cmd_oosasm_count(run, order, positions, params);
        } else if (psi->parsed()) {
            command = "psi";
            code = cmd_psi(run, order, lex, matrix, params);
        } else if (verify->parsed()) {
            command = "verify";
            code = cmd_verify(run, suite, max_order, experimental, params);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    }
    std::cout.flush();

    if (!g.manifest.empty()) {
        RunManifest m;
        m.command = command;
        m.params = params;
        m.wall_clock_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        m.output_sha256 = sink.digest();
        m.cache_hits = default_mn_store().disk_hits();
        std::ofstream out(g.manifest);
        if (!out) {
            std::cerr << "error: cannot write manifest " << g.manifest << '\n';
            return kExitFailed;
        }
        out << m.to_json().dump(2) << '\n';
    }
    return code;
}
