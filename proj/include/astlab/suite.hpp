#pragma once

// Verification suites: each suite is a list of independent checks run on a
// worker pool; results keep the list order whatever the number of workers.

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "astlab/error.hpp"
#include "astlab/genfun.hpp"
#include "astlab/identities.hpp"
#include "astlab/linkpat.hpp"
#include "astlab/monotone.hpp"
#include "astlab/oosasm.hpp"
#include "astlab/opcalc.hpp"
#include "astlab/triangles.hpp"
#include "astlab/verdict.hpp"

namespace astlab {

using Check = std::function<VerdictRecord()>;

/// Runs the checks on `jobs` threads; result i belongs to check i.
inline std::vector<VerdictRecord> run_checks(const std::vector<Check>& checks, int jobs) {
    std::vector<VerdictRecord> out(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < checks.size();) {
            try {
                out[i] = timed(checks[i]);
            } catch (const std::exception& e) {
                out[i] = make_verdict("error", {{"index", i}}, e.what(), "no exception");
            }
        }
    };
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(checks.size())));
    std::vector<std::thread> pool;
    for (int k = 1; k < jobs; ++k) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

struct SuiteOptions {
    int max_order = 4;
    bool experimental = false;
};

namespace suites {

inline std::string join(const std::vector<long>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s;
}

inline std::string join(const std::vector<Integer>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].get_str();
    return s;
}

inline std::string t_poly_string(const IntPoly& p) { return to_string(p, {"t"}); }

inline void thm_main(int max_n, std::vector<Check>& out) {
    for (int n = 1; n <= max_n; ++n) {
        out.push_back([n] {
            return make_verdict("ast-asm-count", {{"n", n}}, std::to_string(enumerate_asts(n).size()),
                                std::to_string(enumerate_asms(n).size()));
        });
        out.push_back([n] {
            std::map<std::vector<int>, long> brute;
            for_each_ast(n, [&](const Ast& a) { brute[one_column_profile(a).theorem_positions()]++; });
            std::string left, right;
            long support = 0;
            long off_support_nonzero = 0;
            for (const auto& j : increasing_positions(n)) {
                const Integer s = star(n, j);
                left += s.get_str() + ";";
                right += std::to_string(brute[j]) + ";";
                if (catalan_support(n, j)) ++support;
                else if (s != 0) ++off_support_nonzero;
            }
            left += " support=" + std::to_string(support) + " off_support_nonzero=" + std::to_string(off_support_nonzero);
            right += " support=" + catalan(n).get_str() + " off_support_nonzero=0";
            return make_verdict("star-vs-brute-force", {{"n", n}}, left, right);
        });
    }
}

inline void thm_refined(int max_n, std::vector<Check>& out) {
    for (int n = 1; n <= max_n; ++n) {
        out.push_back([n] {
            std::vector<long> by_rho(n, 0), by_top(n, 0);
            for_each_ast(n, [&](const Ast& a) { by_rho[rho(a) - 1]++; });
            for_each_asm(n, [&](const Asm& a) { by_top[asm_top_one_column(a) - 1]++; });
            return make_verdict("rho-vs-asm-top-row", {{"n", n}}, join(by_rho), join(by_top));
        });
        out.push_back([n] {
            std::vector<long> by_rho(n, 0);
            for_each_ast(n, [&](const Ast& a) { by_rho[rho(a) - 1]++; });
            std::vector<Integer> summed(n, 0);
            for (const auto& j : increasing_positions(n))
                for (int r = 1; r <= n; ++r) summed[r - 1] += star_refined(n, j, r);
            return make_verdict("rho-vs-star-refined", {{"n", n}}, join(summed), join(by_rho));
        });
        out.push_back([n] {
            std::map<std::pair<std::vector<int>, int>, long> brute;
            for_each_ast(n, [&](const Ast& a) { brute[{one_column_profile(a).theorem_positions(), rho(a)}]++; });
            std::string left, right;
            for (const auto& j : increasing_positions(n)) {
                for (int r = 1; r <= n; ++r) {
                    left += star_refined(n, j, r).get_str() + ";";
                    right += std::to_string(brute[{j, r}]) + ";";
                }
            }
            return make_verdict("star-refined-vs-brute-force", {{"n", n}}, left, right);
        });
        out.push_back([n] {
            std::vector<long> by_rho(n, 0);
            for_each_ast(n, [&](const Ast& a) { by_rho[rho(a) - 1]++; });
            std::vector<Integer> ct;
            for (int r = 1; r <= n; ++r) ct.push_back(refined_constant_term(n, r));
            return make_verdict("refined-constant-term", {{"n", n}}, join(ct), join(by_rho));
        });
    }
}

inline void thm_identity(int max_n, bool experimental, std::vector<Check>& out) {
    for (int n = 2; n <= max_n; ++n)
        for (const auto& j : rotation_instances(n)) out.push_back([n, j] { return rotation_identity_check(n, j); });
    if (!experimental) return;
    // Every sequence in [0, 2n-3]^{n-1} outside the rotation hypothesis.
    for (int n = 2; n <= std::min(max_n, 4); ++n) {
        const int k = n - 1;
        const int top = 2 * n - 3;
        std::vector<int> j(k, 0);
        while (true) {
            if (!rotation_hypothesis(n, j)) out.push_back([n, j] { return rotation_identity_check(n, j, true); });
            int i = k - 1;
            while (i >= 0 && j[i] == top) j[i--] = 0;
            if (i < 0) break;
            ++j[i];
        }
    }
}

/// Weakly decreasing (dec) or increasing sequences of the given length in [0, hi].
inline void monotone_sequences(int len, int hi, bool dec, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void()> rec = [&] {
        if (static_cast<int>(cur.size()) == len) {
            out.push_back(cur);
            return;
        }
        const int lo = dec || cur.empty() ? 0 : cur.back();
        const int up = dec && !cur.empty() ? cur.back() : hi;
        for (int v = lo; v <= up; ++v) {
            cur.push_back(v);
            rec();
            cur.pop_back();
        }
    };
    rec();
}

/// All 1-column position vectors of length n: one 0, negatives before it,
/// positives after, entries in [-(n-1), n-1].
inline std::vector<std::vector<int>> weighted_position_vectors(int n) {
    std::vector<std::vector<int>> out;
    for (int m = 0; m < n; ++m) {
        std::vector<std::vector<int>> lefts, rights;
        std::vector<int> cur;
        std::function<void(int, int, int, std::vector<std::vector<int>>&)> rec =
            [&](int len, int lo, int hi, std::vector<std::vector<int>>& sink) {
                if (static_cast<int>(cur.size()) == len) {
                    sink.push_back(cur);
                    return;
                }
                for (int v = cur.empty() ? lo : cur.back() + 1; v <= hi; ++v) {
                    cur.push_back(v);
                    rec(len, lo, hi, sink);
                    cur.pop_back();
                }
            };
        rec(m, -(n - 1), -1, lefts);
        rec(n - 1 - m, 1, n - 1, rights);
        for (const auto& l : lefts)
            for (const auto& r : rights) {
                std::vector<int> v = l;
                v.push_back(0);
                v.insert(v.end(), r.begin(), r.end());
                out.push_back(v);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline void opcalc(int max_n, std::vector<Check>& out) {
    for (int n = 1; n <= max_n; ++n) out.push_back([n] { return cycle_identity_check(n); });
    for (int n = 1; n <= std::min(max_n, 4); ++n) {
        for (int l = 0; l <= n; ++l) {
            for (int r = 0; l + r <= n; ++r) {
                std::vector<std::vector<int>> ss, ts;
                monotone_sequences(l, n, true, ss);
                monotone_sequences(r, n, false, ts);
                for (const auto& s : ss) {
                    for (const auto& t : ts) {
                        auto shape = try_st_shape(n, s, t);
                        if (!shape) continue;
                        out.push_back([n, s, t, shape = *shape] {
                            const RatPoly p = truncated_polynomial(mn(n), s, t);
                            std::string left, right;
                            std::vector<int> b(n);
                            std::function<void(int, int)> rec = [&](int i, int lo) {
                                if (i == n) {
                                    left += to_integer(evaluate(p, b)).get_str() + ";";
                                    right += std::to_string(count_st_trees(shape, b)) + ";";
                                    return;
                                }
                                for (int v = lo; v <= n + 1; ++v) {
                                    b[i] = v;
                                    rec(i + 1, v);
                                }
                            };
                            rec(0, 0);
                            return make_verdict("truncated-count", {{"n", n}, {"s", s}, {"t", t}}, left, right);
                        });
                    }
                }
            }
        }
    }
    for (int n = 1; n <= std::min(max_n, 5); ++n) {
        out.push_back([n] {
            std::map<std::vector<int>, IntPoly> brute;
            for_each_ast(n, [&](const Ast& a) {
                auto p = one_column_profile(a);
                std::vector<int> pos = p.positions;
                pos.insert(std::lower_bound(pos.begin(), pos.end(), 0), 0);
                auto [it, fresh] = brute.try_emplace(pos, IntPoly(2));
                it->second += IntPoly::monomial({p.left_ten, p.right_ten});
            });
            std::string left, right;
            for (const auto& pos : weighted_position_vectors(n)) {
                left += to_string(ast_weighted_count(pos), {"P", "Q"}) + ";";
                auto it = brute.find(pos);
                right += to_string(it == brute.end() ? IntPoly(2) : it->second, {"P", "Q"}) + ";";
            }
            return make_verdict("weighted-count", {{"n", n}}, left, right);
        });
    }
}

inline void asym(int max_n, std::vector<Check>& out) {
    for (int n = 1; n <= std::min(max_n, 3); ++n) {
        out.push_back([n] { return asym_lemma_check(n, 6); });
        out.push_back([n] { return zeilberger_asym_check(n, 6); });
    }
}

inline void lgv(int max_n, std::vector<Check>& out) {
    for (int n = 1; n <= std::min(max_n, 5); ++n) {
        out.push_back([n] {
            const auto ast = t_poly_string(ast_rho_weight_sum(n));
            return make_verdict("lgv-chain", {{"n", n}},
                                t_poly_string(lgv_weighted_sum(n)) + " | " + t_poly_string(path_family_weight_sum(n)) +
                                    " | " + t_poly_string(gt_bounded_weight_sum(n)),
                                ast + " | " + ast + " | " + ast);
        });
        out.push_back([n] {
            long patterns = 0, good = 0, families = 0;
            for_each_gt_bounded(n, [&](const GtPatternBounded& g) {
                ++patterns;
                const auto f = gt_to_path_family(g);
                good += vertex_disjoint(f) && f.weight() == g.weight && path_family_to_gt(f) == g;
            });
            for_each_path_family(n, [&](const PathFamily&) { ++families; });
            return make_verdict("gt-path-bijection", {{"n", n}},
                                std::to_string(good) + "/" + std::to_string(patterns),
                                std::to_string(families) + "/" + std::to_string(families));
        });
    }
}

inline void oosasm(int max_n, std::vector<Check>& out) {
    for (int n = 1; n <= std::min(max_n, 5); ++n) {
        out.push_back([n] {
            std::map<std::vector<int>, long> brute;
            long bad_sum = 0;
            for_each_oosasm_triangle(n, [&](const OddOosasmTriangle& t) {
                brute[oosasm_one_columns(t)]++;
                int total = 0;
                for (const auto& row : t.rows)
                    for (int v : row) total += v;
                bad_sum += 2 * total != n + t.column_sum(0);
            });
            std::string left, right;
            for (const auto& [pos, count] : brute) {
                left += oosasm_count(n, pos).get_str() + ";";
                right += std::to_string(count) + ";";
            }
            left += " entry_sum_violations=" + std::to_string(bad_sum);
            right += " entry_sum_violations=0";
            return make_verdict("oosasm-count", {{"n", n}}, left, right);
        });
        out.push_back([n] {
            std::vector<Pattern> images;
            long total = 0;
            for_each_oosasm_triangle(n, [&](const OddOosasmTriangle& t) {
                ++total;
                images.push_back(oosasm_to_st_tree(t).tree.entries);
            });
            std::sort(images.begin(), images.end());
            const auto distinct = std::unique(images.begin(), images.end()) - images.begin();
            return make_verdict("oosasm-tree-injective", {{"n", n}}, std::to_string(distinct), std::to_string(total));
        });
    }
}

inline void linkpat(int max_n, std::vector<Check>& out) {
    for (int n = 1; n <= std::min(max_n, 6); ++n) {
        out.push_back([n] {
            return make_verdict("c-matrix-unitriangular", {{"n", n}},
                                is_lower_unitriangular(build_c_matrix(triangular_order(n))) ? "true" : "false", "true");
        });
        out.push_back([n] {
            const auto psi = solve_psi(n);
            Rational sum = 0;
            long negative = 0, fractional = 0;
            for (const auto& x : psi) {
                sum += x;
                negative += sgn(x) < 0;
                fractional += !is_integer(x);
            }
            const long asms = n <= 6 ? static_cast<long>(enumerate_asms(n).size()) : -1;
            return make_verdict("psi-sum-and-sign", {{"n", n}},
                                "sum=" + sum.get_str() + " negative=" + std::to_string(negative) +
                                    " fractional=" + std::to_string(fractional),
                                "sum=" + std::to_string(asms) + " negative=0 fractional=0");
        });
        out.push_back([n] { return rotation_invariance_check(n); });
        if (n <= 5) out.push_back([n] { return proposition_support_check(n); });
    }
}

}  // namespace suites

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"thm-main", "thm-refined", "thm-identity", "opcalc", "asym",
                                                "lgv",      "oosasm",      "linkpat",      "all"};
    return names;
}

inline std::vector<Check> suite_checks(const std::string& name, const SuiteOptions& opt) {
    require(opt.max_order >= 1, "max order must be at least 1");
    std::vector<Check> out;
    const int n = opt.max_order;
    const bool all = name == "all";
    bool known = all;
    auto want = [&](const char* s) {
        const bool hit = all || name == s;
        known = known || hit;
        return hit;
    };
    if (want("thm-main")) suites::thm_main(n, out);
    if (want("thm-refined")) suites::thm_refined(n, out);
    if (want("thm-identity")) suites::thm_identity(n, opt.experimental, out);
    if (want("opcalc")) suites::opcalc(n, out);
    if (want("asym")) suites::asym(n, out);
    if (want("lgv")) suites::lgv(n, out);
    if (want("oosasm")) suites::oosasm(n, out);
    if (want("linkpat")) suites::linkpat(n, out);
    if (!known) throw invalid_argument("unknown suite: " + name);
    return out;
}

inline std::vector<VerdictRecord> run_suite(const std::string& name, const SuiteOptions& opt, int jobs = 1) {
    return run_checks(suite_checks(name, opt), jobs);
}

}  // namespace astlab
