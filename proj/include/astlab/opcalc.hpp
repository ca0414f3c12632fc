#pragma once

// Difference-operator calculus on polynomials with rational coefficients.
//
//   E_x p(x)  = p(x+1)
//   fwd_x     = E_x - Id        (forward difference)
//   bwd_x     = Id - E_x^{-1}   (backward difference)
//
// and the polynomial
//   M_n(x) = prod_{p<q} (1 + fwd_{x_q} + fwd_{x_p} fwd_{x_q}) prod_{i<j} (x_j - x_i)/(j - i)
// whose values count monotone triangles with prescribed bottom row.

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <variant>
#include <vector>

#include "astlab/error.hpp"
#include "astlab/laurent_poly.hpp"
#include "astlab/monotone.hpp"
#include "astlab/numeric.hpp"
#include "astlab/poly_io.hpp"
#include "astlab/verdict.hpp"

namespace astlab {

enum class OpKind {
    shift,              ///< E^k, k may be negative
    forward_diff,       ///< fwd^k
    backward_diff,      ///< bwd^k
    neg_forward_diff,   ///< (-fwd)^k
    neg_backward_diff,  ///< (-bwd)^k
};

struct PrimitiveOp {
    std::size_t var = 0;
    OpKind kind = OpKind::shift;
    int exponent = 1;
};

/// Linear combination of operator products, e.g. 1 + fwd_q + fwd_p fwd_q.
struct OpSum {
    struct Term {
        Rational coeff;
        std::vector<PrimitiveOp> ops;
    };
    std::vector<Term> terms;
};

using OpFactor = std::variant<PrimitiveOp, OpSum>;
using OperatorWord = std::vector<OpFactor>;

/// p(..., x_var + by, ...).
inline RatPoly shift(const RatPoly& p, std::size_t var, long by) {
    require(var < p.vars(), "shift variable out of range");
    if (by == 0) return p;
    RatPoly r(p.vars());
    Exponents f;
    for (const auto& [e, c] : p.terms()) {
        const int d = e[var];
        require(d >= 0, "operators act on polynomials, not Laurent polynomials");
        f = e;
        Integer pw = 1;  // by^(d-k)
        for (int k = d; k >= 0; --k) {
            f[var] = k;
            r.add_term(f, c * Rational(binomial(d, k) * pw));
            pw *= by;
        }
    }
    return r;
}

inline RatPoly forward_difference(const RatPoly& p, std::size_t var) { return shift(p, var, 1) - p; }
inline RatPoly backward_difference(const RatPoly& p, std::size_t var) { return p - shift(p, var, -1); }

inline RatPoly act(const PrimitiveOp& op, RatPoly p) {
    if (op.kind == OpKind::shift) return shift(p, op.var, op.exponent);
    if (op.exponent < 0)
        throw invalid_argument("difference operator with negative exponent " + std::to_string(op.exponent));
    for (int k = 0; k < op.exponent && !p.is_zero(); ++k) {
        switch (op.kind) {
            case OpKind::forward_diff: p = forward_difference(p, op.var); break;
            case OpKind::backward_diff: p = backward_difference(p, op.var); break;
            case OpKind::neg_forward_diff: p = -forward_difference(p, op.var); break;
            case OpKind::neg_backward_diff: p = -backward_difference(p, op.var); break;
            case OpKind::shift: break;
        }
    }
    return p;
}

inline RatPoly act(const OpSum& sum, const RatPoly& p) {
    RatPoly r(p.vars());
    for (const auto& term : sum.terms) {
        RatPoly q = p;
        for (auto it = term.ops.rbegin(); it != term.ops.rend(); ++it) q = act(*it, std::move(q));
        r += q.scaled(term.coeff);
    }
    return r;
}

/// Applies the word right to left (the rightmost factor acts first).
inline RatPoly act(const OperatorWord& word, RatPoly p) {
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        p = std::visit([&](const auto& f) { return act(f, std::move(p)); }, *it);
    return p;
}

/// prod_{i<j} (x_j - x_i)/(j - i).
inline RatPoly scaled_vandermonde(int n) {
    std::vector<RatPoly> factors;
    Integer denom = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            factors.push_back(RatPoly::variable(n, j) - RatPoly::variable(n, i));
            denom *= (j - i);
        }
    }
    return product(std::move(factors), n).scaled(Rational(1) / Rational(denom));
}

inline RatPoly build_mn(int n) {
    require(n >= 0, "M_n needs n >= 0");
    RatPoly p = scaled_vandermonde(n);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            // (1 + fwd_b + fwd_a fwd_b) p
            RatPoly db = forward_difference(p, b);
            RatPoly dab = forward_difference(db, a);
            p += db;
            p += dab;
        }
    }
    return p;
}

/// Process-wide M_n memo with an optional on-disk cache in the polynomial
/// JSON format, file name `mn-<n>-v<format>.json`.
class MnStore {
public:
    static constexpr int kFormatVersion = 1;

    explicit MnStore(std::optional<std::filesystem::path> dir = std::nullopt) : dir_(std::move(dir)) {}

    void set_cache_dir(std::optional<std::filesystem::path> dir) {
        std::lock_guard lock(mu_);
        dir_ = std::move(dir);
    }

    const RatPoly& get(int n) {
        std::lock_guard lock(mu_);
        auto it = memo_.find(n);
        if (it != memo_.end()) return *it->second;
        auto poly = std::make_unique<RatPoly>(load_or_build(n));
        return *memo_.emplace(n, std::move(poly)).first->second;
    }

    std::filesystem::path cache_file(int n) const {
        return *dir_ / ("mn-" + std::to_string(n) + "-v" + std::to_string(kFormatVersion) + ".json");
    }

    int disk_hits() const { return disk_hits_; }
    int builds() const { return builds_; }

    void clear_memory() {
        std::lock_guard lock(mu_);
        memo_.clear();
    }

private:
    RatPoly load_or_build(int n) {
        if (dir_) {
            std::ifstream in(cache_file(n));
            if (in) {
                try {
                    auto j = nlohmann::json::parse(in);
                    if (j.value("n", -1) == n && j.value("format", -1) == kFormatVersion) {
                        auto p = poly_from_json<Rational>(j.at("poly"));
                        ++disk_hits_;
                        return p;
                    }
                } catch (const std::exception&) {
                    // unreadable entry: rebuild and overwrite
                }
            }
        }
        RatPoly p = build_mn(n);
        ++builds_;
        if (dir_) {
            std::error_code ec;
            std::filesystem::create_directories(*dir_, ec);
            const auto file = cache_file(n);
            const auto tmp = file.string() + ".tmp";
            {
                std::ofstream out(tmp);
                out << nlohmann::json{{"n", n}, {"format", kFormatVersion}, {"poly", poly_to_json(p)}}.dump();
            }
            std::filesystem::rename(tmp, file, ec);
        }
        return p;
    }

    std::mutex mu_;
    std::optional<std::filesystem::path> dir_;
    std::map<int, std::unique_ptr<RatPoly>> memo_;
    int disk_hits_ = 0;
    int builds_ = 0;
};

inline MnStore& default_mn_store() {
    static MnStore store;
    return store;
}

inline const RatPoly& mn(int n) { return default_mn_store().get(n); }

// ------------------------------------------------- truncated monotone triangles

inline void check_st_parameters(int n, const std::vector<int>& s, const std::vector<int>& t,
                                const std::vector<int>& boundary) {
    require(n >= 1, "order must be at least 1");
    require(s.size() + t.size() <= static_cast<std::size_t>(n), "l + r must not exceed n");
    require(is_weakly_decreasing(s), "s must be weakly decreasing");
    require(is_weakly_increasing(t), "t must be weakly increasing");
    for (int x : s) require(x >= 0, "s entries must be non-negative");
    for (int x : t) require(x >= 0, "t entries must be non-negative");
    require(boundary.size() == static_cast<std::size_t>(n), "boundary must have n values");
    require(is_weakly_increasing(boundary), "boundary must be weakly increasing");
}

/// (-fwd_{x_1})^{s_1}...(-fwd_{x_l})^{s_l} bwd_{x_{n-r+1}}^{t_{n-r+1}}...bwd_{x_n}^{t_n} M_n.
inline RatPoly truncated_polynomial(const RatPoly& mn_poly, const std::vector<int>& s, const std::vector<int>& t) {
    const int n = static_cast<int>(mn_poly.vars());
    OperatorWord word;
    for (std::size_t i = 0; i < s.size(); ++i) word.push_back(PrimitiveOp{i, OpKind::neg_forward_diff, s[i]});
    const std::size_t first = n - t.size();
    for (std::size_t k = 0; k < t.size(); ++k) word.push_back(PrimitiveOp{first + k, OpKind::backward_diff, t[k]});
    return act(word, mn_poly);
}

/// Number of (s,t)-trees of order n with the given boundary, via M_n.
inline Integer truncated_count(int n, const std::vector<int>& s, const std::vector<int>& t,
                               const std::vector<int>& boundary, MnStore& store = default_mn_store()) {
    check_st_parameters(n, s, t, boundary);
    return to_integer(evaluate(truncated_polynomial(store.get(n), s, t), boundary));
}

// ------------------------------------------------- per-variable functionals

/// [op x^d]_{x=0} for d = 0..max_degree, op a product of univariate operators.
inline std::vector<Rational> unary_functional(const std::vector<PrimitiveOp>& ops, int max_degree) {
    std::vector<Rational> out;
    for (int d = 0; d <= max_degree; ++d) {
        RatPoly p = RatPoly::variable(1, 0, d);
        for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
            PrimitiveOp op = *it;
            op.var = 0;
            p = act(op, std::move(p));
        }
        out.push_back(p.coefficient({0}));
    }
    return out;
}

/// sum_e c_e prod_k table[k][e_k] for a polynomial sum_e c_e x^e.
template <class V>
V functional_sum(const RatPoly& p, const std::vector<std::vector<V>>& tables, const V& zero, const V& one) {
    require(tables.size() == p.vars(), "one table per variable is required");
    V total = zero;
    for (const auto& [e, c] : p.terms()) {
        V term = one;
        for (std::size_t k = 0; k < e.size(); ++k) {
            require(e[k] >= 0 && static_cast<std::size_t>(e[k]) < tables[k].size(), "functional table too short");
            term = term * tables[k][e[k]];
        }
        if constexpr (std::is_same_v<V, Rational>) {
            total += c * term;
        } else {
            total += term.scaled(c);
        }
    }
    return total;
}

// ------------------------------------------------- weighted AST formula

/// Generating function in (P, Q) of order-n ASTs with 1-columns at the
/// given symmetric positions (exactly one 0, negatives before it, positives
/// after), weighted by P^{#10-columns left} Q^{#10-columns right}:
///
///   prod_{i<m} (1 - P bwd_i)(-bwd_i)^{-j_i-1} prod_{i>m} (1 + Q fwd_i) fwd_i^{j_i-1} M_{n-1} |_{x=0}
///
/// Result variables: 0 = P, 1 = Q.
inline IntPoly ast_weighted_count(const std::vector<int>& positions, MnStore& store = default_mn_store()) {
    const int n = static_cast<int>(positions.size());
    require(n >= 1, "positions must contain the central 0");
    const auto zeros = std::count(positions.begin(), positions.end(), 0);
    require(zeros == 1, "positions must contain exactly one 0 (the central column)");
    const int m = static_cast<int>(std::find(positions.begin(), positions.end(), 0) - positions.begin());
    for (int i = 0; i < m; ++i) require(positions[i] < 0, "positions left of the central 0 must be negative");
    for (int i = m + 1; i < n; ++i) require(positions[i] > 0, "positions right of the central 0 must be positive");

    const RatPoly& base = store.get(n - 1);
    const int maxdeg = std::max(0, n - 2);
    const RatPoly one2 = RatPoly::constant(2, 1);
    const RatPoly P = RatPoly::variable(2, 0);
    const RatPoly Q = RatPoly::variable(2, 1);
    std::vector<std::vector<RatPoly>> tables;
    for (int i = 0; i < n; ++i) {
        if (i == m) continue;
        const int j = positions[i];
        std::vector<PrimitiveOp> core, weighted;
        if (j < 0) {
            core = {PrimitiveOp{0, OpKind::neg_backward_diff, -j - 1}};
            weighted = {PrimitiveOp{0, OpKind::backward_diff, 1}, core[0]};
        } else {
            core = {PrimitiveOp{0, OpKind::forward_diff, j - 1}};
            weighted = {PrimitiveOp{0, OpKind::forward_diff, 1}, core[0]};
        }
        const auto a = unary_functional(core, maxdeg);
        const auto b = unary_functional(weighted, maxdeg);
        std::vector<RatPoly> col;
        for (int d = 0; d <= maxdeg; ++d) {
            if (j < 0)
                col.push_back(one2.scaled(a[d]) - P.scaled(b[d]));
            else
                col.push_back(one2.scaled(a[d]) + Q.scaled(b[d]));
        }
        tables.push_back(std::move(col));
    }
    RatPoly r = functional_sum(base, tables, RatPoly(2), one2);
    if (!r.is_integral()) throw internal_error("weighted AST count is not integral");
    return convert<Integer>(r);
}

// ------------------------------------------------- cycle identity

/// (-1)^{n-1} M_n(x_2, ..., x_n, x_1 - n) as a polynomial in x.
inline RatPoly cycled_mn(const RatPoly& mn_poly) {
    const std::size_t n = mn_poly.vars();
    if (n == 0) return mn_poly;
    // y_k = x_{k+1} for k < n-1, y_{n-1} = x_0 - n
    std::vector<std::size_t> sigma(n);
    for (std::size_t k = 0; k + 1 < n; ++k) sigma[k] = k + 1;
    sigma[n - 1] = 0;
    RatPoly r = shift(mn_poly.permuted(sigma), 0, -static_cast<long>(n));
    return (n - 1) % 2 == 0 ? r : RatPoly(-r);
}

inline VerdictRecord cycle_identity_check(int n, MnStore& store = default_mn_store()) {
    require(n >= 1, "order must be at least 1");
    const RatPoly& m = store.get(n);
    return make_verdict("cycle", {{"n", n}}, to_string(m), to_string(cycled_mn(m)));
}

}  // namespace astlab
