#pragma once

// Generating functions for ASTs by 1-column positions:
//
//   F_n(X, t) = prod_i (t + X_i) prod_{i<j} (1 + X_i + X_i X_j)(X_j - X_i)
//
// in X_1..X_{n-1} and t. The coefficient of X^j t^{r-1} counts order-n ASTs
// with 1-columns at j (0-based, central column skipped) and rho = r; at t = 1
// it counts all ASTs with those 1-columns.

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "astlab/error.hpp"
#include "astlab/laurent_poly.hpp"
#include "astlab/monotone.hpp"
#include "astlab/numeric.hpp"
#include "astlab/triangles.hpp"

namespace astlab {

/// Orders up to this bound are expanded in full; larger orders answer
/// coefficient queries by a product truncated to the target box.
inline constexpr int kFullExpansionMaxOrder = 8;

namespace detail {

enum class MiddleFactor { left, right };  // 1 + X_i + X_i X_j  vs  1 + X_j + X_i X_j

/// Factor list of prod_i (c + X_i) prod_{i<j} (middle)(X_j - X_i) with the
/// constant c being t (variable index k) or 1.
inline std::vector<IntPoly> genfun_factors(int k, bool with_t, MiddleFactor middle) {
    const std::size_t vars = k + (with_t ? 1 : 0);
    const IntPoly one = IntPoly::constant(vars, 1);
    auto x = [&](int i) { return IntPoly::variable(vars, i); };
    std::vector<IntPoly> fs;
    for (int i = 0; i < k; ++i) fs.push_back((with_t ? IntPoly::variable(vars, k) : one) + x(i));
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            fs.push_back(one + (middle == MiddleFactor::left ? x(i) : x(j)) + x(i) * x(j));
            fs.push_back(x(j) - x(i));
        }
    }
    return fs;
}

/// Coefficient of X^target in the product of factors with non-negative
/// exponents, multiplying factor by factor and discarding exponents that
/// already exceed the target.
inline Integer truncated_product_coefficient(const std::vector<IntPoly>& factors, const Exponents& target) {
    const std::size_t vars = target.size();
    IntPoly acc = IntPoly::constant(vars, 1);
    auto below = [&](const Exponents& e) {
        for (std::size_t i = 0; i < vars; ++i)
            if (e[i] > target[i]) return false;
        return true;
    };
    for (const auto& f : factors) {
        acc = multiply_filtered(acc, f, below);
        if (acc.is_zero()) return 0;
    }
    return acc.coefficient(target);
}

template <class Build>
const IntPoly& memoized(std::map<int, std::unique_ptr<IntPoly>>& memo, std::mutex& mu, int n, Build build) {
    std::lock_guard lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return *it->second;
    return *memo.emplace(n, std::make_unique<IntPoly>(build())).first->second;
}

}  // namespace detail

/// F_n(X, t): variables 0..n-2 are X_1..X_{n-1}, variable n-1 is t.
class AstGenFun {
public:
    explicit AstGenFun(int n) : n_(n) {
        require(n >= 1, "order must be at least 1");
        poly_ = product(detail::genfun_factors(n - 1, true, detail::MiddleFactor::left), n);
    }

    int order() const { return n_; }
    const IntPoly& polynomial() const { return poly_; }
    std::size_t t_index() const { return n_ - 1; }

    /// t = 1 specialisation in the X variables only.
    IntPoly gfun() const {
        IntPoly r(n_ - 1);
        for (const auto& [e, c] : poly_.terms()) r.add_term(Exponents(e.begin(), e.end() - 1), c);
        return r;
    }

private:
    int n_;
    IntPoly poly_;
};

inline const AstGenFun& ast_genfun(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<AstGenFun>> memo;
    std::lock_guard lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return *it->second;
    return *memo.emplace(n, std::make_unique<AstGenFun>(n)).first->second;
}

/// The one-column generating function expanded in X_1..X_{n-1}.
inline const IntPoly& gfun_poly(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<IntPoly>> memo;
    require(n >= 1, "order must be at least 1");
    return detail::memoized(memo, mu, n, [n] { return ast_genfun(n).gfun(); });
}

inline void check_star_positions(int n, const std::vector<int>& j) {
    require(n >= 1, "order must be at least 1");
    require(j.size() == static_cast<std::size_t>(n - 1), "expected n-1 positions");
}

/// True when j is strictly increasing inside [0, 2n-3].
inline bool is_combinatorial_range(int n, const std::vector<int>& j) {
    return is_strictly_increasing(j) && (j.empty() || (j.front() >= 0 && j.back() <= 2 * n - 3));
}

/// Extended sequences: values left of the centre (< n-1) precede the others.
inline bool is_extended_sequence(int n, const std::vector<int>& j) {
    bool right = false;
    for (int x : j) {
        if (x >= n - 1) right = true;
        else if (right) return false;
    }
    return true;
}

/// Coefficient of X^j in the one-column generating function.
inline Integer star(int n, const std::vector<int>& j) {
    check_star_positions(n, j);
    require(is_combinatorial_range(n, j) || is_extended_sequence(n, j),
            "positions must be strictly increasing in [0, 2n-3] or an extended sequence");
    for (int x : j)
        if (x < 0) return 0;
    if (n <= kFullExpansionMaxOrder) return gfun_poly(n).coefficient(j);
    return detail::truncated_product_coefficient(
        detail::genfun_factors(n - 1, false, detail::MiddleFactor::left), j);
}

/// Coefficient of X^j t^{r-1} in F_n.
inline Integer star_refined(int n, const std::vector<int>& j, int r) {
    check_star_positions(n, j);
    require(r >= 1 && r <= n, "rho must lie in [1, n]");
    require(is_combinatorial_range(n, j) || is_extended_sequence(n, j),
            "positions must be strictly increasing in [0, 2n-3] or an extended sequence");
    for (int x : j)
        if (x < 0) return 0;
    Exponents e = j;
    e.push_back(r - 1);
    if (n <= kFullExpansionMaxOrder) return ast_genfun(n).polynomial().coefficient(e);
    return detail::truncated_product_coefficient(detail::genfun_factors(n - 1, true, detail::MiddleFactor::left), e);
}

/// |[n-1-i, n-2+i] ∩ j| >= i for i = 1..n-1.
inline bool catalan_support(int n, const std::vector<int>& j) {
    for (int i = 1; i <= n - 1; ++i) {
        const auto hits = std::count_if(j.begin(), j.end(), [&](int x) { return x >= n - 1 - i && x <= n - 2 + i; });
        if (hits < i) return false;
    }
    return true;
}

/// All strictly increasing (n-1)-subsets of [0, 2n-3], lexicographic.
inline std::vector<std::vector<int>> increasing_positions(int n) {
    std::vector<std::vector<int>> out;
    const int k = n - 1;
    const int top = 2 * n - 3;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int x = from; x <= top - (k - 1 - static_cast<int>(cur.size())); ++x) {
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

/// Entry r-1 holds the number of order-n ASTs with rho = r, read off F_n.
inline std::vector<Integer> rho_distribution(int n) {
    require(n >= 1, "order must be at least 1");
    std::vector<Integer> dist(n, 0);
    for (const auto& [e, c] : ast_genfun(n).polynomial().terms()) {
        Exponents j(e.begin(), e.end() - 1);
        if (!is_combinatorial_range(n, j)) continue;
        dist.at(e.back()) += c;
    }
    return dist;
}

// ------------------------------------------------------------------- Psi

/// prod_i (1 + X_i) prod_{i<j} (1 + X_j + X_i X_j)(X_j - X_i).
inline const IntPoly& psi_poly(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<IntPoly>> memo;
    require(n >= 1, "order must be at least 1");
    return detail::memoized(memo, mu, n, [n] {
        return product(detail::genfun_factors(n - 1, false, detail::MiddleFactor::right), n - 1);
    });
}

/// Membership in A_n: strictly increasing, 0 <= alpha_1, alpha_i <= 2i-1.
inline bool in_alpha_set(int n, const std::vector<int>& alpha) {
    if (alpha.size() != static_cast<std::size_t>(n - 1) || !is_strictly_increasing(alpha)) return false;
    if (!alpha.empty() && alpha.front() < 0) return false;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] > 2 * static_cast<int>(i + 1) - 1) return false;
    return true;
}

inline Integer psi_coefficient(int n, const std::vector<int>& alpha) {
    if (!in_alpha_set(n, alpha)) throw invalid_argument("alpha is not in A_n");
    return psi_poly(n).coefficient(alpha);
}

}  // namespace astlab
