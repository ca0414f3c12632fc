#pragma once

// Sparse multivariate Laurent polynomials with exact coefficients.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "astlab/error.hpp"
#include "astlab/numeric.hpp"

namespace astlab {

using Exponents = std::vector<int>;

inline long total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0L); }

/// Canonical term order: total degree first, then lexicographic.
struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const long da = total_degree(a);
        const long db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

template <class Coeff>
class LaurentPoly {
public:
    using coeff_type = Coeff;
    using term_map = std::map<Exponents, Coeff, GradedLex>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t vars) : vars_(vars) {}

    static LaurentPoly constant(std::size_t vars, const Coeff& c) {
        LaurentPoly p(vars);
        p.add_term(Exponents(vars, 0), c);
        return p;
    }

    static LaurentPoly monomial(Exponents e, const Coeff& c = Coeff(1)) {
        LaurentPoly p(e.size());
        p.add_term(e, c);
        return p;
    }

    static LaurentPoly variable(std::size_t vars, std::size_t index, int power = 1) {
        require(index < vars, "variable index out of range");
        Exponents e(vars, 0);
        e[index] = power;
        return monomial(std::move(e));
    }

    std::size_t vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const term_map& terms() const { return terms_; }

    Coeff coefficient(const Exponents& e) const {
        check_arity(e.size());
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    /// Adds c * X^e to the polynomial, dropping the term if it cancels.
    void add_term(const Exponents& e, const Coeff& c) {
        check_arity(e.size());
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        check_arity(o.vars_);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) {
        check_arity(o.vars_);
        for (const auto& [e, c] : o.terms_) add_term(e, Coeff(-c));
        return *this;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(LaurentPoly a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        return multiply_filtered(a, b, [](const Exponents&) { return true; });
    }

    /// Product keeping only result exponents accepted by `keep`.
    template <class Keep>
    friend LaurentPoly multiply_filtered(const LaurentPoly& a, const LaurentPoly& b, Keep&& keep) {
        a.check_arity(b.vars_);
        LaurentPoly r(a.vars_);
        Exponents e(a.vars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                if (!keep(e)) continue;
                auto [it, inserted] = r.terms_.try_emplace(e, ca * cb);
                if (!inserted) it->second += ca * cb;
            }
        }
        std::erase_if(r.terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
        return r;
    }

    LaurentPoly scaled(const Coeff& s) const {
        if (sgn(s) == 0) return LaurentPoly(vars_);
        LaurentPoly r = *this;
        for (auto& [e, c] : r.terms_) c *= s;
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    bool is_integral() const {
        if constexpr (std::is_same_v<Coeff, Rational>) {
            return std::all_of(terms_.begin(), terms_.end(),
                               [](const auto& kv) { return kv.second.get_den() == 1; });
        } else {
            return true;
        }
    }

    int max_exponent(std::size_t var) const {
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e[var] > m) m = e[var];
            first = false;
        }
        return m;
    }

    int min_exponent(std::size_t var) const {
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e[var] < m) m = e[var];
            first = false;
        }
        return m;
    }

    /// Componentwise minimum exponent (zeros for the zero polynomial).
    Exponents min_exponents() const {
        Exponents m(vars_, 0);
        for (std::size_t v = 0; v < vars_; ++v) m[v] = min_exponent(v);
        return m;
    }

    template <class Pred>
    LaurentPoly filtered(Pred keep) const {
        LaurentPoly r(vars_);
        for (const auto& [e, c] : terms_)
            if (keep(e)) r.terms_.emplace_hint(r.terms_.end(), e, c);
        return r;
    }

    /// Returns f(x_{sigma(0)}, ..., x_{sigma(k-1)}).
    LaurentPoly permuted(std::span<const std::size_t> sigma) const {
        check_arity(sigma.size());
        LaurentPoly r(vars_);
        Exponents e(vars_);
        for (const auto& [ex, c] : terms_) {
            for (std::size_t i = 0; i < vars_; ++i) e[sigma[i]] = ex[i];
            r.terms_.emplace(e, c);
        }
        return r;
    }

private:
    void check_arity(std::size_t k) const {
        if (k != vars_)
            throw arity_mismatch("polynomial has " + std::to_string(vars_) + " variables, operand has " +
                                 std::to_string(k));
    }

    std::size_t vars_ = 0;
    term_map terms_;
};

using IntPoly = LaurentPoly<Integer>;
using RatPoly = LaurentPoly<Rational>;

template <class To, class From>
LaurentPoly<To> convert(const LaurentPoly<From>& p) {
    LaurentPoly<To> r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if constexpr (std::is_same_v<To, Integer> && std::is_same_v<From, Rational>) {
            r.add_term(e, to_integer(c));
        } else {
            r.add_term(e, To(c));
        }
    }
    return r;
}

/// Product of all factors by balanced binary splitting.
template <class Coeff>
LaurentPoly<Coeff> product(std::vector<LaurentPoly<Coeff>> factors, std::size_t vars) {
    if (factors.empty()) return LaurentPoly<Coeff>::constant(vars, Coeff(1));
    while (factors.size() > 1) {
        std::vector<LaurentPoly<Coeff>> next;
        next.reserve((factors.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < factors.size(); i += 2) next.push_back(factors[i] * factors[i + 1]);
        if (factors.size() % 2 == 1) next.push_back(std::move(factors.back()));
        factors = std::move(next);
    }
    return std::move(factors.front());
}

/// Sign of a permutation given in one-line notation.
inline int permutation_sign(std::span<const std::size_t> sigma) {
    int inversions = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

namespace detail {

template <class Coeff>
LaurentPoly<Coeff> permutation_sum(const LaurentPoly<Coeff>& p, bool signed_sum) {
    std::vector<std::size_t> sigma(p.vars());
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    LaurentPoly<Coeff> r(p.vars());
    do {
        LaurentPoly<Coeff> q = p.permuted(sigma);
        if (signed_sum && permutation_sign(sigma) < 0)
            r -= q;
        else
            r += q;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return r;
}

}  // namespace detail

/// Sum over all permutations of the variables.
template <class Coeff>
LaurentPoly<Coeff> symmetrize(const LaurentPoly<Coeff>& p) {
    return detail::permutation_sum(p, false);
}

/// Signed sum over all permutations of the variables.
template <class Coeff>
LaurentPoly<Coeff> antisymmetrize(const LaurentPoly<Coeff>& p) {
    return detail::permutation_sum(p, true);
}

/// Substitutes `value` for variable `var`; the variable stays in the arity
/// with exponent 0. Negative exponents require a non-zero rational value.
template <class Coeff>
LaurentPoly<Coeff> specialize(const LaurentPoly<Coeff>& p, std::size_t var, const Coeff& value) {
    LaurentPoly<Coeff> r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        Exponents f = e;
        f[var] = 0;
        Coeff pw(1);
        const int k = e[var];
        for (int i = 0; i < std::abs(k); ++i) pw *= value;
        if (k < 0) {
            if constexpr (std::is_same_v<Coeff, Integer>) {
                require(value == 1 || value == -1, "integer specialization at a negative exponent");
            }
            pw = Coeff(1) / pw;
        }
        r.add_term(f, c * pw);
    }
    return r;
}

/// Evaluates a polynomial at an exact point.
template <class Coeff, class Point>
Coeff evaluate(const LaurentPoly<Coeff>& p, const Point& x) {
    require(x.size() == p.vars(), "evaluation point has wrong arity");
    Coeff sum(0);
    for (const auto& [e, c] : p.terms()) {
        Coeff term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            Coeff xi(x[i]);
            if (e[i] < 0) {
                require(sgn(xi) != 0, "evaluation of a negative power at 0");
                Coeff inv = Coeff(1) / xi;
                for (int k = 0; k < -e[i]; ++k) term *= inv;
            } else {
                for (int k = 0; k < e[i]; ++k) term *= xi;
            }
        }
        sum += term;
    }
    return sum;
}

/// Human-readable rendering, e.g. "2*t + 3*t^2".
template <class Coeff>
std::string to_string(const LaurentPoly<Coeff>& p, const std::vector<std::string>& names = {}) {
    if (p.is_zero()) return "0";
    auto name = [&](std::size_t i) {
        return i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    };
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Coeff a = c;
        if (!first) {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        bool constant = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
        if (constant) {
            os << a.get_str();
            continue;
        }
        if (a == -1)
            os << "-";
        else if (a != 1)
            os << a.get_str() << "*";
        bool firstvar = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!firstvar) os << "*";
            firstvar = false;
            os << name(i);
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace astlab
