#pragma once

// Truncated Laurent series with an explicit region of exact coefficients.
//
// A SeriesBox stands for a (possibly infinite) series whose support is
// bounded below by `box.lo` componentwise (and by sum(lo) in total degree).
// The stored polynomial agrees with the series at every exponent inside the
// box and stores nothing outside it.

#include <algorithm>
#include <limits>
#include <optional>
#include <vector>

#include "astlab/error.hpp"
#include "astlab/laurent_poly.hpp"

namespace astlab {

inline constexpr int kUnbounded = 1 << 28;

struct ExponentBox {
    std::vector<int> lo;
    std::vector<int> hi;
    long max_total = kUnbounded;  ///< total-degree cap

    static ExponentBox uniform(std::size_t vars, int lo, int hi, long max_total = kUnbounded) {
        return {std::vector<int>(vars, lo), std::vector<int>(vars, hi), max_total};
    }

    std::size_t vars() const { return lo.size(); }
    long min_total() const { return std::accumulate(lo.begin(), lo.end(), 0L); }

    bool contains(const Exponents& e) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] < lo[i] || e[i] > hi[i]) return false;
        return total_degree(e) <= max_total;
    }

    /// Every exponent vector in the box; requires finite bounds.
    std::vector<Exponents> points() const {
        std::vector<Exponents> out;
        for (int h : hi) require(h < kUnbounded, "cannot list points of an unbounded box");
        Exponents e = lo;
        if (e.empty()) return {e};
        while (true) {
            if (total_degree(e) <= max_total) out.push_back(e);
            std::size_t i = 0;
            while (i < e.size() && e[i] == hi[i]) e[i] = lo[i], ++i;
            if (i == e.size()) break;
            ++e[i];
        }
        return out;
    }
};

template <class Coeff>
struct SeriesBox {
    LaurentPoly<Coeff> poly;
    ExponentBox box;

    /// A polynomial viewed as a series: exact everywhere.
    static SeriesBox exact(const LaurentPoly<Coeff>& p) {
        ExponentBox b;
        b.lo = p.min_exponents();
        b.hi.assign(p.vars(), kUnbounded);
        return {p, b};
    }

    /// Inside the box, or below the support bound in some variable (and so
    /// known to be zero).
    bool exact_at(const Exponents& e) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] < box.lo[i]) return true;
        return box.contains(e);
    }

    Coeff coefficient(const Exponents& e) const {
        if (!exact_at(e)) throw invalid_argument("coefficient query outside the exact region of a series");
        return poly.coefficient(e);
    }
};

namespace detail {
inline int sat_add(int a, int b) {
    if (a >= kUnbounded || b >= kUnbounded) return kUnbounded;
    return std::min(a + b, kUnbounded);
}
inline long sat_add(long a, long b) {
    if (a >= kUnbounded || b >= kUnbounded) return kUnbounded;
    return std::min(a + b, static_cast<long>(kUnbounded));
}
}  // namespace detail

/// Product of two truncated series; the exact region shrinks so that no
/// coefficient inside it depends on a truncated term of either factor.
template <class Coeff>
SeriesBox<Coeff> operator*(const SeriesBox<Coeff>& a, const SeriesBox<Coeff>& b) {
    const std::size_t k = a.box.vars();
    if (b.box.vars() != k) throw arity_mismatch("series boxes of different arity");
    ExponentBox box;
    box.lo.resize(k);
    box.hi.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        box.lo[i] = a.box.lo[i] + b.box.lo[i];
        box.hi[i] = std::min(detail::sat_add(a.box.hi[i], b.box.lo[i]), detail::sat_add(b.box.hi[i], a.box.lo[i]));
    }
    box.max_total = std::min(detail::sat_add(a.box.max_total, b.box.min_total()),
                             detail::sat_add(b.box.max_total, a.box.min_total()));
    auto poly = multiply_filtered(a.poly, b.poly, [&](const Exponents& e) { return box.contains(e); });
    return {std::move(poly), std::move(box)};
}

/// Expands prod_f (1 - X^{m_f})^{-1} as a power series, exact inside `box`.
/// Each m_f must be non-zero with non-negative entries; `box.lo` must be 0.
template <class Coeff>
SeriesBox<Coeff> geometric_truncate(const std::vector<Exponents>& factors, const ExponentBox& box) {
    const std::size_t k = box.vars();
    for (int l : box.lo) require(l == 0, "geometric expansion box must start at exponent 0");
    SeriesBox<Coeff> acc{LaurentPoly<Coeff>::constant(k, Coeff(1)), box};
    for (const auto& m : factors) {
        if (m.size() != k) throw arity_mismatch("geometric factor has wrong arity");
        bool positive = false;
        for (int x : m) {
            if (x < 0) throw invalid_argument("geometric factor 1 - X^m needs non-negative exponents");
            positive = positive || x > 0;
        }
        if (!positive) throw invalid_argument("geometric factor 1 - X^0 is not invertible as a series");
        bool bounded = box.max_total < kUnbounded;
        for (std::size_t i = 0; i < k; ++i) bounded = bounded || (m[i] > 0 && box.hi[i] < kUnbounded);
        if (!bounded) throw invalid_argument("geometric factor is unbounded inside the box");
        LaurentPoly<Coeff> series(k);
        Exponents e(k, 0);
        while (box.contains(e)) {
            series.add_term(e, Coeff(1));
            for (std::size_t i = 0; i < k; ++i) e[i] += m[i];
        }
        acc = acc * SeriesBox<Coeff>{std::move(series), box};
    }
    return acc;
}

/// Coefficientwise comparison of two series over the intersection of
/// their exact regions restricted to `region`.
template <class Coeff>
bool agree_on(const SeriesBox<Coeff>& a, const SeriesBox<Coeff>& b, const ExponentBox& region) {
    for (const auto& e : region.points()) {
        if (!a.exact_at(e) || !b.exact_at(e))
            throw invalid_argument("comparison region exceeds the exact region of a series");
        if (a.poly.coefficient(e) != b.poly.coefficient(e)) return false;
    }
    return true;
}

}  // namespace astlab
