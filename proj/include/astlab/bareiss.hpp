#pragma once

// Fraction-free Gaussian elimination (Bareiss) over an integral domain.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "astlab/error.hpp"
#include "astlab/laurent_poly.hpp"
#include "astlab/numeric.hpp"

namespace astlab {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Ring operations Bareiss needs for T.
template <class T>
struct BareissRing;

template <>
struct BareissRing<Integer> {
    static bool is_zero(const Integer& x) { return sgn(x) == 0; }
    static Integer one() { return 1; }
    static Integer exact_div(const Integer& a, const Integer& b) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
};

/// Exact division of univariate integer Laurent polynomials.
inline IntPoly divide_exact(IntPoly a, const IntPoly& b) {
    require(a.vars() == 1 && b.vars() == 1, "divide_exact is univariate");
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    const auto& [eb, cb] = *b.terms().rbegin();
    IntPoly q(1);
    while (!a.is_zero()) {
        const auto [ea, ca] = *a.terms().rbegin();
        if (ea[0] < eb[0] || !mpz_divisible_p(ca.get_mpz_t(), cb.get_mpz_t()))
            throw internal_error("polynomial division is not exact");
        IntPoly t = IntPoly::monomial({ea[0] - eb[0]}, BareissRing<Integer>::exact_div(ca, cb));
        q += t;
        a -= t * b;
    }
    return q;
}

template <>
struct BareissRing<IntPoly> {
    static bool is_zero(const IntPoly& x) { return x.is_zero(); }
    static IntPoly one() { return IntPoly::constant(1, 1); }
    static IntPoly exact_div(const IntPoly& a, const IntPoly& b) { return divide_exact(a, b); }
};

/// Determinant by fraction-free elimination with row pivoting on zeros.
template <class T>
T determinant(Matrix<T> m) {
    using R = BareissRing<T>;
    const std::size_t n = m.rows();
    require(m.cols() == n, "determinant of a non-square matrix");
    if (n == 0) return R::one();
    bool negate = false;
    T prev = R::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (R::is_zero(m(k, k))) {
            std::size_t p = k + 1;
            while (p < n && R::is_zero(m(p, k))) ++p;
            if (p == n) return T(m(0, 0) - m(0, 0));
            m.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = R::exact_div(num, prev);
            }
            m(i, k) = T(m(i, k) - m(i, k));
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    if (negate) d = T(-d);
    return d;
}

/// Solves A x = b exactly; std::nullopt when A is singular.
inline std::optional<std::vector<Rational>> solve(Matrix<Integer> a, std::vector<Integer> b) {
    const std::size_t n = a.rows();
    require(a.cols() == n && b.size() == n, "solve needs a square system");
    using R = BareissRing<Integer>;
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a(p, k)) == 0) ++p;
            if (p == n) return std::nullopt;
            a.swap_rows(k, p);
            std::swap(b[k], b[p]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = R::exact_div(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
            b[i] = R::exact_div(a(k, k) * b[i] - a(i, k) * b[k], prev);
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= Rational(a(i, j)) * x[j];
        x[i] = s / Rational(a(i, i));
        x[i].canonicalize();
    }
    return x;
}

}  // namespace astlab
