#pragma once

// Alternating sign triangles, alternating sign matrices and odd OOSASM
// triangles: validation, exhaustive enumeration and column statistics.
//
// Triangles of order n have rows 0..n-1 (top to bottom); row r holds
// 2(n-r)-1 entries in columns -(n-1-r)..(n-1-r). Columns use the symmetric
// indexing -(n-1)..(n-1) with the central column at 0.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "astlab/error.hpp"

namespace astlab {

struct TriangleArray {
    int order = 0;
    std::vector<std::vector<int>> rows;

    int row_halfwidth(int r) const { return order - 1 - r; }
    bool has(int r, int col) const { return r >= 0 && r < order && std::abs(col) <= row_halfwidth(r); }
    int at(int r, int col) const { return rows[r][col + row_halfwidth(r)]; }

    /// Bottom row of column `col` (the last row reaching it).
    int bottom_row(int col) const { return order - 1 - std::abs(col); }

    int column_sum(int col) const {
        int s = 0;
        for (int r = 0; r <= bottom_row(col); ++r) s += at(r, col);
        return s;
    }

    bool operator==(const TriangleArray&) const = default;
    auto operator<=>(const TriangleArray&) const = default;
};

struct Ast : TriangleArray {};
struct OddOosasmTriangle : TriangleArray {};

struct Asm {
    int order = 0;
    std::vector<std::vector<int>> rows;
    bool operator==(const Asm&) const = default;
};

namespace detail {

inline bool alternates_from_plus(const std::vector<int>& seq, int target) {
    int s = 0;
    for (int v : seq) {
        if (v < -1 || v > 1) return false;
        s += v;
        if (s < 0 || s > 1) return false;
    }
    return s == target;
}

inline TriangleArray blank_triangle(int n) {
    TriangleArray t;
    t.order = n;
    for (int r = 0; r < n; ++r) t.rows.emplace_back(2 * (n - r) - 1, 0);
    return t;
}

/// Row-major depth-first search over a triangle, values tried in the order
/// -1, 0, +1. Every column keeps top-down partial sums in {0,1}; row r runs
/// from `row_start(r)` and must finish at `row_end(r)`.
class TriangleSearch {
public:
    TriangleSearch(int n, std::function<int(int, const std::vector<int>&)> row_start,
                   std::function<int(int, const std::vector<int>&)> row_end)
        : n_(n), t_(blank_triangle(n)), colsum_(2 * n - 1, 0), row_start_(std::move(row_start)),
          row_end_(std::move(row_end)) {}

    void run(const std::function<void(const TriangleArray&)>& visit) {
        if (n_ == 0) return;
        visit_ = &visit;
        begin_row(0);
    }

    int colsum(int col) const { return colsum_[col + n_ - 1]; }

private:
    void begin_row(int r) {
        if (r == n_) {
            (*visit_)(t_);
            return;
        }
        const int start = row_start_(r, colsum_);
        cell(r, -(n_ - 1 - r), start);
    }

    void cell(int r, int col, int rowsum) {
        const int hw = n_ - 1 - r;
        if (col > hw) {
            if (rowsum == row_end_(r, colsum_)) begin_row(r + 1);
            return;
        }
        int& cs = colsum_[col + n_ - 1];
        for (int v = -1; v <= 1; ++v) {
            const int nc = cs + v;
            const int nr = rowsum + v;
            if (nc < 0 || nc > 1 || nr < 0 || nr > 1) continue;
            t_.rows[r][col + hw] = v;
            cs = nc;
            cell(r, col + 1, nr);
            cs -= v;
        }
        t_.rows[r][col + hw] = 0;
    }

    int n_;
    TriangleArray t_;
    std::vector<int> colsum_;
    std::function<int(int, const std::vector<int>&)> row_start_;
    std::function<int(int, const std::vector<int>&)> row_end_;
    const std::function<void(const TriangleArray&)>* visit_ = nullptr;
};

}  // namespace detail

// ---------------------------------------------------------------- ASTs

/// Throws validation_error unless `t` is an alternating sign triangle.
inline void validate(const Ast& t) {
    const int n = t.order;
    if (n < 1 || static_cast<int>(t.rows.size()) != n) throw validation_error("AST: wrong number of rows");
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(t.rows[r].size()) != 2 * (n - r) - 1) throw validation_error("AST: wrong row length");
        if (!detail::alternates_from_plus(t.rows[r], 1))
            throw validation_error("AST: row " + std::to_string(r + 1) + " does not alternate to sum 1");
    }
    for (int c = -(n - 1); c <= n - 1; ++c) {
        std::vector<int> col;
        for (int r = 0; r <= t.bottom_row(c); ++r) col.push_back(t.at(r, c));
        if (!detail::alternates_from_plus(col, t.column_sum(c)) || t.column_sum(c) < 0)
            throw validation_error("AST: column " + std::to_string(c) + " violates alternation");
    }
}

/// Visits every AST of order n in row-major lexicographic order (-1<0<1).
inline void for_each_ast(int n, const std::function<void(const Ast&)>& visit) {
    require(n >= 1, "AST order must be at least 1");
    detail::TriangleSearch search(
        n, [](int, const std::vector<int>&) { return 0; }, [](int, const std::vector<int>&) { return 1; });
    Ast a;
    search.run([&](const TriangleArray& t) {
        static_cast<TriangleArray&>(a) = t;
        visit(a);
    });
}

inline std::vector<Ast> enumerate_asts(int n) {
    std::vector<Ast> out;
    for_each_ast(n, [&](const Ast& a) { out.push_back(a); });
    return out;
}

/// 1-columns of an AST other than the central one.
struct OneColumnProfile {
    int order = 0;
    std::vector<int> positions;  ///< symmetric indexing, strictly increasing
    std::vector<bool> ten;       ///< true for a 10-column (bottom entry 0)
    int left_ten = 0;
    int right_ten = 0;
    int left_eleven = 0;
    int right_eleven = 0;

    /// Positions counted from the left starting at 0, central column skipped.
    std::vector<int> theorem_positions() const;
};

/// Symmetric column index -> 0-based index skipping the central column.
inline int symmetric_to_theorem(int n, int col) {
    require(col != 0, "the central column has no theorem index");
    return col < 0 ? col + n - 1 : col + n - 2;
}

inline int theorem_to_symmetric(int n, int j) {
    return j < n - 1 ? j - (n - 1) : j - (n - 2);
}

inline std::vector<int> OneColumnProfile::theorem_positions() const {
    std::vector<int> out;
    for (int c : positions) out.push_back(symmetric_to_theorem(order, c));
    return out;
}

inline OneColumnProfile one_column_profile(const Ast& t) {
    validate(t);
    OneColumnProfile p;
    p.order = t.order;
    const int n = t.order;
    for (int c = -(n - 1); c <= n - 1; ++c) {
        if (c == 0 || t.column_sum(c) != 1) continue;
        const bool ten = t.at(t.bottom_row(c), c) == 0;
        p.positions.push_back(c);
        p.ten.push_back(ten);
        if (c < 0) (ten ? p.left_ten : p.left_eleven)++;
        else (ten ? p.right_ten : p.right_eleven)++;
    }
    if (static_cast<int>(p.positions.size()) != n - 1 || t.column_sum(0) != 1)
        throw internal_error("AST does not have exactly n 1-columns");
    return p;
}

/// #11-columns left of center + #10-columns right of center + 1.
inline int rho(const Ast& t) {
    const auto p = one_column_profile(t);
    return p.left_eleven + p.right_ten + 1;
}

// ---------------------------------------------------------------- ASMs

inline void validate(const Asm& a) {
    const int n = a.order;
    if (n < 1 || static_cast<int>(a.rows.size()) != n) throw validation_error("ASM: wrong number of rows");
    for (const auto& row : a.rows) {
        if (static_cast<int>(row.size()) != n) throw validation_error("ASM: wrong row length");
        if (!detail::alternates_from_plus(row, 1)) throw validation_error("ASM: row violates alternation");
    }
    for (int j = 0; j < n; ++j) {
        std::vector<int> col;
        for (int i = 0; i < n; ++i) col.push_back(a.rows[i][j]);
        if (!detail::alternates_from_plus(col, 1)) throw validation_error("ASM: column violates alternation");
    }
}

/// Visits every ASM of order n in row-major lexicographic order (-1<0<1).
inline void for_each_asm(int n, const std::function<void(const Asm&)>& visit) {
    require(n >= 1, "ASM order must be at least 1");
    Asm a;
    a.order = n;
    a.rows.assign(n, std::vector<int>(n, 0));
    std::vector<int> colsum(n, 0);
    std::function<void(int, int, int)> cell = [&](int i, int j, int rowsum) {
        if (j == n) {
            if (rowsum != 1) return;
            if (i + 1 == n) visit(a);
            else cell(i + 1, 0, 0);
            return;
        }
        for (int v = -1; v <= 1; ++v) {
            const int nc = colsum[j] + v;
            const int nr = rowsum + v;
            if (nc < 0 || nc > 1 || nr < 0 || nr > 1) continue;
            if (i + 1 == n && nc != 1) continue;
            a.rows[i][j] = v;
            colsum[j] = nc;
            cell(i, j + 1, nr);
            colsum[j] -= v;
        }
        a.rows[i][j] = 0;
    };
    cell(0, 0, 0);
}

inline std::vector<Asm> enumerate_asms(int n) {
    std::vector<Asm> out;
    for_each_asm(n, [&](const Asm& a) { out.push_back(a); });
    return out;
}

/// 1-based column of the unique 1 in the top row.
inline int asm_top_one_column(const Asm& a) {
    validate(a);
    for (int j = 0; j < a.order; ++j)
        if (a.rows[0][j] == 1) return j + 1;
    throw internal_error("ASM top row without a 1");
}

// ------------------------------------------------- odd OOSASM triangles

/// The hook sequence for j = 0..n-1: column j top-down, row j+1, then
/// column 2n-j bottom-up (1-based columns; empty parts for j = 0).
inline std::vector<int> oosasm_hook(const TriangleArray& t, int j) {
    const int n = t.order;
    std::vector<int> seq;
    const int left = j - n;   // symmetric index of column j
    const int right = n - j;  // symmetric index of column 2n-j
    for (int r = 0; r < j; ++r) seq.push_back(t.at(r, left));
    for (int v : t.rows[j]) seq.push_back(v);
    for (int r = j - 1; r >= 0; --r) seq.push_back(t.at(r, right));
    return seq;
}

inline void validate(const OddOosasmTriangle& t) {
    const int n = t.order;
    if (n < 1 || static_cast<int>(t.rows.size()) != n) throw validation_error("OOSASM: wrong number of rows");
    for (int r = 0; r < n; ++r)
        if (static_cast<int>(t.rows[r].size()) != 2 * (n - r) - 1) throw validation_error("OOSASM: wrong row length");
    for (int j = 0; j < n; ++j)
        if (!detail::alternates_from_plus(oosasm_hook(t, j), 1))
            throw validation_error("OOSASM: hook " + std::to_string(j) + " does not alternate to sum 1");
    std::vector<int> central;
    for (int r = 0; r < n; ++r) central.push_back(t.at(r, 0));
    if (!detail::alternates_from_plus(central, t.column_sum(0)))
        throw validation_error("OOSASM: central column violates alternation");
}

/// Non-central columns with sum 1 (symmetric indexing).
inline std::vector<int> oosasm_one_columns(const OddOosasmTriangle& t) {
    std::vector<int> out;
    for (int c = -(t.order - 1); c <= t.order - 1; ++c)
        if (c != 0 && t.column_sum(c) == 1) out.push_back(c);
    return out;
}

/// Visits every odd OOSASM triangle of order n in row-major lexicographic order.
inline void for_each_oosasm_triangle(int n, const std::function<void(const OddOosasmTriangle&)>& visit) {
    require(n >= 1, "OOSASM triangle order must be at least 1");
    // Row r closes hook r: it starts at the sum of symmetric column r-n
    // (rows above) and must end at 1 minus the sum of column n-r.
    auto colsum = [n](const std::vector<int>& cs, int col) {
        return (col < -(n - 1) || col > n - 1) ? 0 : cs[col + n - 1];
    };
    detail::TriangleSearch search(
        n, [&](int r, const std::vector<int>& cs) { return colsum(cs, r - n); },
        [&](int r, const std::vector<int>& cs) { return 1 - colsum(cs, n - r); });
    OddOosasmTriangle o;
    search.run([&](const TriangleArray& t) {
        static_cast<TriangleArray&>(o) = t;
        visit(o);
    });
}

inline std::vector<OddOosasmTriangle> enumerate_oosasm_triangles(int n) {
    std::vector<OddOosasmTriangle> out;
    for_each_oosasm_triangle(n, [&](const OddOosasmTriangle& t) { out.push_back(t); });
    return out;
}

}  // namespace astlab
