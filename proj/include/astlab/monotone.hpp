#pragma once

// Monotone triangles, bounded Gelfand-Tsetlin patterns and (s,t)-trees.
//
// Triangular patterns are stored top-down: row i (0-based) has i+1 entries
// m[i][0..i]. The j-th NE-diagonal (1-based, from the left) is
// {m[i][j-1] : i >= j-1}; the k-th SE-diagonal is {m[i][j] : n-1-i+j+1 = k},
// i.e. it ends at m[n-1][k-1].

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "astlab/error.hpp"
#include "astlab/triangles.hpp"

namespace astlab {

using Pattern = std::vector<std::vector<int>>;

struct MonotoneTriangle {
    Pattern rows;
    int order() const { return static_cast<int>(rows.size()); }
    bool operator==(const MonotoneTriangle&) const = default;
};

struct GtPatternBounded {
    Pattern rows;
    int weight = 0;  ///< entries m[i][i] equal to their bound i+1
    int order() const { return static_cast<int>(rows.size()); }
    bool operator==(const GtPatternBounded&) const = default;
};

inline bool is_weakly_increasing(const std::vector<int>& v) { return std::is_sorted(v.begin(), v.end()); }

inline bool is_weakly_decreasing(const std::vector<int>& v) {
    return std::is_sorted(v.begin(), v.end(), std::greater<>());
}

inline bool is_strictly_increasing(const std::vector<int>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

// ------------------------------------------------------ monotone triangles

/// Visits all monotone triangles with the given (weakly increasing) bottom
/// row; rows are chosen bottom-up, each lexicographically ascending.
inline void for_each_monotone_triangle(const std::vector<int>& bottom,
                                       const std::function<void(const MonotoneTriangle&)>& visit) {
    require(!bottom.empty(), "bottom row must be non-empty");
    require(is_weakly_increasing(bottom), "bottom row must be weakly increasing");
    const int n = static_cast<int>(bottom.size());
    MonotoneTriangle t;
    t.rows.resize(n);
    for (int i = 0; i < n; ++i) t.rows[i].assign(i + 1, 0);
    t.rows[n - 1] = bottom;
    std::function<void(int, int)> fill = [&](int i, int j) {
        if (i < 0) {
            visit(t);
            return;
        }
        if (j > i) {
            fill(i - 1, 0);
            return;
        }
        int lo = t.rows[i + 1][j];
        if (j > 0) lo = std::max(lo, t.rows[i][j - 1] + 1);
        for (int v = lo; v <= t.rows[i + 1][j + 1]; ++v) {
            t.rows[i][j] = v;
            fill(i, j + 1);
        }
    };
    fill(n - 2, 0);
}

inline std::vector<MonotoneTriangle> enumerate_monotone_triangles(const std::vector<int>& bottom) {
    std::vector<MonotoneTriangle> out;
    for_each_monotone_triangle(bottom, [&](const MonotoneTriangle& t) { out.push_back(t); });
    return out;
}

// ------------------------------------------------------ bounded GT patterns

/// Visits GT patterns with n rows whose j-th NE-diagonal lies in [1, j].
inline void for_each_gt_bounded(int n, const std::function<void(const GtPatternBounded&)>& visit) {
    require(n >= 1, "GT pattern order must be at least 1");
    GtPatternBounded g;
    g.rows.resize(n);
    for (int i = 0; i < n; ++i) g.rows[i].assign(i + 1, 0);
    std::function<void(int, int)> fill = [&](int i, int j) {
        if (i < 0) {
            g.weight = 0;
            for (int k = 0; k < n; ++k) g.weight += g.rows[k][k] == k + 1;
            visit(g);
            return;
        }
        if (j > i) {
            fill(i - 1, 0);
            return;
        }
        int lo = 1;
        int hi = j + 1;
        if (i + 1 < n) {
            lo = std::max(lo, g.rows[i + 1][j]);
            hi = std::min(hi, g.rows[i + 1][j + 1]);
        } else if (j > 0) {
            lo = std::max(lo, g.rows[i][j - 1]);
        }
        for (int v = lo; v <= hi; ++v) {
            g.rows[i][j] = v;
            fill(i, j + 1);
        }
    };
    fill(n - 1, 0);
}

inline std::vector<GtPatternBounded> enumerate_gt_bounded(int n) {
    std::vector<GtPatternBounded> out;
    for_each_gt_bounded(n, [&](const GtPatternBounded& g) { out.push_back(g); });
    return out;
}

// ---------------------------------------------------------------- (s,t)-trees

using Cell = std::pair<int, int>;  ///< (row, column), 0-based

/// Shape of an (s,t)-tree: the monotone-triangle shape with the bottom s_i
/// cells of NE-diagonal i (i <= l) and the bottom t_i cells of SE-diagonal i
/// (i > n-r) removed.
class StShape {
public:
    /// Throws invalid_argument for malformed s/t, unsupported_shape when the
    /// left and right deletions interfere.
    StShape(int n, std::vector<int> s, std::vector<int> t) : n_(n), s_(std::move(s)), t_(std::move(t)) {
        require(n >= 1, "(s,t)-tree order must be at least 1");
        const int l = static_cast<int>(s_.size());
        const int r = static_cast<int>(t_.size());
        require(l + r <= n, "(s,t)-tree needs l + r <= n");
        require(is_weakly_decreasing(s_), "s must be weakly decreasing");
        require(is_weakly_increasing(t_), "t must be weakly increasing");
        for (int x : s_) require(x >= 0, "s entries must be non-negative");
        for (int x : t_) require(x >= 0, "t entries must be non-negative");

        alive_.resize(n);
        for (int i = 0; i < n; ++i) {
            alive_[i].assign(i + 1, true);
            for (int j = 0; j <= i; ++j) {
                const bool ne = j < l && i + 1 > n - s_[j];
                const int k = se_index(i, j);
                const bool se = k > n - r && i + 1 > n - t_[k - (n - r + 1)];
                if (ne && se) throw unsupported_shape("left and right deletions overlap");
                alive_[i][j] = !(ne || se);
            }
        }
        // The boundary cell of diagonal d is the bottom cell of NE-diagonal d
        // for d <= n-r and of SE-diagonal d otherwise.
        for (int d = 1; d <= n; ++d) {
            std::optional<Cell> bottom;
            if (d <= n - r) {
                for (int i = d - 1; i < n; ++i)
                    if (alive_[i][d - 1]) bottom = Cell{i, d - 1};
            } else {
                for (int i = n - d; i < n; ++i) {
                    const int j = i - n + d;
                    if (alive_[i][j]) bottom = Cell{i, j};
                }
            }
            if (!bottom) throw unsupported_shape("diagonal " + std::to_string(d) + " is deleted entirely");
            if (std::find(boundary_.begin(), boundary_.end(), *bottom) != boundary_.end())
                throw unsupported_shape("two boundary diagonals share their bottom cell");
            boundary_.push_back(*bottom);
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j)
                if (alive_[i][j] && !regular(i, j) && boundary_index(i, j) < 0)
                    throw unsupported_shape("cell is neither regular nor a boundary cell");
    }

    int order() const { return n_; }
    const std::vector<int>& s() const { return s_; }
    const std::vector<int>& t() const { return t_; }

    bool alive(int i, int j) const { return i >= 0 && i < n_ && j >= 0 && j <= i && alive_[i][j]; }

    /// Has both a SW and a SE neighbour.
    bool regular(int i, int j) const { return alive(i, j) && alive(i + 1, j) && alive(i + 1, j + 1); }

    /// Boundary cell for diagonal d = 1..n.
    const Cell& boundary_cell(int d) const { return boundary_[d - 1]; }

    /// Diagonal number (1-based) whose boundary cell is (i,j), or -1.
    int boundary_index(int i, int j) const {
        for (std::size_t d = 0; d < boundary_.size(); ++d)
            if (boundary_[d] == Cell{i, j}) return static_cast<int>(d) + 1;
        return -1;
    }

    /// Alive cells of row i, left to right.
    std::vector<int> row_cells(int i) const {
        std::vector<int> out;
        for (int j = 0; j <= i; ++j)
            if (alive_[i][j]) out.push_back(j);
        return out;
    }

    bool operator==(const StShape& o) const { return n_ == o.n_ && s_ == o.s_ && t_ == o.t_; }

private:
    int se_index(int i, int j) const { return n_ - 1 - i + j + 1; }

    int n_;
    std::vector<int> s_;
    std::vector<int> t_;
    std::vector<std::vector<bool>> alive_;
    std::vector<Cell> boundary_;
};

/// Returns the shape, or std::nullopt if it is not admissible.
inline std::optional<StShape> try_st_shape(int n, const std::vector<int>& s, const std::vector<int>& t) {
    try {
        return StShape(n, s, t);
    } catch (const unsupported_shape&) {
        return std::nullopt;
    }
}

struct StTree {
    StShape shape;
    Pattern entries;  ///< meaningful on alive cells only; deleted cells hold 0

    std::vector<int> boundary() const {
        std::vector<int> b;
        for (int d = 1; d <= shape.order(); ++d) {
            auto [i, j] = shape.boundary_cell(d);
            b.push_back(entries[i][j]);
        }
        return b;
    }

    bool operator==(const StTree& o) const { return shape == o.shape && entries == o.entries; }
    bool operator<(const StTree& o) const { return entries < o.entries; }
};

/// Checks the two monotonicity rules at regular entries.
inline bool satisfies_monotonicity(const StTree& tree) {
    const auto& sh = tree.shape;
    const auto& m = tree.entries;
    for (int i = 0; i + 1 < sh.order(); ++i) {
        for (int j = 0; j <= i; ++j) {
            if (!sh.regular(i, j)) continue;
            if (m[i + 1][j] > m[i][j] || m[i][j] > m[i + 1][j + 1]) return false;
            if (j + 1 <= i && sh.regular(i, j + 1) && m[i][j] == m[i][j + 1]) return false;
        }
    }
    return true;
}

/// Visits every (s,t)-tree with the prescribed boundary values, rows
/// bottom-up and values ascending.
inline void for_each_st_tree(const StShape& shape, const std::vector<int>& boundary,
                             const std::function<void(const StTree&)>& visit) {
    const int n = shape.order();
    require(static_cast<int>(boundary.size()) == n, "boundary must have n values");
    StTree tree{shape, {}};
    tree.entries.resize(n);
    for (int i = 0; i < n; ++i) tree.entries[i].assign(i + 1, 0);
    for (int d = 1; d <= n; ++d) {
        auto [i, j] = shape.boundary_cell(d);
        tree.entries[i][j] = boundary[d - 1];
    }
    auto& m = tree.entries;
    std::function<void(int, int)> fill = [&](int i, int j) {
        if (i < 0) {
            visit(tree);
            return;
        }
        if (j > i) {
            fill(i - 1, 0);
            return;
        }
        if (!shape.regular(i, j)) {
            fill(i, j + 1);
            return;
        }
        for (int v = m[i + 1][j]; v <= m[i + 1][j + 1]; ++v) {
            if (j > 0 && shape.regular(i, j - 1) && m[i][j - 1] == v) continue;
            m[i][j] = v;
            fill(i, j + 1);
        }
        m[i][j] = 0;
    };
    fill(n - 2, 0);
}

inline std::vector<StTree> enumerate_st_trees(int n, const std::vector<int>& s, const std::vector<int>& t,
                                              const std::vector<int>& boundary) {
    StShape shape(n, s, t);
    std::vector<StTree> out;
    for_each_st_tree(shape, boundary, [&](const StTree& tr) { out.push_back(tr); });
    return out;
}

inline long count_st_trees(const StShape& shape, const std::vector<int>& boundary) {
    long count = 0;
    for_each_st_tree(shape, boundary, [&](const StTree&) { ++count; });
    return count;
}

// ------------------------------------------------------ AST -> (s,t)-tree

namespace detail {

/// Columns of the 1's in each row of the partial column sum array.
inline std::vector<std::vector<int>> partial_sum_ones(const TriangleArray& t) {
    const int n = t.order;
    std::vector<int> cs(2 * n - 1, 0);
    std::vector<std::vector<int>> out(n);
    for (int r = 0; r < n; ++r) {
        const int hw = n - 1 - r;
        for (int c = -hw; c <= hw; ++c) {
            cs[c + n - 1] += t.at(r, c);
            if (cs[c + n - 1] == 1) out[r].push_back(c);
        }
    }
    return out;
}

}  // namespace detail

struct StTreeImage {
    StTree tree;
    std::vector<int> boundary;
};

/// Partial column sums of the AST, read row by row, fill the
/// ((-j_1,...,-j_{m-1}), (j_{m+1},...,j_n))-tree whose boundary is
/// (j_1,...,j_{m-1}, 0, j_{m+1},...,j_n).
inline StTreeImage ast_to_st_tree(const Ast& a) {
    const auto profile = one_column_profile(a);
    const int n = a.order;
    std::vector<int> s, t, b;
    for (int c : profile.positions) {
        if (c < 0) s.push_back(-c), b.push_back(c);
    }
    b.push_back(0);
    for (int c : profile.positions) {
        if (c > 0) t.push_back(c), b.push_back(c);
    }
    StShape shape(n, s, t);
    StTree tree{shape, {}};
    tree.entries.resize(n);
    const auto ones = detail::partial_sum_ones(a);
    for (int i = 0; i < n; ++i) {
        tree.entries[i].assign(i + 1, 0);
        const auto cells = shape.row_cells(i);
        if (cells.size() != ones[i].size())
            throw internal_error("partial column sums do not fit the (s,t)-shape in row " + std::to_string(i + 1));
        for (std::size_t k = 0; k < cells.size(); ++k) tree.entries[i][cells[k]] = ones[i][k];
    }
    if (tree.boundary() != b || !satisfies_monotonicity(tree))
        throw internal_error("AST image is not a valid (s,t)-tree");
    return {std::move(tree), std::move(b)};
}

}  // namespace astlab
