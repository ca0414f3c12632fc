#pragma once

// Operator formula for odd OOSASM triangles by 1-column positions, and the
// map from such triangles to (s,t)-trees.

#include <vector>

#include "astlab/error.hpp"
#include "astlab/monotone.hpp"
#include "astlab/opcalc.hpp"
#include "astlab/triangles.hpp"

namespace astlab {

/// Accepts the floor(n/2) non-central positions; for odd n a 0 may be
/// included and is dropped.
inline std::vector<int> normalize_oosasm_positions(int n, std::vector<int> pos) {
    require(n >= 1, "OOSASM triangle order must be at least 1");
    if (n % 2 == 1) std::erase(pos, 0);
    require(static_cast<int>(pos.size()) == n / 2, "expected floor(n/2) non-central 1-column positions");
    require(is_strictly_increasing(pos), "1-column positions must be strictly increasing");
    for (int j : pos) {
        require(j != 0, "the central column is not a position for even order");
        require(j >= -(n - 1) && j <= n - 1, "1-column position out of range");
    }
    return pos;
}

/// Per-variable operators: (-bwd)^{-j}, (-bwd)^{-j-1} for each negative j,
/// fwd^{j-1}, fwd^{j} for each positive j, and nothing on the central
/// variable when n is odd.
inline std::vector<std::vector<PrimitiveOp>> oosasm_operators(int n, const std::vector<int>& pos) {
    std::vector<std::vector<PrimitiveOp>> ops;
    bool central_done = n % 2 == 0;
    for (int j : pos) {
        if (j > 0 && !central_done) {
            ops.push_back({});
            central_done = true;
        }
        if (j < 0) {
            ops.push_back({PrimitiveOp{0, OpKind::neg_backward_diff, -j}});
            ops.push_back({PrimitiveOp{0, OpKind::neg_backward_diff, -j - 1}});
        } else {
            ops.push_back({PrimitiveOp{0, OpKind::forward_diff, j - 1}});
            ops.push_back({PrimitiveOp{0, OpKind::forward_diff, j}});
        }
    }
    if (!central_done) ops.push_back({});
    return ops;
}

/// Number of odd OOSASM triangles of order n with the given 1-columns.
inline Integer oosasm_count(int n, const std::vector<int>& positions, MnStore& store = default_mn_store()) {
    const auto pos = normalize_oosasm_positions(n, positions);
    const auto ops = oosasm_operators(n, pos);
    std::vector<std::vector<Rational>> tables;
    for (const auto& o : ops) tables.push_back(unary_functional(o, n - 1));
    return to_integer(functional_sum(store.get(n), tables, Rational(0), Rational(1)));
}

struct OosasmTreeImage {
    StTree tree;
    std::vector<int> boundary;
    std::vector<Cell> added;  ///< boundary cells not read off the partial sums
};

/// Records the 1's of the partial column sums row by row into the
/// (s,t)-tree with s = (-j_1, -j_1-1, -j_2, -j_2-1, ...) and
/// t = (j_{m+1}-1, j_{m+1}, ...). The bottoms of the second diagonal of each
/// left pair and of the first diagonal of each right pair carry no 1 of the
/// triangle; they receive their boundary values j_i + 1 and j_i - 1.
inline OosasmTreeImage oosasm_to_st_tree(const OddOosasmTriangle& tri) {
    validate(tri);
    const int n = tri.order;
    const auto pos = oosasm_one_columns(tri);
    if (static_cast<int>(pos.size()) != n / 2) throw internal_error("OOSASM triangle has the wrong number of 1-columns");
    std::vector<int> s, t, b;
    std::vector<int> added_diagonals;
    for (int j : pos) {
        if (j > 0) continue;
        s.push_back(-j);
        s.push_back(-j - 1);
        b.push_back(j);
        b.push_back(j + 1);
        added_diagonals.push_back(static_cast<int>(b.size()));
    }
    if (n % 2 == 1) b.push_back(0);
    for (int j : pos) {
        if (j < 0) continue;
        t.push_back(j - 1);
        t.push_back(j);
        b.push_back(j - 1);
        added_diagonals.push_back(static_cast<int>(b.size()));
        b.push_back(j);
    }
    StShape shape(n, s, t);
    OosasmTreeImage img{StTree{shape, {}}, b, {}};
    for (int d : added_diagonals) img.added.push_back(shape.boundary_cell(d));
    auto& m = img.tree.entries;
    m.resize(n);
    const auto ones = detail::partial_sum_ones(tri);
    for (int i = 0; i < n; ++i) {
        m[i].assign(i + 1, 0);
        std::vector<int> cells;
        for (int j : shape.row_cells(i))
            if (std::find(img.added.begin(), img.added.end(), Cell{i, j}) == img.added.end()) cells.push_back(j);
        if (cells.size() != ones[i].size())
            throw internal_error("partial column sums do not fit the (s,t)-shape in row " + std::to_string(i + 1));
        for (std::size_t k = 0; k < cells.size(); ++k) m[i][cells[k]] = ones[i][k];
    }
    for (std::size_t k = 0; k < added_diagonals.size(); ++k) {
        auto [i, j] = img.added[k];
        m[i][j] = b[added_diagonals[k] - 1];
    }
    if (img.tree.boundary() != b) throw internal_error("OOSASM tree boundary mismatch");
    if (!satisfies_monotonicity(img.tree)) throw internal_error("OOSASM tree violates monotonicity");
    return img;
}

}  // namespace astlab
