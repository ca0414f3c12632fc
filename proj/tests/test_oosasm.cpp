#include <gtest/gtest.h>

#include <map>
#include <set>

#include "astlab/oosasm.hpp"
#include "oracles.hpp"

using namespace astlab;

namespace {

OddOosasmTriangle make(const oracle::Rows& rows) {
    OddOosasmTriangle t;
    t.order = static_cast<int>(rows.size());
    t.rows = rows;
    return t;
}

std::map<std::vector<int>, long> oracle_counts(int n) {
    std::map<std::vector<int>, long> out;
    for (const auto& t : oracle::oosasm_triangles(n)) ++out[oracle::oosasm_ones(t)];
    return out;
}

const oracle::Rows kWorkedOrderSeven = {
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0},
    {0, -1, 0, 1, 0, 0, 0},
    {1, 0, 0, 0, 0},
    {0, -1, 0},
    {1},
};

}  // namespace

TEST(OosasmTriangles, EnumerationMatchesOracle) {
    EXPECT_EQ(enumerate_oosasm_triangles(1).size(), 1u);
    EXPECT_EQ(enumerate_oosasm_triangles(1)[0].rows, (oracle::Rows{{1}}));
    for (int n = 1; n <= 5; ++n) {
        std::set<oracle::Rows> got;
        for (const auto& t : enumerate_oosasm_triangles(n)) got.insert(t.rows);
        const auto ref = oracle::oosasm_triangles(n);
        EXPECT_EQ(got, std::set<oracle::Rows>(ref.begin(), ref.end())) << n;
    }
    EXPECT_THROW(enumerate_oosasm_triangles(0), astlab::invalid_argument);
}

TEST(OosasmTriangles, Invariants) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& t : enumerate_oosasm_triangles(n)) {
            EXPECT_EQ(static_cast<int>(oosasm_one_columns(t).size()), n / 2);
            EXPECT_EQ(t.column_sum(0), n % 2);
            int total = 0;
            for (const auto& row : t.rows)
                for (int v : row) total += v;
            EXPECT_EQ(2 * total, n + t.column_sum(0));
        }
}

TEST(OosasmCount, Examples) {
    EXPECT_EQ(oosasm_count(2, {1}), 1);
    EXPECT_EQ(oosasm_count(2, {-1}), oracle_counts(2)[{-1}]);
    EXPECT_EQ(oosasm_count(1, {}), 1);
    EXPECT_EQ(oosasm_count(3, {0, 1}), oosasm_count(3, {1}));
    EXPECT_THROW(oosasm_count(2, {0}), astlab::invalid_argument);
    EXPECT_THROW(oosasm_count(4, {1, -1}), astlab::invalid_argument);
    EXPECT_THROW(oosasm_count(4, {1}), astlab::invalid_argument);
}

TEST(OosasmCount, MatchesOracleForAllPositions) {
    for (int n = 1; n <= 5; ++n) {
        const auto ref = oracle_counts(n);
        long total = 0;
        // every strictly increasing choice of floor(n/2) non-zero columns
        std::vector<int> cols;
        for (int c = -(n - 1); c <= n - 1; ++c)
            if (c != 0) cols.push_back(c);
        const int k = n / 2;
        std::vector<int> pick;
        std::function<void(std::size_t)> rec = [&](std::size_t from) {
            if (static_cast<int>(pick.size()) == k) {
                const auto it = ref.find(pick);
                const Integer got = oosasm_count(n, pick);
                EXPECT_EQ(got, it == ref.end() ? 0 : it->second) << n;
                total += to_long(got);
                return;
            }
            for (std::size_t i = from; i < cols.size(); ++i) {
                pick.push_back(cols[i]);
                rec(i + 1);
                pick.pop_back();
            }
        };
        rec(0);
        long ref_total = 0;
        for (const auto& [pos, c] : ref) ref_total += c;
        EXPECT_EQ(total, ref_total) << n;
    }
}

TEST(OosasmTree, WorkedOrderSevenExample) {
    const auto tri = make(kWorkedOrderSeven);
    validate(tri);
    EXPECT_EQ(oosasm_one_columns(tri), (std::vector<int>{-4, -2, 2}));
    const auto img = oosasm_to_st_tree(tri);
    EXPECT_EQ(img.tree.shape.s(), (std::vector<int>{4, 3, 2, 1}));
    EXPECT_EQ(img.tree.shape.t(), (std::vector<int>{1, 2}));
    EXPECT_EQ(img.boundary, (std::vector<int>{-4, -3, -2, -1, 0, 1, 2}));
    constexpr int x = 99;
    const std::vector<std::vector<int>> expected = {{-4},
                                                    {-4, 2},
                                                    {-4, -2, 2},
                                                    {x, -3, 0, 2},
                                                    {x, x, -2, 0, 2},
                                                    {x, x, x, -1, 1, x},
                                                    {x, x, x, x, 0, x, x}};
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j <= i; ++j) {
            EXPECT_EQ(img.tree.shape.alive(i, j), expected[i][j] != x) << i << "," << j;
            if (expected[i][j] != x) {
                EXPECT_EQ(img.tree.entries[i][j], expected[i][j]) << i << "," << j;
            }
        }
    EXPECT_EQ(img.added, (std::vector<Cell>{{3, 1}, {5, 3}, {5, 4}}));
    EXPECT_EQ(img.tree.entries[0][0], -4);
}

TEST(OosasmTree, InjectiveUpToOrderFive) {
    const auto trivial = oosasm_to_st_tree(make({{1}}));
    EXPECT_EQ(trivial.tree.entries, (Pattern{{0}}));
    for (int n = 1; n <= 5; ++n) {
        std::set<std::pair<std::vector<int>, Pattern>> images;
        long count = 0;
        for (const auto& t : enumerate_oosasm_triangles(n)) {
            const auto img = oosasm_to_st_tree(t);
            images.insert({img.boundary, img.tree.entries});
            ++count;
        }
        EXPECT_EQ(static_cast<long>(images.size()), count) << n;
    }
}
