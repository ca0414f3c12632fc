#include <gtest/gtest.h>

#include <set>

#include "astlab/identities.hpp"
#include "oracles.hpp"

using namespace astlab;

namespace {

TPoly t_sum(const std::map<int, long>& by_power) {
    TPoly p(1);
    for (auto [e, c] : by_power) p += t_power(e).scaled(c);
    return p;
}

std::string s(const TPoly& p) { return to_string(p, {"t"}); }

}  // namespace

TEST(Rotation, SpotInstances) {
    const auto a = rotation_identity_check(3, {0, 1});
    EXPECT_EQ(a.left, "1");
    EXPECT_EQ(a.right, "1");
    const auto b = rotation_identity_check(3, {0, 2});
    EXPECT_EQ(b.left, "1");
    EXPECT_EQ(b.right, "1");
    EXPECT_THROW(rotation_identity_check(3, {1, 3}), astlab::invalid_argument);
    EXPECT_FALSE(rotation_identity_check(3, {1, 3}, true).left.empty());
    EXPECT_TRUE(rotation_identity_check(3, {1, 3}, true).experimental);
    EXPECT_FALSE(rotation_identity_check(3, {0, 1}, true).experimental);
}

TEST(Rotation, AllHypothesisInstancesUpToFive) {
    EXPECT_EQ(rotation_instances(3), (std::vector<std::vector<int>>{{0, 1}, {0, 2}}));
    for (int n = 2; n <= 5; ++n) {
        const auto inst = rotation_instances(n);
        EXPECT_FALSE(inst.empty());
        for (const auto& j : inst) EXPECT_TRUE(rotation_identity_check(n, j).pass) << n;
    }
}

TEST(Asym, ProductAndZeilbergerIdentities) {
    for (int n = 1; n <= 3; ++n) {
        const auto a = asym_lemma_check(n, 6);
        EXPECT_TRUE(a.pass) << n << " " << a.left << " vs " << a.right;
        const auto z = zeilberger_asym_check(n, n == 3 ? 5 : 6);
        EXPECT_TRUE(z.pass) << n;
        EXPECT_EQ(z.identity, "asym-zeilberger");
    }
}

TEST(RefinedConstantTerm, Examples) {
    EXPECT_EQ(refined_constant_term(2, 1), 1);
    EXPECT_EQ(refined_constant_term(3, 2), 3);
    EXPECT_EQ(refined_constant_term(1, 1), 1);
    EXPECT_THROW(refined_constant_term(3, 4), astlab::invalid_argument);
}

TEST(RefinedConstantTerm, MatchesRhoCounts) {
    for (int n = 1; n <= 5; ++n) {
        std::vector<long> counts(n, 0);
        for (const auto& t : oracle::asts(n)) ++counts[oracle::classify(t).rho() - 1];
        for (int r = 1; r <= n; ++r) EXPECT_EQ(refined_constant_term(n, r), counts[r - 1]) << n << "," << r;
    }
}

TEST(Lgv, Examples) {
    const auto t = t_power(1);
    EXPECT_EQ(s(lgv_weighted_sum(1)), s(t));
    EXPECT_EQ(s(lgv_weighted_sum(2)), s(t + t * t));
    EXPECT_EQ(s(lgv_weighted_sum(3)), s(t.scaled(2) + t_power(2).scaled(3) + t_power(3).scaled(2)));
    EXPECT_EQ(s(path_family_weight_sum(2)), s(t + t * t));
    EXPECT_EQ(s(gt_bounded_weight_sum(3)), s(lgv_weighted_sum(3)));
}

TEST(Lgv, ChainAgreesWithOracles) {
    for (int n = 1; n <= 5; ++n) {
        std::map<int, long> rho_powers;
        for (const auto& a : oracle::asts(n)) ++rho_powers[oracle::classify(a).rho()];
        const auto expected = s(t_sum(rho_powers));
        EXPECT_EQ(s(lgv_weighted_sum(n)), expected) << n;
        EXPECT_EQ(s(path_family_weight_sum(n)), expected) << n;
        EXPECT_EQ(s(gt_bounded_weight_sum(n)), expected) << n;
        EXPECT_EQ(s(gt_bounded_weight_sum(n)), s(t_sum(oracle::gt_weights(n)))) << n;
        EXPECT_EQ(s(ast_rho_weight_sum(n)), expected) << n;
    }
}

TEST(Paths, FamiliesAreDisjointAndEndOnTheAntidiagonal) {
    for (int n = 1; n <= 5; ++n)
        for_each_path_family(n, [&](const PathFamily& f) {
            EXPECT_TRUE(vertex_disjoint(f));
            for (std::size_t p = 0; p < f.paths.size(); ++p) {
                EXPECT_EQ(f.paths[p].x0, static_cast<int>(p));
                EXPECT_EQ(f.paths[p].y0, -2 * static_cast<int>(p + 1) + 1);
                const auto [x, y] = f.paths[p].end();
                EXPECT_EQ(x + y, 0);
                EXPECT_GE(x, 0);
            }
        });
}

TEST(Paths, GtBijection) {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::vector<std::string>> images;
        long count = 0;
        for_each_gt_bounded(n, [&](const GtPatternBounded& g) {
            const auto f = gt_to_path_family(g);
            EXPECT_TRUE(vertex_disjoint(f));
            EXPECT_EQ(f.weight(), g.weight);
            EXPECT_EQ(path_family_to_gt(f), g);
            std::vector<std::string> key;
            for (const auto& p : f.paths) key.push_back(p.steps);
            images.insert(key);
            ++count;
        });
        long families = 0;
        for_each_path_family(n, [&](const PathFamily&) { ++families; });
        EXPECT_EQ(static_cast<long>(images.size()), count);
        EXPECT_EQ(families, count);
    }
}

TEST(Paths, WorkedOrderEightPattern) {
    GtPatternBounded g;
    g.rows = {{1},
              {1, 2},
              {1, 1, 3},
              {1, 1, 3, 3},
              {1, 1, 3, 3, 4},
              {1, 1, 3, 3, 4, 6},
              {1, 1, 3, 3, 4, 5, 6},
              {1, 1, 2, 3, 3, 4, 5, 8}};
    g.weight = 5;
    const auto f = gt_to_path_family(g);
    const std::vector<std::string> steps = {"E", "NE", "ENN", "NEEN", "NEEEN", "EEEEEN", "ENEEEEE"};
    ASSERT_EQ(f.paths.size(), steps.size());
    for (std::size_t p = 0; p < steps.size(); ++p) EXPECT_EQ(f.paths[p].steps, steps[p]) << p;
    EXPECT_TRUE(vertex_disjoint(f));
    EXPECT_EQ(f.weight(), 5);
    EXPECT_EQ(path_family_to_gt(f), g);
}
