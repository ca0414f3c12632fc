#include <gtest/gtest.h>

#include <numeric>

#include "astlab/linkpat.hpp"
#include "oracles.hpp"

using namespace astlab;

namespace {

const std::vector<Word> kOrder3 = {"000111", "001011", "001101", "010011", "010101"};
const int kC3[5][5] = {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {1, 0, 0, 1, 0}, {0, 0, 0, 0, 1}};
const long kBigPsi3[5] = {1, 2, 1, 2, 2};
const long kPsi3[5] = {1, 2, 1, 1, 2};

const std::vector<Word> kOrder4 = {"00001111", "00010111", "00011011", "00100111", "00101011", "00011101", "00101101",
                                   "00110011", "00110101", "01000111", "01001011", "01001101", "01010011", "01010101"};
const int kC4[14][14] = {
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},  {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},  {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},  {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},  {0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},  {-1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},  {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0},  {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};
const long kBigPsi4[14] = {1, 3, 3, 4, 7, 1, 3, 4, 3, 3, 7, 4, 7, 7};
const long kPsi4[14] = {1, 3, 3, 3, 7, 1, 3, 1, 3, 1, 3, 3, 3, 7};

template <std::size_t N>
void expect_matrix(const Matrix<Integer>& m, const int (&ref)[N][N]) {
    ASSERT_EQ(m.rows(), N);
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) EXPECT_EQ(m(r, c), ref[r][c]) << r << "," << c;
}

}  // namespace

TEST(Words, DyckWordsMatchOracle) {
    for (int n = 1; n <= 6; ++n) {
        auto ref = oracle::dyck(n);
        std::sort(ref.begin(), ref.end());
        EXPECT_EQ(dyck_words(n), ref);
        EXPECT_EQ(Integer(static_cast<long>(ref.size())), catalan(n));
    }
    EXPECT_EQ(figure_order(3), kOrder3);
    EXPECT_EQ(figure_order(4), kOrder4);
}

TEST(Words, LinkPatternRoundTripAndRotation) {
    EXPECT_EQ(link_pattern("001011").arcs, (std::vector<std::pair<int, int>>{{1, 6}, {2, 3}, {4, 5}}));
    EXPECT_THROW(link_pattern("0110"), astlab::invalid_argument);
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : dyck_words(n)) {
            const auto p = link_pattern(w);
            EXPECT_EQ(dyck_word(p), w);
            LinkPattern r = p;
            for (int k = 0; k < 2 * n; ++k) r = rotate(r);
            EXPECT_EQ(r, p);
            EXPECT_TRUE(in_alpha_set(n, alpha(w)));
        }
    EXPECT_EQ(dyck_word(rotate(link_pattern("000111"))), "010011");
    EXPECT_EQ(alpha("00101011"), (std::vector<int>{0, 2, 4}));
}

TEST(CMatrix, OrderThreeTable) {
    expect_matrix(build_c_matrix(3), kC3);
    const auto big = psi_vector(3, kOrder3);
    const auto psi = solve_psi(3);
    for (int k = 0; k < 5; ++k) {
        EXPECT_EQ(big[k], kBigPsi3[k]);
        EXPECT_EQ(psi[k], kPsi3[k]);
    }
}

TEST(CMatrix, OrderFourTable) {
    expect_matrix(build_c_matrix(4), kC4);
    const auto big = psi_vector(4, kOrder4);
    const auto psi = solve_psi(4);
    Rational sum = 0;
    for (int k = 0; k < 14; ++k) {
        EXPECT_EQ(big[k], kBigPsi4[k]) << kOrder4[k];
        EXPECT_EQ(psi[k], kPsi4[k]) << kOrder4[k];
        sum += psi[k];
    }
    EXPECT_EQ(sum, 42);
}

TEST(CMatrix, CsvExport) {
    const auto csv = c_matrix_csv(kOrder3, build_c_matrix(3));
    EXPECT_EQ(csv,
              "row,000111,001011,001101,010011,010101\n"
              "000111,1,0,0,0,0\n"
              "001011,0,1,0,0,0\n"
              "001101,0,0,1,0,0\n"
              "010011,1,0,0,1,0\n"
              "010101,0,0,0,0,1\n");
}

TEST(CMatrix, UnitriangularInAreaOrder) {
    for (int n = 1; n <= 6; ++n) EXPECT_TRUE(is_lower_unitriangular(build_c_matrix(triangular_order(n)))) << n;
}

TEST(CExt, DyckWordOfThePatternGivesOne) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : dyck_words(n)) EXPECT_EQ(cext_entry(w, link_pattern(w)), 1);
    EXPECT_THROW(cext_entry("0101", link_pattern("000111")), astlab::invalid_argument);
}

TEST(Psi, SumsToAsmCountsAndIsNonNegative) {
    for (int n = 1; n <= 5; ++n) {
        const auto psi = solve_psi(n, dyck_words(n));
        Rational sum = 0;
        for (const auto& q : psi) {
            EXPECT_TRUE(is_integer(q));
            EXPECT_GE(q, 0);
            sum += q;
        }
        EXPECT_EQ(sum, Rational(static_cast<long>(oracle::asms(n).size()))) << n;
    }
}

TEST(Psi, RotationInvariance) {
    for (int n = 1; n <= 6; ++n) EXPECT_TRUE(rotation_invariance_check(n).pass) << n;
}

TEST(LinkSupport, SupportConditions) {
    const long nonzero[] = {2, 10, 62, 424, 3084};
    for (int n = 1; n <= 5; ++n) {
        const auto v = proposition_support_check(n);
        EXPECT_TRUE(v.pass) << n;
        EXPECT_EQ(v.params["nonzero_entries"], nonzero[n - 1]);
    }
}
