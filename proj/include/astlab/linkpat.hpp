#pragma once

// Dyck words, link patterns and the matrix relating Psi_alpha to the
// numbers psi_pi of fully packed loops with link pattern pi.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "astlab/bareiss.hpp"
#include "astlab/error.hpp"
#include "astlab/genfun.hpp"
#include "astlab/numeric.hpp"
#include "astlab/verdict.hpp"

namespace astlab {

/// Word over {'0','1'}; '0' is an up step, '1' a down step.
using Word = std::string;

inline bool is_binary_word(const Word& w) {
    return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
}

inline bool is_dyck_word(const Word& w) {
    if (!is_binary_word(w) || w.size() % 2 != 0) return false;
    int h = 0;
    for (char c : w) {
        h += c == '0' ? 1 : -1;
        if (h < 0) return false;
    }
    return h == 0;
}

/// All Dyck words of length 2n in lexicographic order.
inline std::vector<Word> dyck_words(int n) {
    require(n >= 0, "Dyck word size must be non-negative");
    std::vector<Word> out;
    Word w;
    std::function<void(int, int)> rec = [&](int open, int close) {
        if (open == n && close == n) {
            out.push_back(w);
            return;
        }
        if (open < n) {
            w.push_back('0');
            rec(open + 1, close);
            w.pop_back();
        }
        if (close < open) {
            w.push_back('1');
            rec(open, close + 1);
            w.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

/// The row and column order used in the published tables for n = 3, 4;
/// lexicographic otherwise.
inline std::vector<Word> figure_order(int n) {
    if (n == 4)
        return {"00001111", "00010111", "00011011", "00100111", "00101011", "00011101", "00101101",
                "00110011", "00110101", "01000111", "01001011", "01001101", "01010011", "01010101"};
    return dyck_words(n);
}

inline bool has_figure_order(int n) { return n == 3 || n == 4; }

/// Non-crossing perfect matching of {1, ..., 2n}; arcs (i, j) with i < j,
/// sorted by left endpoint.
struct LinkPattern {
    std::vector<std::pair<int, int>> arcs;

    int size() const { return static_cast<int>(arcs.size()); }
    bool operator==(const LinkPattern&) const = default;
    auto operator<=>(const LinkPattern&) const = default;
};

/// Matches every 1 with the nearest unmatched 0 to its left.
inline LinkPattern link_pattern(const Word& w) {
    if (!is_dyck_word(w)) throw invalid_argument("not a Dyck word: " + w);
    LinkPattern p;
    std::vector<int> open;
    for (int k = 0; k < static_cast<int>(w.size()); ++k) {
        if (w[k] == '0') {
            open.push_back(k + 1);
        } else {
            p.arcs.emplace_back(open.back(), k + 1);
            open.pop_back();
        }
    }
    std::sort(p.arcs.begin(), p.arcs.end());
    return p;
}

inline Word dyck_word(const LinkPattern& p) {
    Word w(2 * p.size(), '?');
    for (auto [i, j] : p.arcs) {
        w.at(i - 1) = '0';
        w.at(j - 1) = '1';
    }
    if (!is_dyck_word(w)) throw invalid_argument("arcs do not form a non-crossing perfect matching");
    return w;
}

/// Shifts every endpoint p to p mod 2n + 1.
inline LinkPattern rotate(const LinkPattern& p) {
    const int m = 2 * p.size();
    LinkPattern r;
    for (auto [i, j] : p.arcs) {
        int a = i % m + 1;
        int b = j % m + 1;
        r.arcs.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(r.arcs.begin(), r.arcs.end());
    return r;
}

/// alpha_i = (position of the (i+1)-st 0) - 2, i = 1..n-1.
inline std::vector<int> alpha(const Word& w) {
    if (!is_dyck_word(w)) throw invalid_argument("not a Dyck word: " + w);
    std::vector<int> a;
    bool first = true;
    for (int k = 0; k < static_cast<int>(w.size()); ++k) {
        if (w[k] != '0') continue;
        if (!first) a.push_back(k + 1 - 2);
        first = false;
    }
    return a;
}

/// Entry of the extended matrix: 0 if some arc is contradicting
/// (n0 - n1 = -1 mod 3 on w[i, j-1]), else (-1)^{#arcs with n0 - n1 = 0 mod 3}.
inline int cext_entry(const Word& w, const LinkPattern& p) {
    if (!is_binary_word(w)) throw invalid_argument("not a 01-word: " + w);
    if (w.size() != 2 * p.arcs.size()) throw invalid_argument("word length does not match the link pattern");
    int sign = 1;
    for (auto [i, j] : p.arcs) {
        int d = 0;
        for (int k = i; k < j; ++k) d += w[k - 1] == '0' ? 1 : -1;
        const int m = ((d % 3) + 3) % 3;
        if (m == 2) return 0;
        if (m == 0) sign = -sign;
    }
    return sign;
}

/// Square matrix C(n) with rows and columns in the given Dyck-word order.
inline Matrix<Integer> build_c_matrix(const std::vector<Word>& order) {
    const std::size_t k = order.size();
    Matrix<Integer> c(k, k);
    std::vector<LinkPattern> cols;
    for (const auto& w : order) cols.push_back(link_pattern(w));
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t s = 0; s < k; ++s) c(r, s) = cext_entry(order[r], cols[s]);
    return c;
}

inline Matrix<Integer> build_c_matrix(int n) { return build_c_matrix(figure_order(n)); }

/// (Psi_{alpha(w)})_w in the given order.
inline std::vector<Integer> psi_vector(int n, const std::vector<Word>& order) {
    std::vector<Integer> v;
    for (const auto& w : order) v.push_back(psi_coefficient(n, alpha(w)));
    return v;
}

/// psi = C(n)^{-1} Psi in the given order.
inline std::vector<Rational> solve_psi(int n, const std::vector<Word>& order) {
    auto x = solve(build_c_matrix(order), psi_vector(n, order));
    if (!x) throw internal_error("C(" + std::to_string(n) + ") is singular");
    return *x;
}

inline std::vector<Rational> solve_psi(int n) { return solve_psi(n, figure_order(n)); }

/// Area below the path of a Dyck word (sum of heights after each step).
inline int path_area(const Word& w) {
    int h = 0, area = 0;
    for (char c : w) {
        h += c == '0' ? 1 : -1;
        area += h;
    }
    return area;
}

/// Dyck words by decreasing area, ties lexicographic. In this order C(n)
/// is lower unitriangular.
inline std::vector<Word> triangular_order(int n) {
    auto ws = dyck_words(n);
    std::stable_sort(ws.begin(), ws.end(), [](const Word& a, const Word& b) { return path_area(a) > path_area(b); });
    return ws;
}

inline bool is_lower_unitriangular(const Matrix<Integer>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m(i, i) != 1) return false;
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != 0) return false;
    }
    return true;
}

/// Intervals [i, j] (1-based) on which the pattern restricts to a link pattern.
inline std::vector<std::pair<int, int>> sub_pattern_intervals(const LinkPattern& p) {
    const int m = 2 * p.size();
    std::vector<int> partner(m + 1);
    for (auto [a, b] : p.arcs) partner[a] = b, partner[b] = a;
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; j += 2) {
            bool closed = true;
            for (int k = i; k <= j && closed; ++k) closed = partner[k] >= i && partner[k] <= j;
            if (closed) out.emplace_back(i, j);
        }
    }
    return out;
}

/// Heights of the path of w[i..j] (1-based, inclusive), starting at 0.
inline std::vector<int> path_heights(const Word& w, int i, int j) {
    std::vector<int> h{0};
    for (int k = i; k <= j; ++k) h.push_back(h.back() + (w[k - 1] == '0' ? 1 : -1));
    return h;
}

/// The two necessary conditions for a non-zero entry at (w, p): on every
/// sub-pattern interval [i, j], w[i, j] has at least as many 0's as 1's, and
/// its path shifted down by that surplus stays weakly below the sub-pattern.
inline bool support_conditions_hold(const Word& w, const LinkPattern& p) {
    const Word pw = dyck_word(p);
    for (auto [i, j] : sub_pattern_intervals(p)) {
        const auto hw = path_heights(w, i, j);
        const int d = hw.back();
        if (d < 0) return false;
        const auto hp = path_heights(pw, i, j);
        for (std::size_t k = 0; k < hw.size(); ++k)
            if (hw[k] - d > hp[k]) return false;
    }
    return true;
}

/// Every 01-word of length 2n, lexicographic.
inline std::vector<Word> binary_words(int n) {
    std::vector<Word> out;
    const int m = 2 * n;
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
        Word w(m, '0');
        for (int k = 0; k < m; ++k)
            if (mask >> (m - 1 - k) & 1UL) w[k] = '1';
        out.push_back(w);
    }
    return out;
}

/// Matrix as CSV: header row of column words, then one row per word.
inline std::string c_matrix_csv(const std::vector<Word>& order, const Matrix<Integer>& m) {
    std::ostringstream out;
    out << "row";
    for (const auto& w : order) out << ',' << w;
    out << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << order[r];
        for (std::size_t c = 0; c < m.cols(); ++c) out << ',' << m(r, c).get_str();
        out << '\n';
    }
    return out.str();
}

/// Every non-zero entry of the extended matrix (all 01-words of length 2n
/// against all link patterns) satisfies the support conditions. The record
/// counts the non-zero entries found and how many of them violate them.
inline VerdictRecord proposition_support_check(int n) {
    require(n >= 1, "order must be at least 1");
    long nonzero = 0, violations = 0;
    const auto patterns = dyck_words(n);
    std::vector<LinkPattern> lps;
    for (const auto& w : patterns) lps.push_back(link_pattern(w));
    for (const auto& w : binary_words(n)) {
        for (const auto& p : lps) {
            if (cext_entry(w, p) == 0) continue;
            ++nonzero;
            if (!support_conditions_hold(w, p)) ++violations;
        }
    }
    auto v = make_verdict("proposition-support", {{"n", n}, {"nonzero_entries", nonzero}},
                          std::to_string(violations), "0");
    return v;
}

/// psi_pi = psi_{rot(pi)} for every link pattern of size n.
inline VerdictRecord rotation_invariance_check(int n) {
    require(n >= 1, "order must be at least 1");
    const auto order = dyck_words(n);
    const auto psi = solve_psi(n, order);
    std::map<Word, Rational> by_word;
    for (std::size_t k = 0; k < order.size(); ++k) by_word[order[k]] = psi[k];
    std::string left, right;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const Word r = dyck_word(rotate(link_pattern(order[k])));
        left += (k ? "," : "") + psi[k].get_str();
        right += (k ? "," : "") + by_word.at(r).get_str();
    }
    return make_verdict("psi-rotation", {{"n", n}}, left, right);
}

}  // namespace astlab
