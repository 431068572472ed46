#include <qmzv/brackets.hpp>
#include <qmzv/words.hpp>

#include <gtest/gtest.h>

#include <functional>

using namespace qmzv;

namespace {

std::vector<Index> compositions_up_to(int maxw) {
    std::vector<Index> out;
    std::vector<Index> frontier{{}};
    for (int w = 1; w <= maxw; ++w) {
        // all compositions of weight exactly w
        std::vector<Index> cur;
        std::function<void(Index, int)> rec = [&](Index p, int left) {
            if (left == 0) {
                cur.push_back(p);
                return;
            }
            for (int a = 1; a <= left; ++a) {
                Index q = p;
                q.push_back(a);
                rec(q, left - a);
            }
        };
        rec({}, w);
        out.insert(out.end(), cur.begin(), cur.end());
    }
    return out;
}

// Coefficients c_n such that the series equals scale * sum c_n q^n.
void expect_scaled(const QSeries& f, const Rational& scale, int first, std::vector<int> c) {
    for (int n = 0; n < first; ++n) EXPECT_EQ(f[n], 0) << n;
    for (size_t i = 0; i < c.size(); ++i) EXPECT_EQ(f[first + i], scale * c[i]) << "n=" << first + i;
}

}  // namespace

TEST(DivisorSum, Examples) {
    EXPECT_EQ(multiple_divisor_sum({1}, 6), 12);
    EXPECT_EQ(multiple_divisor_sum({0, 0}, 3), 1);
    EXPECT_EQ(multiple_divisor_sum({0, 0}, 2), 0);
    for (long n = 1; n <= 30; ++n) {
        Rational lhs = Rational(multiple_divisor_sum({2}, n)) / 2;
        Rational rhs = Rational(multiple_divisor_sum({1, 0}, n)) - Rational(multiple_divisor_sum({1}, n)) / 2 +
                       n * Rational(multiple_divisor_sum({0}, n));
        EXPECT_EQ(lhs, rhs) << n;
    }
}

TEST(DivisorSum, BruteForcePairs) {
    // all (u1>u2>0, v1,v2>0) with u1 v1 + u2 v2 = n, counted by four loops
    for (long n = 1; n <= 25; ++n) {
        Integer acc = 0;
        for (long u1 = 1; u1 <= n; ++u1)
            for (long u2 = 1; u2 < u1; ++u2)
                for (long v1 = 1; u1 * v1 < n; ++v1)
                    for (long v2 = 1; u1 * v1 + u2 * v2 <= n; ++v2)
                        if (u1 * v1 + u2 * v2 == n) acc += v1 * v2 * v2;
        EXPECT_EQ(multiple_divisor_sum({1, 2}, n), acc) << n;
    }
}

TEST(Brackets, GoldenSeries) {
    expect_scaled(bracket_series({2}, 8), 1, 1, {1, 3, 4, 7, 6, 12, 8, 15});
    expect_scaled(bracket_series({4, 2}, 8), Rational(1, 6), 3, {1, 3, 15, 27, 78, 135});
    expect_scaled(bracket_series({4, 4, 4}, 11), Rational(1, 216), 6, {1, 9, 45, 190, 642, 1899});
    expect_scaled(bracket_series({3, 1, 3, 1}, 15), Rational(1, 4), 10, {1, 2, 8, 16, 43, 70});
    expect_scaled(bracket_series({1, 2, 3, 4, 5}, 19), Rational(1, 288), 15, {1, 17, 107, 512, 1985});
}

TEST(Brackets, ThreeRoutesAgree) {
    const int N = 40;
    for (const Index& s : compositions_up_to(8)) {
        QSeries a = bracket_series(s, N);
        QSeries b = bracket_series_eulerian(s, N);
        EXPECT_EQ(a, b) << format_word(s);
        if (weight(s) <= 6) EXPECT_EQ(a, bracket_series_divisor(s, N)) << format_word(s);
    }
}

TEST(Brackets, LeadingGap) {
    const int N = 40;
    for (const Index& s : compositions_up_to(7)) {
        int l = static_cast<int>(s.size());
        int gap = l * (l + 1) / 2;
        if (gap > N) continue;
        QSeries f = bracket_series(s, N);
        for (int n = 0; n < gap; ++n) EXPECT_EQ(f[n], 0);
        EXPECT_NE(f[gap], 0) << format_word(s);
    }
}

TEST(Brackets, DerivativeLaw) {
    const int N = 40;
    // bi-words of total weight <= 6 with lengths <= 3
    std::vector<BiIndex> words;
    std::function<void(BiIndex, int)> rec = [&](BiIndex w, int left) {
        if (!w.empty()) words.push_back(w);
        if (w.size() == 3) return;
        for (int s = 1; s <= left; ++s)
            for (int r = 0; s + r <= left; ++r) {
                BiIndex v = w;
                v.push_back({s, r});
                rec(v, left - s - r);
            }
    };
    rec({}, 6);
    for (const auto& w : words)
        EXPECT_EQ(qs_d(bibracket_series(w, N)), eval_hom(derivative(w), N)) << format_word(w);
}

TEST(Brackets, BiBracketBasics) {
    const int N = 30;
    QSeries f = bibracket_series({{1, 0}}, N);
    for (int n = 1; n <= N; ++n) {
        int c = 0;
        for (int d = 1; d <= n; ++d) c += n % d == 0;
        EXPECT_EQ(f[n], c);
    }
    EXPECT_EQ(bibracket_series({{2, 1}}, N), qs_d(bracket_series({1}, N)));
    EXPECT_EQ(bibracket_series(to_bi(Index{3, 2}), N), bracket_series({3, 2}, N));
    // direct definition for a length-2 bi-bracket
    BiIndex b{{2, 1}, {1, 2}};
    QSeries g = bibracket_series(b, 20);
    for (long n = 1; n <= 20; ++n) EXPECT_EQ(g[n], Rational(multiple_divisor_sum_bi(b, n)) / 2) << n;
}

TEST(Brackets, GtildeConstants) {
    EXPECT_EQ(gtilde_eisenstein(2, 10)[0], Rational(-1, 24));
    EXPECT_EQ(gtilde_eisenstein(4, 10)[0], Rational(1, 1440));
    EXPECT_EQ(gtilde_eisenstein(6, 10)[0], Rational(-1, 60480));
    EXPECT_EQ(gtilde_eisenstein(12, 10)[0], parse_rational("691/2615348736000"));
    EXPECT_EQ(gtilde_eisenstein(4, 10)[2], bracket_series({4}, 10)[2]);
    EXPECT_THROW(gtilde_eisenstein(3, 10), std::invalid_argument);
}

TEST(Brackets, CacheReturnsTruncations) {
    QSeries big = bracket_series({3, 1}, 45);
    QSeries small = bracket_series({3, 1}, 20);
    EXPECT_EQ(small.order(), 20);
    EXPECT_EQ(small, big);
}
