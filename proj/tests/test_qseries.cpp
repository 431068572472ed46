#include <qmzv/brackets.hpp>
#include <qmzv/qseries.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace qmzv;

namespace {

QSeries random_series(std::mt19937& rng, int N) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    QSeries f(N);
    for (int n = 0; n <= N; ++n) f[n] = make_rational(num(rng), den(rng));
    return f;
}

QSeries poly(std::initializer_list<int> c, int N) {
    QSeries f(N);
    int i = 0;
    for (int x : c) f[i++] = x;
    return f;
}

}  // namespace

TEST(QSeries, ProductTruncates) {
    QSeries f = poly({1, 1}, 5), g = poly({1, -1}, 5);
    EXPECT_EQ(qs_mul(f, g), poly({1, 0, -1}, 5));
    QSeries h = qs_mul(f, g.truncate(3));
    EXPECT_EQ(h.order(), 3);
}

TEST(QSeries, RingAxioms) {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 5; ++rep) {
        QSeries a = random_series(rng, 50), b = random_series(rng, 50), c = random_series(rng, 50);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(QSeries, DerivationRule) {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 5; ++rep) {
        QSeries a = random_series(rng, 50), b = random_series(rng, 50);
        EXPECT_EQ(qs_d(a * b), qs_d(a) * b + a * qs_d(b));
    }
    EXPECT_TRUE(qs_d(QSeries::constant(1, 10)).is_zero());
}

TEST(QSeries, ProductsOfBrackets) {
    const int N = 30;
    EXPECT_EQ(bracket_series({2}, N) * bracket_series({3}, N),
              bracket_series({3, 2}, N) + bracket_series({2, 3}, N) + bracket_series({5}, N) -
                  Rational(1, 12) * bracket_series({3}, N));
    EXPECT_EQ(bracket_series({1}, N) * bracket_series({1}, N),
              2 * bracket_series({1, 1}, N) + bracket_series({2}, N) - bracket_series({1}, N));
}

TEST(QSeries, DerivativeOfOne) {
    const int N = 30;
    QSeries d1 = qs_d(bracket_series({1}, N));
    EXPECT_EQ(d1, bracket_series({3}, N) + Rational(1, 2) * bracket_series({2}, N) - bracket_series({2, 1}, N));
    // n * sigma_0(n) by counting divisors
    for (int n = 1; n <= N; ++n) {
        int c = 0;
        for (int d = 1; d <= n; ++d) c += n % d == 0;
        EXPECT_EQ(d1[n], n * c);
    }
    EXPECT_EQ(d1, bibracket_series({{2, 1}}, N));
}

TEST(QSeries, EvalBasics) {
    mpfr_prec_t b = digits_to_bits(40);
    QSeries f = poly({1, 1, 1}, 2);
    auto v = qs_eval(f, Complex(b), 40);
    EXPECT_EQ(v.value.re.to_double(), 1.0);

    QSeries geo(200);
    for (int n = 0; n <= 200; ++n) geo[n] = 1;
    Complex half(BigFloat(0.5, b), BigFloat(b));
    auto g = qs_eval(geo, half, 40);
    BigFloat err = abs(g.value.re - BigFloat(2L, b));
    EXPECT_LE(err, g.tail_bound);
    // halving the order moves the value by less than the reported bound
    auto g2 = qs_eval(geo.truncate(100), half, 40);
    EXPECT_LE(abs(g2.value.re - g.value.re), g2.tail_bound);

    Complex one(BigFloat(1L, b), BigFloat(b));
    EXPECT_THROW(qs_eval(geo, one, 40), std::domain_error);
}

TEST(QSeries, EvalOfBracketTwoMatchesDivisorSum) {
    // [2](e^{-2 pi}) against a separately summed sigma_1 series
    mpfr_prec_t b = digits_to_bits(40);
    Complex tau(BigFloat(b), BigFloat(1L, b));
    Complex q = q_of_tau(tau);
    auto v = qs_eval(bracket_series({2}, 400), q, 40);
    BigFloat x = q.re, acc(b), xn(1L, b);
    for (int n = 1; n <= 60; ++n) {
        xn *= x;
        long sig = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) sig += d;
        acc += xn * sig;
    }
    EXPECT_LT(abs(v.value.re - acc).to_double(), 1e-35);
    EXPECT_LT(abs(v.value.im).to_double(), 1e-35);
}

TEST(Delta, Coefficients) {
    QSeries d = delta_series(10);
    EXPECT_EQ(d[0], 0);
    EXPECT_EQ(d[1], 1);
    EXPECT_EQ(d[2], -24);
    EXPECT_EQ(d[3], 252);
    EXPECT_EQ(d[4], -1472);
    EXPECT_EQ(d[5], 4830);
}

TEST(Delta, EisensteinIdentityWithUnitScalar) {
    // Match the q^1 coefficient to fix the scalar, then compare everything.
    const int N = 40;
    QSeries g6 = gtilde_eisenstein(6, N), g12 = gtilde_eisenstein(12, N);
    QSeries rhs = Rational(-3316800) * (g6 * g6) + Rational(3432000) * g12;
    QSeries d = delta_series(N);
    Rational scalar = d[1] / rhs[1];
    EXPECT_EQ(scalar, 1);
    EXPECT_EQ(d, scalar * rhs);
}

TEST(QSeries, JsonRoundTrip) {
    QSeries f = bracket_series({4, 2}, 12);
    auto j = to_json(f);
    EXPECT_EQ(j["coeffs"][3], "1/6");
    EXPECT_EQ(qseries_from_json(j), f);
    EXPECT_EQ(qseries_from_json(j).order(), 12);
}

TEST(QSeries, TextRendering) {
    EXPECT_EQ(to_text(bracket_series({2}, 8)), "q + 3q^2 + 4q^3 + 7q^4 + 6q^5 + 12q^6 + 8q^7 + 15q^8");
    EXPECT_EQ(to_text(poly({1, -1}, 3)), "1 - q");
}
