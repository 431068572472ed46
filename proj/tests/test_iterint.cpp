#include <qmzv/iterint.hpp>

#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <tuple>
#include <random>

using namespace qmzv;

namespace {

LinComb<int> lc(std::initializer_list<std::pair<Index, Rational>> t) {
    LinComb<int> c;
    for (const auto& [w, x] : t) c.add(w, x);
    return c;
}

std::vector<Index> words_up_to(int maxw) {
    std::vector<Index> out;
    std::function<void(Index, int)> rec = [&](Index w, int left) {
        out.push_back(w);
        for (int a = 1; a <= left; ++a) {
            Index v = w;
            v.push_back(a);
            rec(v, left - a);
        }
    };
    rec({}, maxw);
    return out;
}

// I(1; b 0^n; 0) from 0 = I(1;0;0) sh I(1; b 0^{n-1}; 0), by letter-string
// bookkeeping only.
LinComb<int> In_by_shuffle(const std::vector<int>& b, int n) {
    if (n == 0) {
        Index s;
        int run = 0;
        for (int x : b) {
            if (x == 0) ++run;
            else {
                s.push_back(run + 1);
                run = 0;
            }
        }
        if (run) return In_by_shuffle(std::vector<int>(b.begin(), b.end() - run), run);
        return LinComb<int>(s);
    }
    // the zero can land in front of any letter of b, or in the trailing block (n ways)
    LinComb<int> acc;
    for (size_t i = 0; i < b.size(); ++i) {
        std::vector<int> c(b.begin(), b.begin() + i);
        c.push_back(0);
        c.insert(c.end(), b.begin() + i, b.end());
        acc.add(In_by_shuffle(c, n - 1), 1);
    }
    if (b.empty()) return {};
    return Rational(-1, n) * acc;
}

TPoly tmul(const TPoly& a, const TPoly& b, RegKind kind) {
    TPoly out;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) {
            LinComb<int> p = kind == RegKind::shuffle ? shuffle(x, y) : stuffle(x, y);
            tpoly_add(out, TPoly{{i + j, p}}, 1);
        }
    return out;
}

}  // namespace

TEST(InReduce, Examples) {
    EXPECT_EQ(In_reduce(1, {2}), lc({{{3}, -2}}));
    EXPECT_EQ(In_reduce(0, {2, 5}), lc({{{2, 5}, 1}}));
    EXPECT_EQ(In_reduce(2, {1, 1}), lc({{{1, 3}, 1}, {{2, 2}, 1}, {{3, 1}, 1}}));
    EXPECT_TRUE(In_reduce(3, {}).empty());
    EXPECT_EQ(In_reduce(0, {}), lc({{{}, 1}}));
}

TEST(InReduce, AgreesWithShuffleBookkeeping) {
    for (const Index& s : words_up_to(4)) {
        if (s.empty()) continue;
        std::vector<int> b;
        for (int x : s) {
            b.insert(b.end(), x - 1, 0);
            b.push_back(1);
        }
        for (int n = 0; n <= 3; ++n) EXPECT_EQ(In_reduce(n, s), In_by_shuffle(b, n)) << format_word(s) << " n=" << n;
    }
}

TEST(Coproduct, Examples) {
    IntTensor want;
    want.add(Index{}, Index{3, 2}, 1);
    want.add(Index{2}, Index{3}, 3);
    want.add(Index{3}, Index{2}, 2);
    want.add(Index{3, 2}, Index{}, 1);
    EXPECT_EQ(goncharov_coproduct(Index{3, 2}), want);

    IntTensor unit;
    unit.add(Index{}, Index{}, 1);
    EXPECT_EQ(goncharov_coproduct(Index{}), unit);

    IntTensor prim;
    prim.add(Index{}, Index{2}, 1);
    prim.add(Index{2}, Index{}, 1);
    EXPECT_EQ(goncharov_coproduct(Index{2}), prim);
}

TEST(Coproduct, Grading) {
    for (const Index& w : words_up_to(6))
        for (const auto& [k, x] : goncharov_coproduct(w)) EXPECT_EQ(weight(k.first) + weight(k.second), weight(w));
}

TEST(Coproduct, ShuffleHomomorphism) {
    std::mt19937 rng(1);
    auto words = words_up_to(3);
    for (int rep = 0; rep < 40; ++rep) {
        const Index& u = words[rng() % words.size()];
        const Index& v = words[rng() % words.size()];
        if (weight(u) + weight(v) > 5) continue;
        EXPECT_EQ(goncharov_coproduct(shuffle(u, v)), tensor_shuffle(goncharov_coproduct(u), goncharov_coproduct(v)))
            << format_word(u) << " sh " << format_word(v);
    }
}

TEST(Coproduct, Coassociative) {
    for (const Index& w : words_up_to(4)) {
        // sum over terms a (x) b (x) c, keyed as nested pairs
        std::map<std::tuple<Index, Index, Index>, Rational> lhs, rhs;
        for (const auto& [k, x] : goncharov_coproduct(w)) {
            for (const auto& [k2, y] : goncharov_coproduct(k.first)) lhs[{k2.first, k2.second, k.second}] += x * y;
            for (const auto& [k2, y] : goncharov_coproduct(k.second)) rhs[{k.first, k2.first, k2.second}] += x * y;
        }
        std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
        EXPECT_EQ(lhs, rhs) << format_word(w);
    }
}

TEST(Deconcatenation, Splittings) {
    Tensor<int> t = deconcat_coproduct(Index{3, 2});
    EXPECT_EQ(t.size(), 3u);
    EXPECT_EQ(t.coeff({}, {3, 2}), 1);
    EXPECT_EQ(t.coeff({3}, {2}), 1);
    EXPECT_EQ(t.coeff({3, 2}, {}), 1);
    EXPECT_EQ(deconcat_coproduct(Index{1, 2, 3, 4}).size(), 5u);
    EXPECT_EQ(deconcat_coproduct(Index{2}).size(), 2u);
}

TEST(Regularization, Examples) {
    EXPECT_EQ(shuffle_regularize({2}), (TPoly{{0, lc({{{2}, 1}})}}));
    EXPECT_EQ(shuffle_regularize({1}), (TPoly{{1, lc({{{}, 1}})}}));
    EXPECT_EQ(shuffle_regularize({1, 2}), (TPoly{{1, lc({{{2}, 1}})}, {0, lc({{{2, 1}, -2}})}}));
    EXPECT_EQ(stuffle_regularize({2}), (TPoly{{0, lc({{{2}, 1}})}}));
    EXPECT_EQ(stuffle_regularize({1}), (TPoly{{1, lc({{{}, 1}})}}));
    EXPECT_EQ(stuffle_regularize({1, 2}), (TPoly{{1, lc({{{2}, 1}})}, {0, lc({{{2, 1}, -1}, {{3}, -1}})}}));
}

TEST(Regularization, Homomorphisms) {
    std::mt19937 rng(2);
    auto words = words_up_to(4);
    for (int rep = 0; rep < 60; ++rep) {
        const Index& u = words[rng() % words.size()];
        const Index& v = words[rng() % words.size()];
        if (weight(u) + weight(v) > 6) continue;
        EXPECT_EQ(regularize(RegKind::shuffle, shuffle(u, v)),
                  tmul(shuffle_regularize(u), shuffle_regularize(v), RegKind::shuffle));
        EXPECT_EQ(regularize(RegKind::stuffle, stuffle(u, v)),
                  tmul(stuffle_regularize(u), stuffle_regularize(v), RegKind::stuffle));
    }
}

TEST(Regularization, Reconstruction) {
    for (const Index& w : words_up_to(5)) {
        for (RegKind kind : {RegKind::shuffle, RegKind::stuffle}) {
            auto prod = [&](const LinComb<int>& a, const LinComb<int>& b) {
                return kind == RegKind::shuffle ? shuffle(a, b) : stuffle(a, b);
            };
            LinComb<int> back;
            for (const auto& [e, comb] : detail::regularize(kind, w)) {
                LinComb<int> t = comb;
                for (int i = 0; i < e; ++i) t = prod(t, LinComb<int>(Index{1}));
                back += t;
            }
            EXPECT_EQ(back, LinComb<int>(w)) << format_word(w);
            for (const auto& [e, comb] : detail::regularize(kind, w))
                for (const auto& [u, x] : comb) EXPECT_TRUE(is_admissible(u));
        }
    }
}

TEST(Tensor, JsonRoundTrip) {
    IntTensor t = goncharov_coproduct(Index{3, 2});
    EXPECT_EQ(tensor_from_json(to_json(t)), t);
}
