#pragma once
// Quasi-shuffle products, the partition involution, shuffle brackets and the
// evaluation map from words to q-series.

#include "brackets.hpp"
#include "exact.hpp"
#include "qseries.hpp"
#include "word.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qmzv {

template <class L>
using LetterComb = std::vector<std::pair<L, Rational>>;

// aw (.) bv = a(w (.) bv) + b(aw (.) v) + (a<>b)(w (.) v), tabulated over
// suffix pairs so shared subproblems are computed once.
template <class L, class Diamond>
LinComb<L> quasi_shuffle(const Word<L>& u, const Word<L>& v, Diamond&& diamond) {
    size_t m = u.size(), n = v.size();
    std::vector<std::vector<LinComb<L>>> R(m + 1, std::vector<LinComb<L>>(n + 1));
    for (size_t j = 0; j <= n; ++j) R[m][j] = LinComb<L>(Word<L>(v.begin() + j, v.end()));
    for (size_t i = 0; i <= m; ++i) R[i][n] = LinComb<L>(Word<L>(u.begin() + i, u.end()));
    for (size_t i = m; i-- > 0;) {
        for (size_t j = n; j-- > 0;) {
            LinComb<L> acc = R[i + 1][j].prepend(u[i]);
            acc += R[i][j + 1].prepend(v[j]);
            for (const auto& [c, x] : diamond(u[i], v[j])) acc.add(R[i + 1][j + 1].prepend(c), x);
            R[i][j] = std::move(acc);
        }
    }
    return R[0][0];
}

template <class L, class Product>
LinComb<L> bilinear(const LinComb<L>& a, const LinComb<L>& b, Product&& prod) {
    LinComb<L> out;
    for (const auto& [u, x] : a)
        for (const auto& [v, y] : b) out.add(prod(u, v), x * y);
    return out;
}

// ---- the four products ----

inline LinComb<int> stuffle(const Index& u, const Index& v) {
    return quasi_shuffle(u, v, [](int a, int b) { return LetterComb<int>{{a + b, Rational(1)}}; });
}

namespace detail {

// z_s = x^{s-1} y, encoded with x = 0, y = 1.
inline Word<int> to_xy(const Index& w) {
    Word<int> out;
    for (int s : w) {
        out.insert(out.end(), s - 1, 0);
        out.push_back(1);
    }
    return out;
}

inline Index from_xy(const Word<int>& xy) {
    Index out;
    int run = 0;
    for (int a : xy) {
        if (a == 0) ++run;
        else {
            out.push_back(run + 1);
            run = 0;
        }
    }
    if (run) throw std::logic_error("xy-word does not end in y");
    return out;
}

}  // namespace detail

inline LinComb<int> shuffle(const Index& u, const Index& v) {
    auto xy = quasi_shuffle(detail::to_xy(u), detail::to_xy(v), [](int, int) { return LetterComb<int>{}; });
    LinComb<int> out;
    for (const auto& [w, c] : xy) out.add(detail::from_xy(w), c);
    return out;
}

inline LetterComb<int> bracket_diamond(int a, int b) {
    LetterComb<int> out{{a + b, Rational(1)}};
    for (int j = 1; j <= a; ++j) out.push_back({j, lambda_coeff(a, b, j)});
    for (int j = 1; j <= b; ++j) out.push_back({j, lambda_coeff(b, a, j)});
    return out;
}

inline LetterComb<BiLetter> bibracket_diamond(const BiLetter& a, const BiLetter& b) {
    int r = a.r + b.r;
    Rational c = binomial(r, a.r);
    LetterComb<BiLetter> out{{BiLetter{a.s + b.s, r}, c}};
    for (int j = 1; j <= a.s; ++j) out.push_back({BiLetter{j, r}, c * lambda_coeff(a.s, b.s, j)});
    for (int j = 1; j <= b.s; ++j) out.push_back({BiLetter{j, r}, c * lambda_coeff(b.s, a.s, j)});
    return out;
}

inline LinComb<int> bracket_product(const Index& u, const Index& v) { return quasi_shuffle(u, v, bracket_diamond); }
inline LinComb<BiLetter> bracket_product(const BiIndex& u, const BiIndex& v) {
    return quasi_shuffle(u, v, bibracket_diamond);
}

inline LinComb<int> stuffle(const LinComb<int>& a, const LinComb<int>& b) {
    return bilinear(a, b, [](const Index& u, const Index& v) { return stuffle(u, v); });
}
inline LinComb<int> shuffle(const LinComb<int>& a, const LinComb<int>& b) {
    return bilinear(a, b, [](const Index& u, const Index& v) { return shuffle(u, v); });
}
template <class L>
LinComb<L> bracket_product(const LinComb<L>& a, const LinComb<L>& b) {
    return bilinear(a, b, [](const Word<L>& u, const Word<L>& v) { return bracket_product(u, v); });
}

// z_{s1} shuffle z_{s2} = sum_{a+b=s1+s2} (C(a-1,s1-1) + C(a-1,s2-1)) z_a z_b.
inline LinComb<int> shuffle_len1(int s1, int s2) {
    if (s1 < 1 || s2 < 1) throw std::invalid_argument("shuffle_len1 needs s1, s2 >= 1");
    LinComb<int> out;
    for (int a = 1; a < s1 + s2; ++a) out.add({a, s1 + s2 - a}, binomial(a - 1, s1 - 1) + binomial(a - 1, s2 - 1));
    return out;
}

// ---- partition involution ----

namespace detail {

// Sparse polynomial in a fixed number of variables with a degree cap per
// variable; terms above the caps are dropped since only one monomial is read.
class CappedPoly {
public:
    explicit CappedPoly(std::vector<int> cap) : cap_(std::move(cap)) { t_[std::vector<int>(cap_.size(), 0)] = 1; }

    // multiply by (sum_i lin[i] x_i)^e
    void mul_linear_pow(const std::vector<std::pair<int, int>>& lin, int e) {
        for (int k = 0; k < e; ++k) {
            std::map<std::vector<int>, Integer> nt;
            for (const auto& [ex, c] : t_) {
                for (const auto& [var, coef] : lin) {
                    if (ex[var] + 1 > cap_[var]) continue;
                    auto e2 = ex;
                    ++e2[var];
                    nt[e2] += c * coef;
                }
            }
            t_.clear();
            for (auto& [ex, c] : nt)
                if (c != 0) t_.emplace(ex, c);
        }
    }
    Integer coeff(const std::vector<int>& ex) const {
        auto it = t_.find(ex);
        return it == t_.end() ? Integer(0) : it->second;
    }

private:
    std::vector<int> cap_;
    std::map<std::vector<int>, Integer> t_;
};

// All vectors of l non-negative integers with the given sum.
inline void compositions(int l, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == l - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int x = 0; x <= total; ++x) {
        cur.push_back(x);
        compositions(l, total - x, cur, out);
        cur.pop_back();
    }
}

struct PartitionCache {
    std::mutex mu;
    std::map<BiIndex, LinComb<BiLetter>> m;
};

inline PartitionCache& partition_cache() {
    static PartitionCache c;
    return c;
}

inline LinComb<BiLetter> partition_uncached(const BiIndex& w) {
    int l = static_cast<int>(w.size());
    LinComb<BiLetter> out;
    if (l == 0) {
        out.add(w, 1);
        return out;
    }
    // target monomial prod X_j^{s_j-1} Y_j^{r_j}
    std::vector<int> xe(l), ye(l);
    int xdeg = 0, ydeg = 0;
    for (int j = 0; j < l; ++j) {
        xe[j] = w[j].s - 1;
        ye[j] = w[j].r;
        xdeg += xe[j];
        ydeg += ye[j];
    }
    // In T(X;Y) -> T(A;B): A_j = Y_1 + ... + Y_{l+1-j}, B_1 = X_l,
    // B_j = X_{l+1-j} - X_{l+2-j}. A candidate z_{s',r'} contributes the
    // coefficient of the target in prod A_j^{s'_j-1} B_j^{r'_j}.
    std::vector<std::vector<int>> avecs, bvecs;
    std::vector<int> cur;
    compositions(l, ydeg, cur, avecs);
    compositions(l, xdeg, cur, bvecs);
    std::vector<Integer> acoef(avecs.size()), bcoef(bvecs.size());
    for (size_t i = 0; i < avecs.size(); ++i) {
        CappedPoly p(ye);
        for (int j = 0; j < l; ++j) {
            std::vector<std::pair<int, int>> lin;
            for (int t = 0; t < l - j; ++t) lin.push_back({t, 1});
            p.mul_linear_pow(lin, avecs[i][j]);
        }
        acoef[i] = p.coeff(ye);
    }
    for (size_t i = 0; i < bvecs.size(); ++i) {
        CappedPoly p(xe);
        for (int j = 0; j < l; ++j) {
            std::vector<std::pair<int, int>> lin;
            if (j == 0) lin.push_back({l - 1, 1});
            else {
                lin.push_back({l - 1 - j, 1});
                lin.push_back({l - j, -1});
            }
            p.mul_linear_pow(lin, bvecs[i][j]);
        }
        bcoef[i] = p.coeff(xe);
    }
    for (size_t i = 0; i < avecs.size(); ++i) {
        if (acoef[i] == 0) continue;
        for (size_t k = 0; k < bvecs.size(); ++k) {
            if (bcoef[k] == 0) continue;
            BiIndex v(l);
            for (int j = 0; j < l; ++j) v[j] = {avecs[i][j] + 1, bvecs[k][j]};
            out.add(v, Rational(acoef[i] * bcoef[k]));
        }
    }
    return out;
}

}  // namespace detail

inline LinComb<BiLetter> partition_involution(const BiIndex& w) {
    check_word(w);
    auto& cache = detail::partition_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.m.find(w);
        if (it != cache.m.end()) return it->second;
    }
    LinComb<BiLetter> r = detail::partition_uncached(w);
    std::lock_guard<std::mutex> lock(cache.mu);
    cache.m.emplace(w, r);
    return r;
}

inline LinComb<BiLetter> partition_involution(const LinComb<BiLetter>& c) {
    LinComb<BiLetter> out;
    for (const auto& [w, x] : c) out.add(partition_involution(w), x);
    return out;
}

// Conjugation of a single partition datum (u; v) -> (v_1+...+v_l, ..., v_1; u_l, u_{l-1}-u_l, ..., u_1-u_2).
inline std::pair<std::vector<long>, std::vector<long>> conjugate_partition(const std::vector<long>& u,
                                                                           const std::vector<long>& v) {
    size_t l = u.size();
    std::vector<long> nu(l), nv(l);
    long acc = 0;
    for (size_t i = 0; i < l; ++i) acc += v[i];
    for (size_t j = 0; j < l; ++j) {
        nu[j] = acc;
        acc -= v[l - 1 - j];
    }
    nv[0] = u[l - 1];
    for (size_t j = 1; j < l; ++j) nv[j] = u[l - 1 - j] - u[l - j];
    return {nu, nv};
}

inline LinComb<BiLetter> second_product(const BiIndex& u, const BiIndex& v) {
    return partition_involution(bracket_product(partition_involution(u), partition_involution(v)));
}

inline LinComb<BiLetter> second_product(const LinComb<BiLetter>& a, const LinComb<BiLetter>& b) {
    return bilinear(a, b, [](const BiIndex& u, const BiIndex& v) { return second_product(u, v); });
}

// ---- shuffle brackets, explicit forms for l <= 4 ----

inline LinComb<BiLetter> shuffle_bracket(const Index& s) {
    size_t l = s.size();
    if (l == 0) return LinComb<BiLetter>(BiIndex{});
    if (l > 4) throw std::invalid_argument("shuffle_bracket is available for length <= 4 only");
    for (int x : s)
        if (x < 1) throw std::invalid_argument("index entries must be >= 1");
    LinComb<BiLetter> out;
    auto mb = [](std::initializer_list<int> up, std::initializer_list<int> lo) {
        BiIndex b;
        auto r = lo.begin();
        for (int x : up) b.push_back({x, *r++});
        return b;
    };
    auto br = [](std::initializer_list<int> up) {
        BiIndex b;
        for (int x : up) b.push_back({x, 0});
        return b;
    };
    auto one = [&](int k) { return s[k] == 1; };
    const Rational h(1, 2), sixth(1, 6), quarter(1, 4), tf(1, 24);
    if (l == 1) {
        out.add(br({s[0]}), 1);
    } else if (l == 2) {
        int a = s[0], b = s[1];
        out.add(br({a, b}), 1);
        if (one(1)) {
            out.add(mb({a}, {1}), h);
            out.add(br({a}), -h);
        }
    } else if (l == 3) {
        int a = s[0], b = s[1], c = s[2];
        out.add(br({a, b, c}), 1);
        if (one(2)) {
            out.add(mb({a, b}, {0, 1}), h);
            out.add(br({a, b}), -h);
        }
        if (one(1)) {
            out.add(mb({a, c}, {1, 0}), h);
            out.add(mb({a, c}, {0, 1}), -h);
            out.add(br({a, c}), -h);
        }
        if (one(1) && one(2)) {
            out.add(mb({a}, {2}), sixth);
            out.add(mb({a}, {1}), -sixth * Rational(3, 2));
            out.add(br({a}), sixth);
        }
    } else {
        int a = s[0], b = s[1], c = s[2], d = s[3];
        out.add(br({a, b, c, d}), 1);
        if (one(3)) {
            out.add(mb({a, b, c}, {0, 0, 1}), h);
            out.add(br({a, b, c}), -h);
        }
        if (one(2)) {
            out.add(mb({a, b, d}, {0, 1, 0}), h);
            out.add(mb({a, b, d}, {0, 0, 1}), -h);
            out.add(br({a, b, d}), -h);
        }
        if (one(1)) {
            out.add(mb({a, c, d}, {1, 0, 0}), h);
            out.add(mb({a, c, d}, {0, 1, 0}), -h);
            out.add(br({a, c, d}), -h);
        }
        if (one(1) && one(3)) {
            out.add(mb({a, c}, {1, 1}), quarter);
            out.add(mb({a, c}, {0, 2}), -2 * quarter);
            out.add(mb({a, c}, {1, 0}), -quarter);
            out.add(br({a, c}), quarter);
        }
        if (one(2) && one(3)) {
            out.add(mb({a, b}, {0, 2}), sixth);
            out.add(mb({a, b}, {0, 1}), -sixth * Rational(3, 2));
            out.add(br({a, b}), sixth);
        }
        if (one(1) && one(2)) {
            out.add(mb({a, d}, {0, 2}), sixth);
            out.add(mb({a, d}, {1, 1}), -sixth);
            out.add(mb({a, d}, {0, 1}), sixth * Rational(3, 2));
            out.add(mb({a, d}, {2, 0}), sixth);
            out.add(mb({a, d}, {1, 0}), -sixth * Rational(3, 2));
            out.add(br({a, d}), sixth);
        }
        if (one(1) && one(2) && one(3)) {
            out.add(mb({a}, {3}), tf);
            out.add(mb({a}, {2}), -2 * tf);
            out.add(mb({a}, {1}), tf * Rational(11, 6));
            out.add(br({a}), -tf);
        }
    }
    return out;
}

inline LinComb<BiLetter> shuffle_bracket(const LinComb<int>& c) {
    LinComb<BiLetter> out;
    for (const auto& [w, x] : c) out.add(shuffle_bracket(w), x);
    return out;
}

// ---- derivative and evaluation ----

// d mb(s;r) = sum_j s_j (r_j+1) mb(.., s_j+1, ..; .., r_j+1, ..)
inline LinComb<BiLetter> derivative(const BiIndex& w) {
    LinComb<BiLetter> out;
    for (size_t j = 0; j < w.size(); ++j) {
        BiIndex v(w);
        ++v[j].s;
        ++v[j].r;
        out.add(v, Rational(w[j].s * (w[j].r + 1)));
    }
    return out;
}

inline LinComb<BiLetter> derivative(const LinComb<BiLetter>& c) {
    LinComb<BiLetter> out;
    for (const auto& [w, x] : c) out.add(derivative(w), x);
    return out;
}

inline QSeries eval_hom(const LinComb<BiLetter>& c, int N) {
    QSeries f(N);
    for (const auto& [w, x] : c) f.axpy(x, bibracket_series(w, N));
    return f;
}

inline QSeries eval_hom(const LinComb<int>& c, int N) {
    QSeries f(N);
    for (const auto& [w, x] : c) f.axpy(x, bracket_series(w, N));
    return f;
}

}  // namespace qmzv
