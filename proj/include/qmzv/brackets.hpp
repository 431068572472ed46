#pragma once
// Multiple divisor sums, brackets, bi-brackets and the normalized
// Eisenstein series Gt_k = -B_k/(2 k!) + [k].

#include "exact.hpp"
#include "qseries.hpp"
#include "word.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace qmzv {

namespace detail {

inline Integer ipow(long base, long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return r;
}

// Enumerates u_1 > ... > u_l > 0, v_i > 0 with sum u_i v_i = n and adds
// prod u_i^{a_i} v_i^{b_i}.
inline void divisor_enum(const std::vector<int>& a, const std::vector<int>& b, size_t pos, long rest,
                         long ubound, Integer prod, Integer& acc) {
    size_t l = b.size();
    if (pos == l) {
        if (rest == 0) acc += prod;
        return;
    }
    long remaining = static_cast<long>(l - pos);
    // the later u's are at least remaining-1, ..., 1
    long min_tail = (remaining - 1) * remaining / 2;
    for (long u = remaining; u < ubound; ++u) {
        if (u + min_tail > rest) break;
        for (long v = 1; u * v + min_tail <= rest; ++v) {
            Integer p = prod * ipow(u, a[pos]) * ipow(v, b[pos]);
            divisor_enum(a, b, pos + 1, rest - u * v, u, p, acc);
        }
    }
}

// Nested sum over u_1 > ... > u_l > 0 of prod_j g_j(u_j), where g_j(u) is a
// series supported on multiples of u with integer coefficients.
inline std::vector<Integer> nested_sum(int N, size_t l,
                                       const std::function<void(size_t, long, std::vector<Integer>&)>& g) {
    // T[j] = sum over u_j > ... > u_l (j = 0..l-1), T[l] = 1.
    std::vector<std::vector<Integer>> T(l + 1, std::vector<Integer>(N + 1, 0));
    T[l][0] = 1;
    std::vector<Integer> gu(N + 1);
    std::vector<int> low(l + 1, N + 1);  // lowest nonzero degree of T[j]
    low[l] = 0;
    for (long u = 1; u <= N; ++u) {
        for (size_t j = 0; j < l; ++j) {
            if (low[j + 1] > N) continue;
            if (u + low[j + 1] > N) continue;
            g(j, u, gu);
            auto& dst = T[j];
            const auto& src = T[j + 1];
            for (long m = u; m + low[j + 1] <= N; m += u) {
                if (gu[m] == 0) continue;
                for (long n = low[j + 1]; n + m <= N; ++n) {
                    if (src[n] == 0) continue;
                    mpz_addmul(dst[n + m].get_mpz_t(), gu[m].get_mpz_t(), src[n].get_mpz_t());
                }
            }
            if (u + low[j + 1] < low[j]) low[j] = static_cast<int>(u + low[j + 1]);
        }
    }
    return T[0];
}

struct SeriesCache {
    std::mutex mu;
    std::map<BiIndex, QSeries> m;
};

inline SeriesCache& bibracket_cache() {
    static SeriesCache c;
    return c;
}

}  // namespace detail

// sigma_{r_1..r_l}(n), by enumerating the partitions directly.
inline Integer multiple_divisor_sum(const std::vector<int>& r, long n) {
    if (r.empty()) throw std::invalid_argument("multiple_divisor_sum needs l >= 1");
    if (n < 1) throw std::invalid_argument("multiple_divisor_sum needs n >= 1");
    for (int x : r)
        if (x < 0) throw std::invalid_argument("exponents must be >= 0");
    Integer acc = 0;
    std::vector<int> zero(r.size(), 0);
    detail::divisor_enum(zero, r, 0, n, n + 1, Integer(1), acc);
    return acc;
}

inline Integer multiple_divisor_sum_bi(const BiIndex& b, long n) {
    std::vector<int> a, e;
    for (const auto& x : b) {
        a.push_back(x.r);
        e.push_back(x.s - 1);
    }
    Integer acc = 0;
    detail::divisor_enum(a, e, 0, n, n + 1, Integer(1), acc);
    return acc;
}

inline Integer bracket_denominator(const BiIndex& b) {
    Integer d = 1;
    for (const auto& x : b) d *= factorial(x.s - 1) * factorial(x.r);
    return d;
}

inline void check_word(const BiIndex& b) {
    for (const auto& x : b)
        if (x.s < 1 || x.r < 0) throw std::invalid_argument("bi-index needs s >= 1, r >= 0");
}

// Bracket by the divisor-sum definition, coefficient by coefficient.
inline QSeries bracket_series_divisor(const Index& s, int N) {
    BiIndex b = to_bi(s);
    check_word(b);
    std::vector<Integer> c(N + 1, 0);
    if (s.empty()) c[0] = 1;
    else
        for (long n = 1; n <= N; ++n) c[n] = multiple_divisor_sum_bi(b, n);
    QSeries f = QSeries::from_integers(c);
    f *= Rational(1, 1) / Rational(bracket_denominator(b));
    return f;
}

// Bracket by the Eulerian form: sum over n_1 > ... > n_l of prod
// t P_{s-1}(t)/((s-1)!(1-t)^s) at t = q^{n_j}.
inline QSeries bracket_series_eulerian(const Index& s, int N) {
    for (int x : s)
        if (x < 1) throw std::invalid_argument("index entries must be >= 1");
    if (s.empty()) return QSeries::constant(1, N);
    // expand t P_{s-1}(t)/(1-t)^s as an integer power series in t
    std::vector<std::vector<Integer>> li(s.size());
    for (size_t j = 0; j < s.size(); ++j) {
        Polynomial P = eulerian_poly(s[j] - 1);
        std::vector<Integer> c(N + 1, 0);
        for (long m = 0; m <= N; ++m) {
            Integer acc = 0;
            for (long i = 0; i <= P.degree() && i + 1 <= m; ++i)
                acc += P.coeff(i).get_num() * binomial_z(m - 1 - i + s[j] - 1, s[j] - 1);
            c[m] = acc;
        }
        li[j] = std::move(c);
    }
    auto g = [&](size_t j, long u, std::vector<Integer>& out) {
        for (long m = 0; m <= N; ++m) out[m] = 0;
        for (long t = 1; t * u <= N; ++t) out[t * u] = li[j][t];
    };
    QSeries f = QSeries::from_integers(detail::nested_sum(N, s.size(), g));
    f *= Rational(1) / Rational(bracket_denominator(to_bi(s)));
    return f;
}

namespace detail {

inline QSeries bibracket_series_uncached(const BiIndex& b, int N) {
    if (b.empty()) return QSeries::constant(1, N);
    auto g = [&](size_t j, long u, std::vector<Integer>& out) {
        for (long m = 0; m <= N; ++m) out[m] = 0;
        Integer ur = ipow(u, b[j].r);
        for (long v = 1; v * u <= N; ++v) out[v * u] = ur * ipow(v, b[j].s - 1);
    };
    QSeries f = QSeries::from_integers(nested_sum(N, b.size(), g));
    f *= Rational(1) / Rational(bracket_denominator(b));
    return f;
}

}  // namespace detail

// Bi-bracket series; memoized per word, reusing any longer cached series.
inline QSeries bibracket_series(const BiIndex& b, int N) {
    check_word(b);
    if (N < 0) throw std::invalid_argument("negative order");
    auto& cache = detail::bibracket_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.m.find(b);
        if (it != cache.m.end() && it->second.order() >= N) return it->second.truncate(N);
    }
    QSeries f = detail::bibracket_series_uncached(b, N);
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.m.find(b);
    if (it == cache.m.end() || it->second.order() < N) cache.m[b] = f;
    return f;
}

inline QSeries bracket_series(const Index& s, int N) {
    for (int x : s)
        if (x < 1) throw std::invalid_argument("index entries must be >= 1");
    return bibracket_series(to_bi(s), N);
}

// -B_k/(2 k!), the rational constant term of Gt_k.
inline Rational gtilde_constant(int k) {
    if (k < 2 || k % 2) throw std::invalid_argument("gtilde needs even k >= 2");
    return -bernoulli(k) / (2 * Rational(factorial(k)));
}

inline QSeries gtilde_eisenstein(int k, int N) {
    QSeries f = bracket_series({k}, N);
    f[0] += gtilde_constant(k);
    return f;
}

}  // namespace qmzv
