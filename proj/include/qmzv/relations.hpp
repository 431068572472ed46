#pragma once
// Exact kernels of coefficient matrices, discovery of Q-linear relations among
// truncated q-series, dimension generating series, and conversions of
// q-analogues of multiple zeta values into (bi-)brackets.

#include "brackets.hpp"
#include "exact.hpp"
#include "qseries.hpp"
#include "word.hpp"
#include "words.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmzv {

using RationalMatrix = std::vector<std::vector<Rational>>;

namespace detail {

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<size_t> rref(RationalMatrix& R, size_t cols) {
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < R.size(); ++c) {
        size_t p = r;
        while (p < R.size() && R[p][c] == 0) ++p;
        if (p == R.size()) continue;
        std::swap(R[p], R[r]);
        Rational inv = 1 / R[r][c];
        for (size_t j = c; j < cols; ++j) R[r][j] *= inv;
        for (size_t i = 0; i < R.size(); ++i) {
            if (i == r || R[i][c] == 0) continue;
            Rational f = R[i][c];
            for (size_t j = c; j < cols; ++j) R[i][j] -= f * R[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    R.resize(r);
    return piv;
}

}  // namespace detail

// Right kernel. Rows are cleared to integers and brought to echelon form by
// Bareiss elimination; the rank-sized echelon block is then back-substituted.
inline std::vector<std::vector<Rational>> rational_kernel(const RationalMatrix& mat, size_t cols) {
    std::vector<std::vector<Integer>> M;
    for (const auto& row : mat) {
        if (row.size() != cols) throw std::invalid_argument("rational_kernel: ragged matrix");
        Integer l = 1;
        for (const auto& x : row) l = lcm(l, Integer(x.get_den()));
        std::vector<Integer> r(cols);
        bool nz = false;
        for (size_t j = 0; j < cols; ++j) {
            r[j] = Integer(row[j] * l);
            nz |= r[j] != 0;
        }
        if (nz) M.push_back(std::move(r));
    }
    size_t rows = M.size(), rank = 0;
    Integer prev = 1;
    std::vector<size_t> piv;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t p = rank;
        while (p < rows && M[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(M[p], M[rank]);
        for (size_t i = rank + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                Integer v = M[rank][c] * M[i][j] - M[i][c] * M[rank][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                M[i][j] = v;
            }
            M[i][c] = 0;
        }
        prev = M[rank][c];
        piv.push_back(c);
        ++rank;
    }
    RationalMatrix R(rank, std::vector<Rational>(cols));
    for (size_t i = 0; i < rank; ++i)
        for (size_t j = 0; j < cols; ++j) R[i][j] = Rational(M[i][j]);
    detail::rref(R, cols);
    std::set<size_t> pset(piv.begin(), piv.end());
    RationalMatrix K;
    for (size_t f = 0; f < cols; ++f) {
        if (pset.count(f)) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (size_t i = 0; i < rank; ++i) v[piv[i]] = -R[i][f];
        K.push_back(std::move(v));
    }
    // canonical form: reduced echelon basis, leading entries 1
    detail::rref(K, cols);
    return K;
}

inline std::vector<std::vector<Rational>> rational_kernel(const RationalMatrix& mat) {
    return rational_kernel(mat, mat.empty() ? 0 : mat.front().size());
}

// ---- relation discovery ----

class SeriesFamily {
public:
    SeriesFamily() = default;
    explicit SeriesFamily(int order) : order_(order) {}

    // weight <= 0 means unknown (no safety-margin check for this member)
    void add(const std::string& label, const QSeries& f, int weight = 0) {
        if (std::find(labels_.begin(), labels_.end(), label) != labels_.end())
            throw std::invalid_argument("SeriesFamily: duplicate label " + label);
        if (order_ < 0) order_ = f.order();
        if (f.order() < order_) throw std::invalid_argument("SeriesFamily: series " + label + " is too short");
        labels_.push_back(label);
        series_.push_back(f.truncate(order_));
        weights_.push_back(weight);
    }
    int order() const { return order_; }
    size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<QSeries>& series() const { return series_; }
    int max_weight() const { return weights_.empty() ? 0 : *std::max_element(weights_.begin(), weights_.end()); }

private:
    int order_ = -1;
    std::vector<std::string> labels_;
    std::vector<QSeries> series_;
    std::vector<int> weights_;
};

struct Relation {
    std::vector<Rational> coeffs;  // leading nonzero entry 1
    std::vector<Integer> integral;  // coeffs with denominators cleared, content 1
    int verified_to_order = -1;
};

struct RelationSet {
    std::vector<std::string> labels;
    std::vector<Relation> relations;
    int order = 0;
    bool below_margin = false;
    std::vector<std::string> warnings;
};

inline QSeries combine(const SeriesFamily& fam, const std::vector<Rational>& c) {
    QSeries acc(fam.order());
    for (size_t i = 0; i < fam.size(); ++i)
        if (c[i] != 0) acc += c[i] * fam.series()[i];
    return acc;
}

inline std::vector<Integer> clear_denominators(const std::vector<Rational>& v) {
    Integer l = 1, g = 0;
    for (const auto& x : v) l = lcm(l, Integer(x.get_den()));
    std::vector<Integer> out;
    for (const auto& x : v) {
        out.push_back(Integer(x * l));
        g = gcd(g, out.back());
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

// Kernel of the (N+1) x #series coefficient matrix.
inline RelationSet find_relations(const SeriesFamily& fam) {
    RelationSet rs;
    rs.labels = fam.labels();
    rs.order = fam.order();
    int w = fam.max_weight();
    if (w > 0 && fam.order() < 2 * w + 20) {
        rs.below_margin = true;
        rs.warnings.push_back("order " + std::to_string(fam.order()) + " is below the safety margin 2*" +
                              std::to_string(w) + "+20; relations may be artefacts of truncation");
    }
    RationalMatrix M(fam.order() + 1, std::vector<Rational>(fam.size()));
    for (int n = 0; n <= fam.order(); ++n)
        for (size_t j = 0; j < fam.size(); ++j) M[n][j] = fam.series()[j][n];
    for (auto& v : rational_kernel(M, fam.size())) {
        if (!combine(fam, v).is_zero()) throw std::logic_error("find_relations: kernel vector fails verification");
        rs.relations.push_back({v, clear_denominators(v), fam.order()});
    }
    return rs;
}

// Relations at order N that persist at order N + extra.
struct StableRelations {
    RelationSet at_order;
    RelationSet at_extended;
    bool stable = false;
};

inline StableRelations find_relations_stable(const std::function<SeriesFamily(int)>& build, int N, int extra = 10) {
    StableRelations s{find_relations(build(N)), find_relations(build(N + extra)), false};
    s.stable = s.at_order.relations.size() == s.at_extended.relations.size();
    for (size_t i = 0; s.stable && i < s.at_order.relations.size(); ++i)
        s.stable = s.at_order.relations[i].coeffs == s.at_extended.relations[i].coeffs;
    if (s.stable)
        for (auto& r : s.at_order.relations) r.verified_to_order = N + extra;
    return s;
}

// true when some relation is proportional to v
inline bool contains_relation(const RelationSet& rs, const std::vector<Rational>& v) {
    RationalMatrix R;
    for (const auto& r : rs.relations) R.push_back(r.coeffs);
    size_t before = detail::rref(R, v.size()).size();
    R.push_back(v);
    return detail::rref(R, v.size()).size() == before;
}

inline nlohmann::json to_json(const RelationSet& rs) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rs.relations) {
        nlohmann::json terms = nlohmann::json::array();
        for (size_t i = 0; i < r.coeffs.size(); ++i)
            if (r.coeffs[i] != 0) terms.push_back({{"label", rs.labels[i]}, {"coeff", to_string(r.coeffs[i])}});
        out.push_back({{"verified_to_order", r.verified_to_order}, {"terms", terms}});
    }
    return out;
}

inline std::string to_text(const RelationSet& rs) {
    std::string out;
    for (const auto& r : rs.relations) {
        std::string line;
        for (size_t i = 0; i < r.coeffs.size(); ++i) {
            const Rational& c = r.coeffs[i];
            if (c == 0) continue;
            bool neg = c < 0;
            Rational a = neg ? Rational(-c) : c;
            if (line.empty()) line += neg ? "-" : "";
            else line += neg ? " - " : " + ";
            line += (a == 1 ? "" : to_string(a) + "*") + rs.labels[i];
        }
        out += line + " = 0   (verified to order " + std::to_string(r.verified_to_order) + ")\n";
    }
    return out;
}

// ---- dimension generating series ----

struct BKSeries {
    int maxk = 0;
    std::vector<Integer> E, O, S;
    std::vector<std::vector<Integer>> dims;  // dims[k][l], l <= 4
};

inline BKSeries bk_dim_series(int maxk) {
    if (maxk < 0 || maxk > 40) throw std::invalid_argument("bk_dim_series: weight bound must be in 0..40");
    const int K = maxk + 1, L = 5;
    BKSeries b;
    b.maxk = maxk;
    b.E.assign(K, 0);
    b.O.assign(K, 0);
    b.S.assign(K, 0);
    for (int k = 2; k < K; k += 2) b.E[k] = 1;
    for (int k = 3; k < K; k += 2) b.O[k] = 1;
    // X^12 / ((1 - X^4)(1 - X^6))
    for (int a = 0; 12 + 4 * a < K; ++a)
        for (int c = 0; 12 + 4 * a + 6 * c < K; ++c) b.S[12 + 4 * a + 6 * c] += 1;
    using Bi = std::vector<std::vector<Integer>>;  // [l][k]
    auto mul = [&](const Bi& x, const Bi& y) {
        Bi z(L, std::vector<Integer>(K, 0));
        for (int l1 = 0; l1 < L; ++l1)
            for (int l2 = 0; l1 + l2 < L; ++l2)
                for (int k1 = 0; k1 < K; ++k1) {
                    if (x[l1][k1] == 0) continue;
                    for (int k2 = 0; k1 + k2 < K; ++k2) z[l1 + l2][k1 + k2] += x[l1][k1] * y[l2][k2];
                }
        return z;
    };
    // 1 / (1 - A) with A = O Y - S Y^2 + S Y^4, as sum of A^n
    Bi A(L, std::vector<Integer>(K, 0)), inv(L, std::vector<Integer>(K, 0)), pw(L, std::vector<Integer>(K, 0));
    for (int k = 0; k < K; ++k) {
        A[1][k] = b.O[k];
        A[2][k] = -b.S[k];
        A[4][k] = b.S[k];
    }
    pw[0][0] = 1;
    for (int n = 0; n < L; ++n) {
        for (int l = 0; l < L; ++l)
            for (int k = 0; k < K; ++k) inv[l][k] += pw[l][k];
        pw = mul(pw, A);
    }
    Bi num(L, std::vector<Integer>(K, 0));
    num[0][0] = 1;
    for (int k = 0; k < K; ++k) num[1][k] = b.E[k];
    Bi d = mul(num, inv);
    b.dims.assign(K, std::vector<Integer>(L, 0));
    for (int k = 0; k < K; ++k)
        for (int l = 0; l < L; ++l) b.dims[k][l] = d[l][k];
    return b;
}

// ---- q-analogues ----

// sum_{j=1}^{k-1} b_{i,j} t^j / j! = binom(t + k - 1 - i, k - 1); entry j-1 of the result is b_{i,j}
inline std::vector<Rational> qana_basis_change(int i, int k) {
    if (k < 2) throw std::invalid_argument("qana_basis_change: k must be >= 2");
    if (i < 1 || i > k - 1) throw std::invalid_argument("qana_basis_change: i must lie in 1..k-1");
    Polynomial p(std::vector<Rational>{Rational(1)});
    for (int m = 0; m < k - 1; ++m) p = p * Polynomial(std::vector<Rational>{Rational(k - 1 - i - m), Rational(1)});
    Rational inv = Rational(1) / Rational(factorial(k - 1));
    std::vector<Rational> b;
    for (int j = 1; j <= k - 1; ++j) b.push_back(p.coeff(j) * inv * Rational(factorial(j)));
    return b;
}

// Q^E_s(t) = t P_{s-1}(t) / (s-1)!, the numerator of [s]
inline Polynomial qE_poly(int s) {
    if (s < 1) throw std::invalid_argument("qE_poly: s must be >= 1");
    Polynomial P = eulerian_poly(s - 1);
    return (Rational(1) / Rational(factorial(s - 1))) * (Polynomial(std::vector<Rational>{0, 1}) * P);
}

// Q(t)/(1-t)^s = sum_j c_j Q^E_j(t)/(1-t)^j for Q of degree <= s-1 with Q(0) = 0
inline std::map<int, Rational> qana_letter(const Polynomial& Q, int s) {
    if (s < 1) throw std::invalid_argument("qana_letter: s must be >= 1");
    if (Q.coeff(0) != 0 || Q.degree() > std::max(s - 1, 1))
        throw std::invalid_argument("qana_letter: need Q(0) = 0 and deg Q <= s - 1");
    std::map<int, Rational> out;
    for (long i = 1; i <= Q.degree(); ++i) {
        Rational c = Q.coeff(i);
        if (c == 0) continue;
        if (s == 1) {
            out[1] += c;
            continue;
        }
        auto b = qana_basis_change(static_cast<int>(i), s);
        for (int j = 2; j <= s; ++j) out[j] += c * b[j - 2];
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

// Okounkov numerators: t^{s/2} for even s, t^{(s-1)/2}(1+t) for odd s
inline Polynomial okounkov_poly(int s) {
    if (s < 2) throw std::invalid_argument("okounkov_poly: s must be >= 2");
    std::vector<Rational> c(s / 2 + 2, Rational(0));
    if (s % 2 == 0) c[s / 2] = 1;
    else c[(s - 1) / 2] = c[(s + 1) / 2] = 1;
    return Polynomial(c);
}

// sum_{n_1 > ... > n_l > 0} prod Q_{s_j}(q^{n_j}) / (1 - q^{n_j})^{s_j} in brackets
inline LinComb<int> qana_to_brackets(const std::function<Polynomial(int)>& Q, const Index& s) {
    LinComb<int> acc(Index{});
    for (int x : s) {
        LinComb<int> next;
        for (const auto& [w, c] : acc)
            for (const auto& [j, d] : qana_letter(Q(x), x)) {
                Index v = w;
                v.push_back(j);
                next.add(v, c * d);
            }
        acc = next;
    }
    return acc;
}

inline LinComb<int> okounkov_to_brackets(const Index& s) { return qana_to_brackets(okounkov_poly, s); }

namespace detail {

using MultiPoly = std::map<std::vector<int>, Rational>;

// binom(X - 1, m) as a polynomial in X
inline Polynomial binom_shifted(int m) {
    Polynomial p(std::vector<Rational>{Rational(1)});
    for (int i = 1; i <= m; ++i) p = p * Polynomial(std::vector<Rational>{Rational(-i), Rational(1)});
    return (Rational(1) / Rational(factorial(m))) * p;
}

// p(x_a - x_b) (b < 0: p(x_a)) multiplied into a polynomial in nv variables
inline MultiPoly times_run(const MultiPoly& f, const Polynomial& p, int a, int b) {
    MultiPoly out;
    for (long d = 0; d <= p.degree(); ++d) {
        Rational c = p.coeff(d);
        if (c == 0) continue;
        for (long e = 0; e <= d; ++e) {
            // (x_a - x_b)^d = sum_e C(d,e) x_a^e (-x_b)^{d-e}
            Rational ce = c * binomial(d, e);
            if (b < 0 && e != d) continue;
            if (b >= 0 && (d - e) % 2) ce = -ce;
            for (const auto& [ex, x] : f) {
                std::vector<int> ne = ex;
                ne[a] += static_cast<int>(e);
                if (b >= 0) ne[b] += static_cast<int>(d - e);
                out[ne] += x * ce;
            }
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace detail

// z_q(s) = sum q^{n_1} / prod (1 - q^{n_j})^{s_j} in bi-brackets. Each inner
// factor is 1 + sum_{m <= s} t/(1-t)^m; the 1 frees its summation index, and a
// run of m free indices between fixed values x > y counts binom(x - y - 1, m).
inline LinComb<BiLetter> zq_convert(const Index& s) {
    if (s.empty()) throw std::invalid_argument("zq_convert: empty index");
    for (int x : s)
        if (x < 1) throw std::invalid_argument("zq_convert: entries must be >= 1");
    // t/(1-t)^m = sum_j c Q^E_j/(1-t)^j
    auto tpow = [](int m) { return qana_letter(Polynomial(std::vector<Rational>{0, 1}), m); };
    size_t l = s.size();
    LinComb<BiLetter> out;
    // choice[j] = 0 for a free index, otherwise the Q^E letter
    std::vector<int> letter(l, 0);
    std::function<void(size_t, Rational)> rec = [&](size_t j, Rational c) {
        if (j == l) {
            std::vector<size_t> fixed;
            for (size_t i = 0; i < l; ++i)
                if (letter[i]) fixed.push_back(i);
            size_t p = fixed.size();
            detail::MultiPoly f{{std::vector<int>(p, 0), Rational(1)}};
            for (size_t a = 0; a < p; ++a) {
                size_t next = a + 1 < p ? fixed[a + 1] : l;
                int run = static_cast<int>(next - fixed[a] - 1);
                if (run == 0) continue;
                // runs between fixed values need binom(x - y - 1, m); at the end binom(x - 1, m)
                f = detail::times_run(f, detail::binom_shifted(run), static_cast<int>(a),
                                      a + 1 < p ? static_cast<int>(a + 1) : -1);
            }
            for (const auto& [ex, x] : f) {
                BiIndex w;
                Rational k = c * x;
                for (size_t a = 0; a < p; ++a) {
                    w.push_back({letter[fixed[a]], ex[a]});
                    k *= Rational(factorial(ex[a]));
                }
                out.add(w, k);
            }
            return;
        }
        if (j > 0) {
            letter[j] = 0;
            rec(j + 1, c);
        }
        std::map<int, Rational> opts;
        if (j == 0) opts = tpow(s[0]);
        else
            for (int m = 1; m <= s[j]; ++m)
                for (const auto& [jj, d] : tpow(m)) opts[jj] += d;
        for (const auto& [jj, d] : opts) {
            if (d == 0) continue;
            letter[j] = jj;
            rec(j + 1, c * d);
        }
        letter[j] = 0;
    };
    rec(0, Rational(1));
    return out;
}

}  // namespace qmzv
