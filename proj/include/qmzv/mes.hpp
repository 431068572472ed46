#pragma once
// Numeric multiple zeta values, multitangent functions, multiple Eisenstein
// series (lattice sums, Fourier expansions, shuffle and stuffle
// regularizations) and the limit map Z_k.

#include "brackets.hpp"
#include "exact.hpp"
#include "iterint.hpp"
#include "numeric.hpp"
#include "qseries.hpp"
#include "words.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace qmzv {

struct NumericValue {
    Complex value;
    BigFloat error;
};

inline Complex at_prec(const Complex& z, mpfr_prec_t bits) {
    Complex r(bits);
    r.re += z.re;
    r.im += z.im;
    return r;
}

inline Complex scaled(const Complex& z, const Rational& c) {
    BigFloat f(c, z.prec());
    return z * f;
}

// ---- multiple zeta values ----

namespace detail {

// sum_{n_1 > ... > n_l > 0} z^{n_1} / (n_1^{s_1} ... n_l^{s_l}), truncated at n_1 <= terms
inline BigFloat polylog_real(const Index& s, const BigFloat& z, long terms) {
    mpfr_prec_t b = z.prec();
    size_t l = s.size();
    if (l == 0) return BigFloat(1L, b);
    std::vector<BigFloat> H(l + 1, BigFloat(b));
    H[l] = BigFloat(1L, b);
    BigFloat total(b), zn(1L, b);
    for (long n = 1; n <= terms; ++n) {
        zn *= z;
        BigFloat nb(n, b);
        total += zn * pow(nb, -s[0]) * H[1];
        for (size_t j = 1; j < l; ++j) H[j] += pow(nb, -s[j]) * H[j + 1];
    }
    return total;
}

struct ZetaCache {
    std::mutex m;
    std::map<std::pair<Index, int>, BigFloat> memo;
};

inline ZetaCache& zeta_cache() {
    static ZetaCache c;
    return c;
}

}  // namespace detail

// Path split at 1/2: zeta(w) = sum_j Li_{dual(a_1..a_j)}(1/2) Li_{a_{j+1}..a_N}(1/2),
// where dual reverses a prefix and swaps x and y.
inline BigFloat mzv_numeric(const Index& s, int digits = 40) {
    for (int x : s)
        if (x < 1) throw std::invalid_argument("mzv_numeric: entries must be >= 1");
    if (!s.empty() && s.front() < 2) throw std::invalid_argument("mzv_numeric: index is not admissible (s1 = 1)");
    auto& cache = detail::zeta_cache();
    {
        std::lock_guard<std::mutex> lk(cache.m);
        if (auto it = cache.memo.find({s, digits}); it != cache.memo.end()) return it->second;
    }
    mpfr_prec_t b = digits_to_bits(digits) + 32;
    std::vector<int> xy = detail::to_xy(s);
    size_t n = xy.size();
    long terms = static_cast<long>(b) + 20 + 10 * static_cast<long>(n);
    BigFloat half(0.5, b), acc(b);
    if (s.empty()) acc = BigFloat(1L, b);
    for (size_t j = 0; j <= n && !s.empty(); ++j) {
        std::vector<int> dual;
        for (size_t i = j; i-- > 0;) dual.push_back(1 - xy[i]);
        std::vector<int> suffix(xy.begin() + j, xy.end());
        acc += detail::polylog_real(detail::from_xy(dual), half, terms) *
               detail::polylog_real(detail::from_xy(suffix), half, terms);
    }
    std::lock_guard<std::mutex> lk(cache.m);
    cache.memo.emplace(std::make_pair(s, digits), acc);
    return acc;
}

inline BigFloat mzv_numeric(const LinComb<int>& c, int digits = 40) {
    mpfr_prec_t b = digits_to_bits(digits) + 32;
    BigFloat acc(b);
    for (const auto& [w, x] : c) acc += mzv_numeric(w, digits) * BigFloat(x, b);
    return acc;
}

// Regularized value at T = 0.
inline BigFloat mzv_regularized(const Index& s, RegKind kind, int digits = 40) {
    return mzv_numeric(constant_term(detail::regularize(kind, s)), digits);
}

// ---- monotangent and multitangent functions ----

namespace detail {

// Psi_k(x) = pi^k Q_k(cot(pi x)), Q_1 = c, Q_{k+1} = (1 + c^2) Q_k'(c) / k
inline const std::vector<Rational>& cot_poly(int k) {
    static std::mutex m;
    static std::vector<std::vector<Rational>> table{{}, {Rational(0), Rational(1)}};
    std::lock_guard<std::mutex> lk(m);
    while (static_cast<int>(table.size()) <= k) {
        const auto& Q = table.back();
        int kk = static_cast<int>(table.size()) - 1;
        std::vector<Rational> d(Q.size() > 1 ? Q.size() - 1 : 1, Rational(0));
        for (size_t i = 1; i < Q.size(); ++i) d[i - 1] = Q[i] * static_cast<long>(i);
        std::vector<Rational> next(d.size() + 2, Rational(0));
        for (size_t i = 0; i < d.size(); ++i) {
            next[i] += d[i] / kk;
            next[i + 2] += d[i] / kk;
        }
        while (next.size() > 1 && next.back() == 0) next.pop_back();
        table.push_back(std::move(next));
    }
    return table[k];
}

inline Complex cot_of_pi(const Complex& x) {
    mpfr_prec_t b = x.prec();
    Complex e = q_of_tau(x);
    Complex one(BigFloat(1L, b), BigFloat(b));
    Complex i(BigFloat(b), BigFloat(1L, b));
    return i * (e + one) / (e - one);
}

}  // namespace detail

inline Complex monotangent(int k, const Complex& x) {
    if (k < 1) throw std::invalid_argument("monotangent: order must be >= 1");
    if (x.im.sign() <= 0) throw std::domain_error("monotangent: argument must lie in the upper half plane");
    mpfr_prec_t b = x.prec();
    Complex c = detail::cot_of_pi(x);
    const auto& Q = detail::cot_poly(k);
    Complex acc(b);
    for (size_t i = Q.size(); i-- > 0;) {
        acc *= c;
        acc += Complex(BigFloat(Q[i], b), BigFloat(b));
    }
    return acc * pow(BigFloat::pi(b), k);
}

namespace detail {

// sum over C >= n_1 > ... > n_l >= -C of prod (x + n_j)^{-s_j}
inline Complex multitangent_window(const Index& s, const Complex& x, long C) {
    mpfr_prec_t b = x.prec();
    size_t l = s.size();
    std::vector<Complex> H(l + 1, Complex(b));
    H[l] = Complex(BigFloat(1L, b), BigFloat(b));
    Complex one(BigFloat(1L, b), BigFloat(b));
    int smax = *std::max_element(s.begin(), s.end());
    std::vector<Complex> pw(smax + 1, Complex(b));
    for (long n = -C; n <= C; ++n) {
        Complex z = x;
        z.re += BigFloat(n, b);
        Complex p = one / z;
        pw[1] = p;
        for (int e = 2; e <= smax; ++e) pw[e] = pw[e - 1] * p;
        for (size_t j = 0; j < l; ++j) H[j] += pw[s[j]] * H[j + 1];
    }
    return H[0];
}

// Richardson extrapolation over cutoffs C0 * 2^j for an error expansion in
// integer powers of 1/C.
template <class F>
NumericValue richardson_in_cutoff(F&& window, long C0, int max_levels, const BigFloat& tol) {
    std::vector<std::vector<Complex>> T;
    BigFloat err(tol.prec());
    for (int j = 0; j < max_levels; ++j) {
        std::vector<Complex> row{window(C0 << j)};
        for (int m = 1; m <= j; ++m) {
            long f = 1L << m;
            Complex v = (row[m - 1] * f - T[j - 1][m - 1]) / (f - 1);
            row.push_back(v);
        }
        T.push_back(std::move(row));
        if (j >= 2) {
            err = abs(T[j][j] - T[j - 1][j - 1]);
            if (j >= 3 && err < tol) break;
        }
    }
    return {T.back().back(), err};
}

}  // namespace detail

// Direct double-sided sum; length one uses the cotangent closed form.
inline NumericValue multitangent(const Index& s, const Complex& x, int digits = 30, double tol = 1e-14) {
    if (s.empty()) throw std::invalid_argument("multitangent: empty index");
    if (x.im.sign() <= 0) throw std::domain_error("multitangent: argument must lie in the upper half plane");
    mpfr_prec_t b = digits_to_bits(digits);
    Complex xb = at_prec(x, b);
    if (s.size() == 1) {
        BigFloat err(b);
        return {monotangent(s[0], xb), err};
    }
    for (int v : s)
        if (v < 2) throw std::invalid_argument("multitangent: entries must be >= 2 for length >= 2");
    double ax = std::hypot(x.re.to_double(), x.im.to_double());
    long C0 = 16 + 4 * static_cast<long>(std::ceil(ax));
    return detail::richardson_in_cutoff([&](long C) { return detail::multitangent_window(s, xb, C); }, C0, 15,
                                        BigFloat(tol, b));
}

// Psi_s = sum_{h >= 2} c_h Psi_h. Partial fractions in x at the pole n_j: the
// indices above j resum to zeta(s_1+i_1, ..., s_{j-1}+i_{j-1}) with sign (-1)^i,
// those below to zeta(s_l+i_l, ..., s_{j+1}+i_{j+1}) with sign (-1)^s.
inline std::map<int, LinComb<int>> multitangent_reduce(const Index& s) {
    if (s.size() < 2) throw std::invalid_argument("multitangent_reduce: length must be >= 2");
    for (int v : s)
        if (v < 2) throw std::invalid_argument("multitangent_reduce: entries must be >= 2");
    size_t l = s.size();
    std::map<int, LinComb<int>> out;
    std::vector<int> ex(l, 0);
    for (size_t j = 0; j < l; ++j)
        for (int h = 1; h <= s[j]; ++h) {
            auto rec = [&](auto&& self, size_t p, int left) -> void {
                if (p == j) return self(self, p + 1, left);
                if (p == l) {
                    if (left) return;
                    Rational c = 1;
                    Index above, below;
                    for (size_t i = 0; i < l; ++i) {
                        if (i == j) continue;
                        c *= binomial(s[i] + ex[i] - 1, ex[i]);
                        if (i < j) {
                            if (ex[i] % 2) c = -c;
                            above.push_back(s[i] + ex[i]);
                        } else {
                            if (s[i] % 2) c = -c;
                            below.insert(below.begin(), s[i] + ex[i]);
                        }
                    }
                    out[h].add(stuffle(above, below), c);
                    return;
                }
                for (int e = 0; e <= left; ++e) {
                    ex[p] = e;
                    self(self, p + 1, left - e);
                }
            };
            rec(rec, 0, s[j] - h);
        }
    // the Psi_1 part vanishes, from length 3 on only modulo relations among MZVs
    if (auto it = out.find(1); it != out.end()) {
        if (abs(mzv_numeric(it->second, 30)).to_double() > 1e-20)
            throw std::logic_error("multitangent reduction: Psi_1 coefficient does not vanish");
        out.erase(it);
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.empty(); });
    return out;
}

inline std::map<int, LinComb<int>> multitangent_reduce_len2(const Index& s) {
    if (s.size() != 2) throw std::invalid_argument("multitangent_reduce_len2: length must be 2");
    return multitangent_reduce(s);
}

inline Complex realize_reduction(const std::map<int, LinComb<int>>& red, const Complex& x, int digits = 30) {
    mpfr_prec_t b = digits_to_bits(digits);
    Complex acc(b);
    for (const auto& [h, comb] : red) acc += monotangent(h, x) * mzv_numeric(comb, digits);
    return acc;
}

// ---- lattice sums ----

struct LatticeResult {
    Complex value;
    BigFloat tail;
    int rows = 0;
    long cutoff = 0;
};

namespace detail {

// Ordered sum over positive lattice points l tau + m with 0 <= l <= L, |m| <= C,
// ordered lexicographically in (l, m).
inline Complex lattice_window(const Index& s, const Complex& tau, int L, long C) {
    mpfr_prec_t b = tau.prec();
    size_t len = s.size();
    std::vector<Complex> H(len + 1, Complex(b));
    H[len] = Complex(BigFloat(1L, b), BigFloat(b));
    Complex one(BigFloat(1L, b), BigFloat(b));
    int smax = *std::max_element(s.begin(), s.end());
    std::vector<Complex> pw(smax + 1, Complex(b));
    for (int l = 0; l <= L; ++l) {
        Complex base = tau * static_cast<long>(l);
        for (long m = (l == 0 ? 1 : -C); m <= C; ++m) {
            Complex z = base;
            z.re += BigFloat(m, b);
            Complex p = one / z;
            pw[1] = p;
            for (int e = 2; e <= smax; ++e) pw[e] = pw[e - 1] * p;
            for (size_t j = 0; j < len; ++j) H[j] += pw[s[j]] * H[j + 1];
        }
    }
    return H[0];
}

}  // namespace detail

inline LatticeResult mes_lattice(const Index& s, const Complex& tau, long cutoff = 64, int digits = 30,
                                 int levels = 8) {
    if (s.empty()) throw std::invalid_argument("mes_lattice: empty index");
    if (s[0] < 3) throw std::invalid_argument("mes_lattice: s1 >= 3 is required for absolute convergence");
    for (int v : s)
        if (v < 2) throw std::invalid_argument("mes_lattice: entries must be >= 2");
    if (tau.im.sign() <= 0) throw std::domain_error("mes_lattice: tau must lie in the upper half plane");
    mpfr_prec_t b = digits_to_bits(digits);
    Complex t = at_prec(tau, b);
    double y = tau.im.to_double();
    // rows beyond L contribute O(|q|^L)
    int L = static_cast<int>(std::ceil(std::min(digits, 30) * std::log(10.0) / (2 * M_PI * y))) + 1;
    double at = std::hypot(tau.re.to_double(), y);
    long C0 = std::max(cutoff, static_cast<long>(std::ceil(8 * L * at)));
    NumericValue r = detail::richardson_in_cutoff([&](long C) { return detail::lattice_window(s, t, L, C); }, C0,
                                                  levels, BigFloat(std::pow(10.0, -digits), b));
    return {r.value, r.error, L, C0 << (levels - 1)};
}

// ---- symbolic expansions ----

// sum c * zeta(z) * (-2 pi i)^p * mb(b)
class MESExpansion {
public:
    using key_type = std::tuple<Index, BiIndex, int>;

    void add(const Index& zeta, const BiIndex& bracket, int twopii, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = t_.emplace(key_type{zeta, bracket, twopii}, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }
    void add(const MESExpansion& o, const Rational& c = 1) {
        for (const auto& [k, x] : o.t_) add(std::get<0>(k), std::get<1>(k), std::get<2>(k), c * x);
    }
    const std::map<key_type, Rational>& terms() const { return t_; }
    auto begin() const { return t_.begin(); }
    auto end() const { return t_.end(); }
    size_t size() const { return t_.size(); }
    bool empty() const { return t_.empty(); }
    friend bool operator==(const MESExpansion& a, const MESExpansion& b) { return a.t_ == b.t_; }

    // total weight of each term: zeta weight + (-2 pi i) power
    std::vector<int> weights() const {
        std::vector<int> w;
        for (const auto& [k, x] : t_) w.push_back(weight(std::get<0>(k)) + std::get<2>(k));
        return w;
    }

    // Coefficient of the bracket part, as a combination of zeta symbols.
    std::map<std::pair<BiIndex, int>, LinComb<int>> by_bracket() const {
        std::map<std::pair<BiIndex, int>, LinComb<int>> out;
        for (const auto& [k, x] : t_) out[{std::get<1>(k), std::get<2>(k)}].add(std::get<0>(k), x);
        return out;
    }

private:
    std::map<key_type, Rational> t_;
};

inline std::string to_text(const MESExpansion& e) {
    std::string out;
    for (const auto& [k, x] : e) {
        const auto& [z, br, p] = k;
        bool neg = x < 0;
        Rational a = neg ? Rational(-x) : x;
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        std::vector<std::string> f;
        if (a != 1) f.push_back(a.get_str());
        if (!z.empty()) f.push_back("zeta(" + format_word(z) + ")");
        if (p != 0) f.push_back("(-2pi i)^" + std::to_string(p));
        if (!br.empty()) f.push_back(is_plain(br) ? pretty_word(to_index(br)) : pretty_word(br));
        if (f.empty()) f.push_back("1");
        for (size_t i = 0; i < f.size(); ++i) out += (i ? "*" : "") + f[i];
    }
    return out.empty() ? "0" : out;
}

inline nlohmann::json to_json(const MESExpansion& e) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, x] : e) {
        const auto& [z, br, p] = k;
        nlohmann::json t;
        t["zeta"] = z.empty() ? nlohmann::json(nullptr) : nlohmann::json(format_word(z));
        t["bracket"] = br.empty() ? nlohmann::json(nullptr) : nlohmann::json(format_word(br));
        t["twopii_pow"] = p;
        t["coeff"] = to_string(x);
        arr.push_back(t);
    }
    return arr;
}

inline MESExpansion mes_expansion_from_json(const nlohmann::json& j) {
    MESExpansion e;
    for (const auto& t : j) {
        Index z = t.at("zeta").is_null() ? Index{} : parse_index(t.at("zeta").get<std::string>());
        BiIndex b = t.at("bracket").is_null() ? BiIndex{} : parse_biindex(t.at("bracket").get<std::string>());
        e.add(z, b, t.at("twopii_pow").get<int>(), parse_rational(t.at("coeff").get<std::string>()));
    }
    return e;
}

// Numeric value at tau; q-series are truncated where |q|^N is below 10^-digits.
inline Complex realize(const MESExpansion& e, const Complex& tau, int digits = 30) {
    if (tau.im.sign() <= 0) throw std::domain_error("realize: tau must lie in the upper half plane");
    mpfr_prec_t b = digits_to_bits(digits);
    Complex t = at_prec(tau, b);
    Complex q = q_of_tau(t);
    int maxw = 0;
    for (const auto& [k, x] : e) maxw = std::max(maxw, static_cast<int>(weight(std::get<1>(k))));
    double y = tau.im.to_double();
    int N = static_cast<int>(std::ceil((digits + 10 + 2 * maxw) * std::log(10.0) / (2 * M_PI * y))) + 10;
    std::map<BiIndex, Complex> bval;
    Complex acc(b);
    for (const auto& [k, x] : e) {
        const auto& [z, br, p] = k;
        Complex term = minus_two_pi_i_pow(p, b);
        if (!br.empty()) {
            auto it = bval.find(br);
            if (it == bval.end()) it = bval.emplace(br, qs_eval(bibracket_series(br, N), q, digits).value).first;
            term *= it->second;
        }
        if (!z.empty()) term *= mzv_numeric(z, digits);
        acc += scaled(term, x);
    }
    return acc;
}

// Rows of the lattice: G_s = sum_{uv = s} zeta(v) sum over u = u_1...u_k and
// m_1 > ... > m_k > 0 of prod Psi_{u_i}(m_i tau); each block is reduced to
// monotangents, and sum prod Psi_{h_i}(m_i tau) = g_{h_1..h_k}.
inline MESExpansion mes_fourier(const Index& s) {
    size_t l = s.size();
    if (l == 0 || l > 3) throw std::invalid_argument("mes_fourier: length must be 1, 2 or 3");
    for (int v : s)
        if (v < 2) throw std::invalid_argument("mes_fourier: entries must be >= 2");
    MESExpansion e;
    for (size_t i = 0; i <= l; ++i) {
        LinComb<int> zv(Index(s.begin() + i, s.end()));
        // walk the splittings of the prefix, carrying (bracket word, zeta combination)
        auto rec = [&](auto&& self, size_t p, const Index& br, const LinComb<int>& z) -> void {
            if (p == i) {
                for (const auto& [w, c] : z) e.add(w, to_bi(br), weight(br), c);
                return;
            }
            for (size_t q = p + 1; q <= i; ++q) {
                Index blk(s.begin() + p, s.begin() + q);
                std::map<int, LinComb<int>> red;
                if (blk.size() == 1) red[blk[0]] = LinComb<int>(Index{});
                else red = multitangent_reduce(blk);
                for (const auto& [h, c] : red) {
                    Index nb = br;
                    nb.push_back(h);
                    self(self, q, nb, stuffle(z, c));
                }
            }
        };
        rec(rec, 0, Index{}, zv);
    }
    return e;
}

// m((g^sh (x) Z^sh) Delta(z_s)), left legs through shuffle brackets.
inline MESExpansion g_shuffle(const Index& s) {
    for (int v : s)
        if (v < 1) throw std::invalid_argument("g_shuffle: entries must be >= 1");
    if (s.size() > 4) throw std::invalid_argument("g_shuffle: length must be <= 4 (shuffle bracket bound)");
    MESExpansion e;
    for (const auto& [k, c] : goncharov_coproduct(s)) {
        const auto& [u, v] = k;
        LinComb<BiLetter> left = shuffle_bracket(u);
        LinComb<int> right = constant_term(shuffle_regularize(v));
        int p = weight(u);
        for (const auto& [bw, x] : left)
            for (const auto& [zw, y] : right) e.add(zw, bw, p, c * x * y);
    }
    return e;
}

inline MESExpansion g_shuffle(const LinComb<int>& c) {
    MESExpansion e;
    for (const auto& [w, x] : c) e.add(g_shuffle(w), x);
    return e;
}

// ---- stuffle regularized series at finite M ----

namespace detail {

struct FTable {
    std::vector<Complex> F;  // F[i] = g^{*,M}(s_1..s_i)
    BigFloat error;
    int truncated_at = 0;
};

// F_u(M) = sum over splittings u = u_1...u_k and M > m_1 > ... > m_k > 0 of
// prod Psi_{u_i}(m_i tau), for every prefix u of s.
inline FTable construction_prefixes(const Index& s, int M, const Complex& tau, int digits, double tol) {
    if (s.empty()) throw std::invalid_argument("g_star_M: empty index");
    for (int v : s)
        if (v < 2) throw std::invalid_argument("g_star_M: entries must be >= 2");
    if (M < 1) throw std::invalid_argument("g_star_M: M must be >= 1");
    if (tau.im.sign() <= 0) throw std::domain_error("g_star_M: tau must lie in the upper half plane");
    mpfr_prec_t b = digits_to_bits(digits);
    Complex t = at_prec(tau, b);
    size_t l = s.size();
    FTable out{std::vector<Complex>(l + 1, Complex(b)), BigFloat(b), 0};
    std::map<std::pair<size_t, size_t>, std::vector<Complex>> psi;
    const double negligible = tol * 1e-6;
    for (size_t a = 0; a < l; ++a)
        for (size_t e = a; e < l; ++e) {
            Index blk(s.begin() + a, s.begin() + e + 1);
            std::vector<Complex> vals(M, Complex(b));
            int small = 0;
            for (int m = 1; m < M; ++m) {
                // blocks decay like |q|^m; stop once two consecutive values are negligible
                if (small >= 2 && blk.size() > 1) {
                    if (!out.truncated_at || m < out.truncated_at) out.truncated_at = m;
                    break;
                }
                NumericValue v = multitangent(blk, t * static_cast<long>(m), digits, tol * 1e-3);
                out.error += v.error;
                vals[m] = v.value;
                small = abs(v.value).to_double() < negligible ? small + 1 : 0;
            }
            psi[{a, e}] = std::move(vals);
        }
    out.F[0] = Complex(BigFloat(1L, b), BigFloat(b));
    for (size_t i = 1; i <= l; ++i) {
        std::vector<Complex> A(i + 1, Complex(b));
        A[i] = Complex(BigFloat(1L, b), BigFloat(b));
        for (int m = 1; m < M; ++m) {
            std::vector<Complex> old = A;
            for (size_t a = 0; a < i; ++a)
                for (size_t e = a; e < i; ++e) A[a] += psi[{a, e}][m] * old[e + 1];
        }
        out.F[i] = A[0];
    }
    return out;
}

}  // namespace detail

struct GStarResult {
    Complex value;
    BigFloat error;
    int truncated_at = 0;  // first m from which multitangent blocks were treated as zero, 0 if never
};

inline GStarResult construction_F(const Index& s, int M, const Complex& tau, int digits = 30, double tol = 1e-12) {
    detail::FTable t = detail::construction_prefixes(s, M, tau, digits, tol);
    return {t.F.back(), t.error, t.truncated_at};
}

// G^{*,M} = sum_{uv = w} F_u(M) zeta(v)
inline GStarResult g_star_M(const Index& s, int M, const Complex& tau, int digits = 30, double tol = 1e-12) {
    detail::FTable t = detail::construction_prefixes(s, M, tau, digits, tol);
    Complex total(digits_to_bits(digits));
    for (size_t i = 0; i <= s.size(); ++i) total += t.F[i] * mzv_numeric(Index(s.begin() + i, s.end()), digits);
    return {total, t.error, t.truncated_at};
}

// ---- the limit map Z_k ----

struct ZkResult {
    double value = 0;
    double error = 0;
    bool divergent = false;
    std::vector<long double> samples;  // (1-q)^k f(q) at q = 1 - 2^-j
    int j_min = 0, j_max = 0;
    int log_depth = 0;
};

namespace detail {

// Constant term of the interpolant through samples[first..first+n) in the basis
// 1, t^a log^b t (a >= 1, 0 <= b <= B), t = h / h_first.
inline long double fit_constant(const std::vector<long double>& v, size_t first, size_t n, int B) {
    std::vector<std::vector<long double>> A(n, std::vector<long double>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        long double t = std::ldexp(1.0L, -static_cast<int>(i)), lt = std::log(t);
        A[i][0] = 1;
        for (size_t c = 1; c < n; ++c) {
            int a = static_cast<int>((c - 1) / (B + 1)) + 1, b2 = static_cast<int>((c - 1) % (B + 1));
            A[i][c] = std::pow(t, static_cast<long double>(a)) * std::pow(lt, static_cast<long double>(b2));
        }
        A[i][n] = v[first + i];
    }
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        for (size_t i = c + 1; i < n; ++i)
            if (std::fabs(A[i][c]) > std::fabs(A[piv][c])) piv = i;
        std::swap(A[c], A[piv]);
        for (size_t i = 0; i < n; ++i) {
            if (i == c) continue;
            long double f = A[i][c] / A[c][c];
            for (size_t m = c; m <= n; ++m) A[i][m] -= f * A[c][m];
        }
    }
    return A[0][n] / A[0][0];
}

}  // namespace detail

// f evaluated at q = 1 - h for h = 2^-j, j_min..j_max, extrapolated to h = 0
// in powers h^a log(h)^b with b <= log_depth.
inline ZkResult zk_limit(const std::function<long double(long double h)>& f, int k, int j_min = 3, int j_max = 10,
                         int log_depth = -1) {
    if (k < 1) throw std::invalid_argument("zk_limit: k must be >= 1");
    if (j_max - j_min < 3) throw std::invalid_argument("zk_limit: extrapolation grid needs at least four points");
    ZkResult r;
    r.j_min = j_min;
    r.j_max = j_max;
    r.log_depth = log_depth;
    for (int j = j_min; j <= j_max; ++j) {
        long double h = std::ldexp(1.0L, -j);
        r.samples.push_back(std::pow(h, static_cast<long double>(k)) * f(h));
    }
    size_t n = r.samples.size();
    // unbounded growth: successive differences stop shrinking
    int growing = 0;
    for (size_t i = n - 3; i < n; ++i) {
        long double d1 = std::fabs(r.samples[i] - r.samples[i - 1]);
        long double d0 = std::fabs(r.samples[i - 1] - r.samples[i - 2]);
        if (d0 > 0 && d1 / d0 > 0.8L && d1 > 1e-12L) ++growing;
    }
    if (growing == 3) {
        r.divergent = true;
        r.value = r.error = std::numeric_limits<double>::infinity();
        return r;
    }
    // largest basis that fits, with one spare sample for the error estimate;
    // a negative depth tries 0..3 and keeps the most self-consistent fit
    r.error = std::numeric_limits<double>::infinity();
    int lo = log_depth < 0 ? 0 : log_depth, hi = log_depth < 0 ? 3 : log_depth;
    for (int B = lo; B <= hi; ++B) {
        size_t m = n - 1;
        m -= (m - 1) % (B + 1);
        if (m < 2) continue;
        long double z1 = detail::fit_constant(r.samples, n - m, m, B);
        long double z0 = detail::fit_constant(r.samples, n - m - 1, m, B);
        double err = static_cast<double>(std::fabs(z1 - z0));
        if (err < r.error) {
            r.value = static_cast<double>(z1);
            r.error = err;
            r.log_depth = B;
        }
    }
    return r;
}

namespace detail {

// mb(s; r) at real q = 1 - h by nested sums of u^r/r! * Li~_s(q^u)
inline long double bibracket_real(const BiIndex& w, long double h) {
    if (w.empty()) return 1.0L;
    long double lq = std::log1p(-h);
    size_t l = w.size();
    int wt = static_cast<int>(weight(w));
    long U = static_cast<long>(std::ceil((50.0L + 2.0L * wt * std::log(1.0L / h)) / -lq)) + 10;
    std::vector<std::vector<long double>> P(l);
    std::vector<long double> fact_s(l), fact_r(l);
    for (size_t j = 0; j < l; ++j) {
        Polynomial e = eulerian_poly(w[j].s - 1);
        for (long i = 0; i <= e.degree(); ++i) P[j].push_back(e.coeff(i).get_d());
        fact_s[j] = std::tgamma(static_cast<long double>(w[j].s));
        fact_r[j] = std::tgamma(static_cast<long double>(w[j].r + 1));
    }
    std::vector<long double> H(l + 1, 0.0L);
    H[l] = 1.0L;
    long double total = 0;
    for (long u = 1; u <= U; ++u) {
        long double x = u * lq;
        long double t = std::exp(x), omt = -std::expm1(x);
        std::vector<long double> term(l);
        for (size_t j = 0; j < l; ++j) {
            long double p = 0;
            for (size_t i = P[j].size(); i-- > 0;) p = p * t + P[j][i];
            term[j] = std::pow(static_cast<long double>(u), static_cast<long double>(w[j].r)) / fact_r[j] * t * p /
                      (fact_s[j] * std::pow(omt, static_cast<long double>(w[j].s)));
        }
        total += term[0] * H[1];
        for (size_t j = 1; j < l; ++j) H[j] += term[j] * H[j + 1];
    }
    return total;
}

}  // namespace detail

inline ZkResult zk_limit(const LinComb<BiLetter>& f, int k, int j_max = 10) {
    return zk_limit(
        [&](long double h) {
            long double acc = 0;
            for (const auto& [w, c] : f) acc += static_cast<long double>(c.get_d()) * detail::bibracket_real(w, h);
            return acc;
        },
        k, 3, j_max);
}

inline ZkResult zk_limit(const LinComb<int>& f, int k, int j_max = 10) { return zk_limit(to_bi(f), k, j_max); }

// Truncated series: the grid is limited to 2^J (k + 40) <= order.
inline ZkResult zk_limit(const QSeries& f, int k, int log_depth = -1) {
    int J = 0;
    while ((1L << (J + 1)) * (k + 40) <= f.order()) ++J;
    if (J < 6) throw std::invalid_argument("zk_limit: series order too small for the extrapolation grid");
    std::vector<long double> a(f.order() + 1);
    for (int n = 0; n <= f.order(); ++n) a[n] = static_cast<long double>(f[n].get_d());
    return zk_limit(
        [&](long double h) {
            long double q = 1 - h, acc = 0;
            for (int n = f.order(); n >= 0; --n) acc = acc * q + a[n];
            return acc;
        },
        k, 3, J, log_depth);
}

}  // namespace qmzv
