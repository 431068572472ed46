#pragma once
// Formal iterated integrals I(1; ...; 0) identified with words z_{s1}...z_{sr},
// the Goncharov coproduct on them, deconcatenation, and regularization of
// non-admissible words as polynomials in T.

#include "exact.hpp"
#include "word.hpp"
#include "words.hpp"

#include <json.hpp>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qmzv {

// Finite sum of c * (left (x) right) over basis words.
template <class L = int>
class Tensor {
public:
    using key_type = std::pair<Word<L>, Word<L>>;
    struct KeyLess {
        bool operator()(const key_type& a, const key_type& b) const {
            WordLess lt;
            if (lt(a.first, b.first)) return true;
            if (lt(b.first, a.first)) return false;
            return lt(a.second, b.second);
        }
    };
    using map_type = std::map<key_type, Rational, KeyLess>;

    void add(const Word<L>& l, const Word<L>& r, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = t_.emplace(key_type{l, r}, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }
    void add(const Tensor& o, const Rational& c = 1) {
        for (const auto& [k, x] : o.t_) add(k.first, k.second, c * x);
    }
    // c * (a (x) b) for linear combinations a, b
    void add(const LinComb<L>& a, const LinComb<L>& b, const Rational& c) {
        for (const auto& [u, x] : a)
            for (const auto& [v, y] : b) add(u, v, c * x * y);
    }
    Rational coeff(const Word<L>& l, const Word<L>& r) const {
        auto it = t_.find({l, r});
        return it == t_.end() ? Rational(0) : it->second;
    }
    const map_type& terms() const { return t_; }
    size_t size() const { return t_.size(); }
    auto begin() const { return t_.begin(); }
    auto end() const { return t_.end(); }
    friend bool operator==(const Tensor& a, const Tensor& b) { return a.t_ == b.t_; }

private:
    map_type t_;
};

using IntTensor = Tensor<int>;

inline std::string to_text(const IntTensor& t) {
    auto name = [](const Index& w) { return w.empty() ? std::string("1") : "I(" + format_word(w) + ")"; };
    std::string out;
    for (const auto& [k, x] : t) {
        bool neg = x < 0;
        Rational a = neg ? Rational(-x) : x;
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        if (a != 1) out += a.get_str() + "*";
        out += name(k.first) + " (x) " + name(k.second);
    }
    return out.empty() ? "0" : out;
}

inline nlohmann::json to_json(const IntTensor& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, x] : t)
        arr.push_back({{"left", format_word(k.first)}, {"right", format_word(k.second)}, {"coeff", to_string(x)}});
    return arr;
}

inline IntTensor tensor_from_json(const nlohmann::json& j) {
    IntTensor t;
    for (const auto& e : j)
        t.add(parse_index(e.at("left").get<std::string>()), parse_index(e.at("right").get<std::string>()),
              parse_rational(e.at("coeff").get<std::string>()));
    return t;
}

// I_n(s) = (-1)^n sum_{|k| = |s| + n} prod C(k_j - 1, s_j - 1) I(k)
inline LinComb<int> In_reduce(int n, const Index& s) {
    if (n < 0) throw std::invalid_argument("In_reduce: n must be >= 0");
    for (int x : s)
        if (x < 1) throw std::invalid_argument("In_reduce: entries must be >= 1");
    LinComb<int> out;
    if (s.empty()) {
        if (n == 0) out.add(Index{}, 1);
        return out;
    }
    size_t r = s.size();
    Index k(r);
    const Rational sign = n % 2 ? -1 : 1;
    // distribute n extra units over the r slots
    auto rec = [&](auto&& self, size_t j, int left, Rational c) -> void {
        if (j + 1 == r) {
            k[j] = s[j] + left;
            out.add(k, sign * c * binomial(k[j] - 1, s[j] - 1));
            return;
        }
        for (int e = 0; e <= left; ++e) {
            k[j] = s[j] + e;
            self(self, j + 1, left - e, c * binomial(k[j] - 1, s[j] - 1));
        }
    };
    rec(rec, 0, n, Rational(1));
    return out;
}

namespace detail {

// Normal form of I(a; b; c) for a 0/1 letter string b.
inline LinComb<int> normalize_integral(int a, const std::vector<int>& b, int c) {
    if (b.empty()) return LinComb<int>(Index{});
    if (a == c) return {};
    if (a == 0) {
        std::vector<int> rev(b.rbegin(), b.rend());
        LinComb<int> r = normalize_integral(1, rev, 0);
        if (b.size() % 2) r *= Rational(-1);
        return r;
    }
    Index s;
    int run = 0;
    for (int x : b) {
        if (x == 0) ++run;
        else {
            s.push_back(run + 1);
            run = 0;
        }
    }
    return In_reduce(run, s);
}

}  // namespace detail

inline LinComb<int> intword_from_letters(int a, const std::vector<int>& b, int c) {
    for (int x : b)
        if (x != 0 && x != 1) throw std::invalid_argument("integral letters must be 0 or 1");
    if ((a != 0 && a != 1) || (c != 0 && c != 1)) throw std::invalid_argument("integral end points must be 0 or 1");
    return detail::normalize_integral(a, b, c);
}

// Sum over markings 0 = i_0 < i_1 < ... < i_k < i_{k+1} = N+1 of the letter
// string (1; a_1..a_N; 0).
inline IntTensor goncharov_coproduct(const Index& w) {
    for (int x : w)
        if (x < 1) throw std::invalid_argument("coproduct: entries must be >= 1");
    std::vector<int> a{1};
    for (int x : detail::to_xy(w)) a.push_back(x);
    a.push_back(0);
    const int N = static_cast<int>(a.size()) - 2;
    IntTensor out;
    if (N > 24) throw std::invalid_argument("coproduct: weight too large");
    for (unsigned long mask = 0; mask < (1ul << N); ++mask) {
        std::vector<int> marks{0};
        for (int i = 1; i <= N; ++i)
            if (mask >> (i - 1) & 1ul) marks.push_back(i);
        marks.push_back(N + 1);
        LinComb<int> right(Index{});
        bool zero = false;
        for (size_t p = 0; p + 1 < marks.size() && !zero; ++p) {
            std::vector<int> seg(a.begin() + marks[p] + 1, a.begin() + marks[p + 1]);
            LinComb<int> f = detail::normalize_integral(a[marks[p]], seg, a[marks[p + 1]]);
            if (f.empty()) zero = true;
            else right = shuffle(right, f);
        }
        if (zero || right.empty()) continue;
        std::vector<int> lseg;
        for (size_t p = 1; p + 1 < marks.size(); ++p) lseg.push_back(a[marks[p]]);
        LinComb<int> left = detail::normalize_integral(1, lseg, 0);
        out.add(left, right, 1);
    }
    return out;
}

inline IntTensor goncharov_coproduct(const LinComb<int>& c) {
    IntTensor out;
    for (const auto& [w, x] : c) out.add(goncharov_coproduct(w), x);
    return out;
}

template <class L>
Tensor<L> deconcat_coproduct(const Word<L>& w) {
    Tensor<L> out;
    for (size_t i = 0; i <= w.size(); ++i)
        out.add(Word<L>(w.begin(), w.begin() + i), Word<L>(w.begin() + i, w.end()), 1);
    return out;
}

// (a (x) b)(c (x) d) = (a sh c) (x) (b sh d)
inline IntTensor tensor_shuffle(const IntTensor& x, const IntTensor& y) {
    IntTensor out;
    for (const auto& [k1, c1] : x)
        for (const auto& [k2, c2] : y) out.add(shuffle(k1.first, k2.first), shuffle(k1.second, k2.second), c1 * c2);
    return out;
}

// ---- regularization ----

// sum_i T^i c_i with admissible combinations c_i
using TPoly = std::map<int, LinComb<int>>;

inline bool is_admissible(const Index& w) { return w.empty() || w.front() >= 2; }

inline void tpoly_add(TPoly& p, const TPoly& q, const Rational& c, int shift = 0) {
    for (const auto& [e, comb] : q) {
        auto& slot = p[e + shift];
        slot.add(comb, c);
        if (slot.empty()) p.erase(e + shift);
    }
}

inline LinComb<int> constant_term(const TPoly& p) {
    auto it = p.find(0);
    return it == p.end() ? LinComb<int>{} : it->second;
}

enum class RegKind { shuffle, stuffle };

namespace detail {

inline LinComb<int> reg_product(RegKind kind, const Index& u, const Index& v) {
    return kind == RegKind::shuffle ? shuffle(u, v) : stuffle(u, v);
}

struct RegCache {
    std::mutex m;
    std::map<Index, TPoly, WordLess> memo[2];
};

inline RegCache& reg_cache() {
    static RegCache c;
    return c;
}

// z1 v = (z1 (.) v - other terms) / m, where m counts leading z1's of z1 v
inline TPoly regularize(RegKind kind, const Index& w) {
    if (is_admissible(w)) return TPoly{{0, LinComb<int>(w)}};
    auto& cache = reg_cache();
    {
        std::lock_guard<std::mutex> lk(cache.m);
        auto& memo = cache.memo[static_cast<int>(kind)];
        if (auto it = memo.find(w); it != memo.end()) return it->second;
    }
    Index v(w.begin() + 1, w.end());
    LinComb<int> p = reg_product(kind, Index{1}, v);
    Rational c = p.coeff(w);
    TPoly out;
    tpoly_add(out, regularize(kind, v), 1, 1);
    for (const auto& [u, x] : p)
        if (u != w) tpoly_add(out, regularize(kind, u), -x);
    for (auto& [e, comb] : out) comb *= 1 / c;
    std::lock_guard<std::mutex> lk(cache.m);
    cache.memo[static_cast<int>(kind)].emplace(w, out);
    return out;
}

}  // namespace detail

inline TPoly shuffle_regularize(const Index& w) { return detail::regularize(RegKind::shuffle, w); }
inline TPoly stuffle_regularize(const Index& w) { return detail::regularize(RegKind::stuffle, w); }

inline TPoly regularize(RegKind kind, const LinComb<int>& c) {
    TPoly out;
    for (const auto& [w, x] : c) tpoly_add(out, detail::regularize(kind, w), x);
    return out;
}

inline std::string to_text(const TPoly& p) {
    if (p.empty()) return "0";
    std::string out;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        if (!out.empty()) out += " + ";
        std::string t = it->first == 0 ? "" : (it->first == 1 ? "T" : "T^" + std::to_string(it->first));
        std::string c = to_text(it->second);
        if (t.empty()) out += "(" + c + ")";
        else out += "(" + c + ")*" + t;
    }
    return out;
}

inline nlohmann::json to_json(const TPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, comb] : p) arr.push_back({{"T_power", e}, {"terms", to_json(comb)}});
    return arr;
}

}  // namespace qmzv
