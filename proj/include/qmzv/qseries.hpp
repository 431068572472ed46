#pragma once
// Truncated power series in q with exact rational coefficients.

#include "exact.hpp"
#include "numeric.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <ostream>
#include <string>
#include <vector>

namespace qmzv {

class QSeries {
public:
    QSeries() : c_(1) {}
    explicit QSeries(int order) : c_(check(order) + 1) {}
    QSeries(int order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != check(order) + 1) throw std::invalid_argument("coefficient count != order+1");
    }
    static QSeries constant(const Rational& c, int order) {
        QSeries s(order);
        s.c_[0] = c;
        return s;
    }
    static QSeries from_integers(const std::vector<Integer>& z) {
        std::vector<Rational> c(z.begin(), z.end());
        return QSeries(static_cast<int>(z.size()) - 1, std::move(c));
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int n) const { return c_.at(n); }
    Rational& operator[](int n) { return c_.at(n); }
    const std::vector<Rational>& coeffs() const { return c_; }

    QSeries truncate(int order) const {
        if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
        return QSeries(order, std::vector<Rational>(c_.begin(), c_.begin() + order + 1));
    }
    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
    }

    QSeries& operator+=(const QSeries& o) {
        shrink(o.order());
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    QSeries& operator-=(const QSeries& o) {
        shrink(o.order());
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    QSeries& operator*=(const Rational& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }
    // Adds s*o in place.
    void axpy(const Rational& s, const QSeries& o) {
        shrink(o.order());
        if (s == 0) return;
        for (size_t i = 0; i < c_.size(); ++i)
            if (o.c_[i] != 0) c_[i] += s * o.c_[i];
    }

    friend QSeries operator+(QSeries a, const QSeries& b) { a += b; return a; }
    friend QSeries operator-(QSeries a, const QSeries& b) { a -= b; return a; }
    friend QSeries operator*(const Rational& s, QSeries a) { a *= s; return a; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries operator-() const { QSeries r(*this); r *= Rational(-1); return r; }

    // Equality on the common truncation order.
    friend bool operator==(const QSeries& a, const QSeries& b) {
        int n = std::min(a.order(), b.order());
        for (int i = 0; i <= n; ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

private:
    static int check(int order) {
        if (order < 0) throw std::invalid_argument("negative series order");
        return order;
    }
    void shrink(int order) {
        if (order < this->order()) c_.resize(order + 1);
    }
    std::vector<Rational> c_;
};

inline QSeries qs_mul(const QSeries& f, const QSeries& g) {
    int n = std::min(f.order(), g.order());
    std::vector<Rational> c(n + 1);
    Rational t;
    for (int i = 0; i <= n; ++i) {
        if (f[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (g[j] == 0) continue;
            mpq_mul(t.get_mpq_t(), f[i].get_mpq_t(), g[j].get_mpq_t());
            c[i + j] += t;
        }
    }
    return QSeries(n, std::move(c));
}

inline QSeries operator*(const QSeries& a, const QSeries& b) { return qs_mul(a, b); }

inline QSeries qs_d(const QSeries& f) {
    QSeries r(f);
    for (int n = 0; n <= r.order(); ++n) r[n] *= n;
    return r;
}

struct SeriesValue {
    Complex value;
    BigFloat tail_bound;
    // Set when the last stored coefficients are not non-increasing in size,
    // in which case the geometric tail bound is only a heuristic.
    bool tail_caveat = false;
};

inline SeriesValue qs_eval(const QSeries& f, const Complex& q0, int digits = 64) {
    mpfr_prec_t bits = digits_to_bits(digits);
    BigFloat aq = abs(q0);
    if (aq >= BigFloat(1L, bits)) throw std::domain_error("qs_eval needs |q| < 1");
    Complex acc(bits);
    Complex qn(BigFloat(1L, bits), BigFloat(bits));
    for (int n = 0; n <= f.order(); ++n) {
        if (f[n] != 0) acc += qn * BigFloat(f[n], bits);
        qn *= q0;
    }
    int N = f.order();
    BigFloat aN = abs(BigFloat(f[N], bits));
    BigFloat tail = aN * pow(aq, N + 1) / (BigFloat(1L, bits) - aq);
    bool caveat = false;
    for (int n = std::max(1, N - 4); n <= N; ++n)
        if (abs(BigFloat(f[n], bits)) > abs(BigFloat(f[n - 1], bits))) caveat = true;
    return {acc, tail, caveat};
}

// Real-q evaluation in long double, used by the q -> 1 extrapolation.
inline long double qs_eval_real(const QSeries& f, long double q) {
    long double acc = 0, qn = 1;
    for (int n = 0; n <= f.order(); ++n) {
        if (f[n] != 0) acc += qn * static_cast<long double>(f[n].get_d());
        qn *= q;
    }
    return acc;
}

// Delta = q prod (1-q^n)^24 with integer arithmetic.
inline QSeries delta_series(int N) {
    if (N < 1) throw std::invalid_argument("delta_series needs N >= 1");
    std::vector<Integer> p(N, 0);  // prod (1-q^n)^24 to q^{N-1}
    p[0] = 1;
    for (int n = 1; n < N; ++n)
        for (int rep = 0; rep < 24; ++rep)
            for (int i = N - 1; i >= n; --i) p[i] -= p[i - n];
    std::vector<Integer> c(N + 1, 0);
    for (int i = 0; i < N; ++i) c[i + 1] = p[i];
    return QSeries::from_integers(c);
}

inline nlohmann::json to_json(const QSeries& f) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(to_string(c));
    return {{"order", f.order()}, {"coeffs", coeffs}};
}

inline QSeries qseries_from_json(const nlohmann::json& j) {
    int order = j.at("order").get<int>();
    std::vector<Rational> c;
    for (const auto& x : j.at("coeffs")) c.push_back(parse_rational(x.get<std::string>()));
    return QSeries(order, std::move(c));
}

// "q + 3q^2 - (1/6)q^3" style rendering.
inline std::string to_text(const QSeries& f) {
    std::string out;
    for (int n = 0; n <= f.order(); ++n) {
        Rational c = f[n];
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        std::string mono = n == 0 ? "" : (n == 1 ? "q" : "q^" + std::to_string(n));
        std::string coef;
        if (a != 1 || n == 0) coef = a.get_den() == 1 ? a.get_str() : "(" + a.get_str() + ")";
        out += coef + mono;
    }
    return out.empty() ? "0" : out;
}

inline std::ostream& operator<<(std::ostream& os, const QSeries& f) { return os << to_text(f) << " + O(q^" << f.order() + 1 << ")"; }

}  // namespace qmzv
