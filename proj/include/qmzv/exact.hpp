#pragma once
// Exact rationals and the coefficient tables used everywhere else:
// Bernoulli numbers, Eulerian polynomials, lambda coefficients, binomials.

#include <gmpxx.h>

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmzv {

// mpq_class keeps results of arithmetic canonical; values built from raw
// numerator/denominator pairs go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '+') s += c;
        else if (c == '+' && !s.empty()) throw std::invalid_argument("bad rational: " + text);
    if (s.empty()) throw std::invalid_argument("empty rational");
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + text);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

inline std::string to_string(Rational r) {
    r.canonicalize();
    return r.get_str();
}

inline Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Integer binomial_z(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial with negative n");
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Rational binomial(long n, long k) { return Rational(binomial_z(n, k)); }

// Dense polynomial with rational coefficients, index = degree.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(long n) const { return n >= 0 && n < static_cast<long>(c_.size()) ? c_[n] : Rational(0); }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.c_.empty() || b.c_.empty()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Rational& s, const Polynomial& a) {
        std::vector<Rational> c(a.c_);
        for (auto& x : c) x *= s;
        return Polynomial(std::move(c));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

namespace detail {

struct BernoulliTable {
    std::mutex mu;
    std::vector<Rational> b{Rational(1)};
};

inline BernoulliTable& bernoulli_table() {
    static BernoulliTable t;
    return t;
}

struct EulerianTable {
    std::mutex mu;
    std::vector<Polynomial> p;
};

inline EulerianTable& eulerian_table() {
    static EulerianTable t;
    return t;
}

}  // namespace detail

// B_k from X/(e^X - 1), so B_1 = -1/2.
inline Rational bernoulli(long k) {
    if (k < 0) throw std::invalid_argument("bernoulli index must be >= 0");
    auto& t = detail::bernoulli_table();
    std::lock_guard<std::mutex> lock(t.mu);
    while (static_cast<long>(t.b.size()) <= k) {
        long m = static_cast<long>(t.b.size());
        Rational s = 0;
        for (long j = 0; j < m; ++j) s += binomial(m + 1, j) * t.b[j];
        t.b.push_back(-s / (m + 1));
    }
    return t.b[k];
}

// P_s(X) = sum_{n<s} A_{s,n} X^n with t P_{s-1}(t)/(1-t)^s = sum_d d^{s-1} t^d.
inline Polynomial eulerian_poly(long s) {
    if (s < 0) throw std::invalid_argument("eulerian_poly index must be >= 0");
    auto& t = detail::eulerian_table();
    std::lock_guard<std::mutex> lock(t.mu);
    while (static_cast<long>(t.p.size()) <= s) {
        long m = static_cast<long>(t.p.size());
        if (m == 0) {
            t.p.emplace_back(std::vector<Rational>{Rational(1)});
            continue;
        }
        std::vector<Rational> c(m);
        for (long n = 0; n < m; ++n) {
            Integer a = 0;
            for (long i = 0; i <= n; ++i) {
                Integer term;
                mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(n + 1 - i), static_cast<unsigned long>(m));
                term *= binomial_z(m + 1, i);
                if (i % 2) a -= term;
                else a += term;
            }
            c[n] = Rational(a);
        }
        t.p.emplace_back(std::move(c));
    }
    return t.p[s];
}

// lambda^j_{a,b} of the bracket product.
inline Rational lambda_coeff(long a, long b, long j) {
    if (a < 1 || b < 1) throw std::invalid_argument("lambda_coeff needs a, b >= 1");
    if (j < 1 || j > a) throw std::invalid_argument("lambda_coeff needs 1 <= j <= a");
    long m = a + b - j;
    Rational r = binomial(m - 1, a - j) * bernoulli(m) / Rational(factorial(m));
    return (b - 1) % 2 ? Rational(-r) : r;
}

}  // namespace qmzv
