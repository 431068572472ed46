#pragma once
// Arbitrary precision real and complex numbers on top of MPFR.
// Every value carries its own precision; there is no global default.

#include <mpfr.h>
#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qmzv {

inline mpfr_prec_t digits_to_bits(int digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits = 64) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
    BigFloat(double d, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_d(v_, d, MPFR_RNDN); }
    BigFloat(long n, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_si(v_, n, MPFR_RNDN); }
    BigFloat(const mpq_class& q, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
    BigFloat(const mpz_class& z, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_swap(v_, o.v_); }
    ~BigFloat() { mpfr_clear(v_); }

    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            if (mpfr_get_prec(v_) < mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }

    static BigFloat parse(const std::string& s, mpfr_prec_t bits) {
        BigFloat r(bits);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) throw std::invalid_argument("bad number: " + s);
        return r;
    }
    static BigFloat pi(mpfr_prec_t bits) { BigFloat r(bits); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    std::string str(int digits = 20) const {
        char* buf = nullptr;
        std::string fmt = "%." + std::to_string(digits) + "Rg";
        mpfr_asprintf(&buf, fmt.c_str(), v_);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }

#define QMZV_BF_OP(op, fn)                                                      \
    BigFloat& operator op##=(const BigFloat& o) {                               \
        if (prec() < o.prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);       \
        fn(v_, v_, o.v_, MPFR_RNDN);                                            \
        return *this;                                                           \
    }                                                                           \
    friend BigFloat operator op(BigFloat a, const BigFloat& b) { a op##= b; return a; }
    QMZV_BF_OP(+, mpfr_add)
    QMZV_BF_OP(-, mpfr_sub)
    QMZV_BF_OP(*, mpfr_mul)
    QMZV_BF_OP(/, mpfr_div)
#undef QMZV_BF_OP

    BigFloat& operator*=(long n) { mpfr_mul_si(v_, v_, n, MPFR_RNDN); return *this; }
    BigFloat& operator/=(long n) { mpfr_div_si(v_, v_, n, MPFR_RNDN); return *this; }
    friend BigFloat operator*(BigFloat a, long n) { a *= n; return a; }
    friend BigFloat operator/(BigFloat a, long n) { a /= n; return a; }
    BigFloat operator-() const { BigFloat r(*this); mpfr_neg(r.v_, r.v_, MPFR_RNDN); return r; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    friend BigFloat abs(const BigFloat& a) { BigFloat r(a); mpfr_abs(r.v_, r.v_, MPFR_RNDN); return r; }
    friend BigFloat sqrt(const BigFloat& a) { BigFloat r(a); mpfr_sqrt(r.v_, r.v_, MPFR_RNDN); return r; }
    friend BigFloat exp(const BigFloat& a) { BigFloat r(a); mpfr_exp(r.v_, r.v_, MPFR_RNDN); return r; }
    friend BigFloat log(const BigFloat& a) { BigFloat r(a); mpfr_log(r.v_, r.v_, MPFR_RNDN); return r; }
    friend BigFloat sin(const BigFloat& a) { BigFloat r(a); mpfr_sin(r.v_, r.v_, MPFR_RNDN); return r; }
    friend BigFloat cos(const BigFloat& a) { BigFloat r(a); mpfr_cos(r.v_, r.v_, MPFR_RNDN); return r; }
    friend BigFloat atan2(const BigFloat& y, const BigFloat& x) {
        BigFloat r(std::max(y.prec(), x.prec()));
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat hypot(const BigFloat& x, const BigFloat& y) {
        BigFloat r(std::max(y.prec(), x.prec()));
        mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat pow(const BigFloat& a, long n) { BigFloat r(a); mpfr_pow_si(r.v_, a.v_, n, MPFR_RNDN); return r; }
    friend BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

private:
    mpfr_t v_;
};

class Complex {
public:
    BigFloat re, im;

    explicit Complex(mpfr_prec_t bits = 64) : re(bits), im(bits) {}
    Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    Complex(const BigFloat& r) : re(r), im(r.prec()) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        BigFloat r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator/=(const Complex& o) {
        BigFloat d = o.re * o.re + o.im * o.im;
        BigFloat r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = std::move(r);
        return *this;
    }
    Complex& operator*=(const BigFloat& x) { re *= x; im *= x; return *this; }
    Complex& operator*=(long n) { re *= n; im *= n; return *this; }
    Complex& operator/=(long n) { re /= n; im /= n; return *this; }

    friend Complex operator+(Complex a, const Complex& b) { a += b; return a; }
    friend Complex operator-(Complex a, const Complex& b) { a -= b; return a; }
    friend Complex operator*(Complex a, const Complex& b) { a *= b; return a; }
    friend Complex operator/(Complex a, const Complex& b) { a /= b; return a; }
    friend Complex operator*(Complex a, const BigFloat& x) { a *= x; return a; }
    friend Complex operator*(Complex a, long n) { a *= n; return a; }
    friend Complex operator/(Complex a, long n) { a /= n; return a; }
    Complex operator-() const { return Complex(-re, -im); }

    friend BigFloat abs(const Complex& z) { return hypot(z.re, z.im); }
    friend Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

    std::string str(int digits = 20) const {
        std::string s = re.str(digits);
        if (im.sign() < 0) s += " - " + (-im).str(digits) + "i";
        else s += " + " + im.str(digits) + "i";
        return s;
    }
};

inline Complex cpow(const Complex& z, long n) {
    if (n < 0) {
        Complex one(BigFloat(1L, z.prec()), BigFloat(z.prec()));
        return one / cpow(z, -n);
    }
    Complex result(BigFloat(1L, z.prec()), BigFloat(z.prec()));
    Complex base = z;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

inline Complex cexp(const Complex& z) {
    BigFloat m = exp(z.re);
    return Complex(m * cos(z.im), m * sin(z.im));
}

// e^{2 pi i tau}
inline Complex q_of_tau(const Complex& tau) {
    BigFloat twopi = BigFloat::pi(tau.prec()) * 2L;
    return cexp(Complex(-twopi * tau.im, twopi * tau.re));
}

// (-2 pi i)^k
inline Complex minus_two_pi_i_pow(long k, mpfr_prec_t bits) {
    Complex base(BigFloat(bits), -(BigFloat::pi(bits) * 2L));
    return cpow(base, k);
}

inline Complex cot_pi(const Complex& x) {
    // pi cot(pi x) = pi i (e^{2 pi i x} + 1)/(e^{2 pi i x} - 1)
    mpfr_prec_t b = x.prec();
    Complex e = q_of_tau(x);
    Complex one(BigFloat(1L, b), BigFloat(b));
    Complex pii(BigFloat(b), BigFloat::pi(b));
    return pii * (e + one) / (e - one);
}

}  // namespace qmzv
