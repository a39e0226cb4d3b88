#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "spinpoly/rational.hpp"

namespace spinpoly {

/// Thin RAII wrapper over an mpfr_t at an explicit precision (in bits).
/// Arithmetic rounds to nearest at the wider operand precision.
class BigFloat {
  public:
    explicit BigFloat(int prec = 256) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
    BigFloat(const Rational& q, int prec) {
        mpfr_init2(x_, prec);
        mpfr_set_q(x_, q.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(double d, int prec) { mpfr_init2(x_, prec); mpfr_set_d(x_, d, MPFR_RNDN); }
    BigFloat(long v, int prec) { mpfr_init2(x_, prec); mpfr_set_si(x_, v, MPFR_RNDN); }

    BigFloat(const BigFloat& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_swap(x_, o.x_); }
    BigFloat& operator=(BigFloat o) noexcept { mpfr_swap(x_, o.x_); return *this; }
    ~BigFloat() { mpfr_clear(x_); }

    int precision() const { return static_cast<int>(mpfr_get_prec(x_)); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(x_); }
    int sign() const { return mpfr_sgn(x_); }

    std::string str(size_t digits = 40) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), x_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    static int join_prec(const BigFloat& a, const BigFloat& b) {
        return std::max(a.precision(), b.precision());
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join_prec(a, b));
        mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join_prec(a, b));
        mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join_prec(a, b));
        mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join_prec(a, b));
        mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(precision());
        mpfr_neg(r.x_, x_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& o) { mpfr_add(x_, x_, o.x_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& o) { mpfr_sub(x_, x_, o.x_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& o) { mpfr_mul(x_, x_, o.x_, MPFR_RNDN); return *this; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }

    friend BigFloat abs(const BigFloat& a) {
        BigFloat r(a.precision());
        mpfr_abs(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sqrt(const BigFloat& a) {
        BigFloat r(a.precision());
        mpfr_sqrt(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

    static BigFloat pi(int prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.x_, MPFR_RNDN);
        return r;
    }
    static BigFloat pow2exp(long e, int prec) {  // 2^e, e may be negative
        BigFloat r(prec);
        mpfr_set_si(r.x_, 1, MPFR_RNDN);
        mpfr_mul_2si(r.x_, r.x_, e, MPFR_RNDN);
        return r;
    }
    void cos_sin(BigFloat& c, BigFloat& s) const { mpfr_sin_cos(s.x_, c.x_, x_, MPFR_RNDN); }

    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

  private:
    mpfr_t x_;
};

struct BigComplex {
    BigFloat re, im;

    explicit BigComplex(int prec = 256) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(const Rational& r, int prec) : re(r, prec), im(prec) {}

    int precision() const { return std::max(re.precision(), im.precision()); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    BigComplex operator-() const { return {-re, -im}; }
    BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
    BigComplex& operator*=(const BigComplex& o) { *this = *this * o; return *this; }

    friend BigFloat norm(const BigComplex& a) { return a.re * a.re + a.im * a.im; }
    friend BigFloat abs(const BigComplex& a) { return sqrt(norm(a)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    static BigComplex unit(const BigFloat& angle, int prec) {
        BigFloat c(prec), s(prec);
        angle.cos_sin(c, s);
        return {c, s};
    }
};

inline BigComplex pow_cplx(const BigComplex& base, unsigned long exp, int prec) {
    BigComplex out(Rational(1), prec);
    BigComplex acc = base;
    while (exp) {
        if (exp & 1) out *= acc;
        acc *= acc;
        exp >>= 1;
    }
    return out;
}

} // namespace spinpoly
