#pragma once

#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "spinpoly/bigfloat.hpp"
#include "spinpoly/rational.hpp"

namespace spinpoly {

/// Dense univariate polynomial with exact rational coefficients.
/// coeff(k) is the coefficient of lambda^k; the representation keeps the
/// highest stored coefficient nonzero unless the polynomial is zero.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(Rational v) { return UniPoly({std::move(v)}); }
    static UniPoly monomial(int k, Rational v = Rational(1)) {
        std::vector<Rational> c(k + 1, Rational(0));
        c[k] = std::move(v);
        return UniPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
    const Rational& coeff(int k) const {
        static const Rational kZero(0);
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : kZero;
    }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const {
        if (c_.empty())
            throw precondition_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const Rational& s, const UniPoly& a) {
        if (sgn(s) == 0) return UniPoly();
        std::vector<Rational> c = a.c_;
        for (auto& x : c) x *= s;
        return UniPoly(std::move(c));
    }

    /// d/dlambda.
    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<Rational> c(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) c[k - 1] = Rational(static_cast<long>(k)) * c_[k];
        return UniPoly(std::move(c));
    }

    /// The operator lambda * d/dlambda (coefficient k maps to k*coeff).
    UniPoly theta() const {
        std::vector<Rational> c = c_;
        for (size_t k = 0; k < c.size(); ++k) c[k] *= Rational(static_cast<long>(k));
        return UniPoly(std::move(c));
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }
    BigComplex eval(const BigComplex& z) const {
        int prec = z.precision();
        BigComplex acc(prec);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * z + BigComplex(c_[i], prec);
        return acc;
    }

    /// Exact division; throws if the remainder is nonzero.
    UniPoly divide_exact(const UniPoly& d) const {
        auto [q, r] = divrem(*this, d);
        if (!r.is_zero())
            throw inconsistency_error("inexact polynomial division");
        return q;
    }

    static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero())
            throw precondition_error("polynomial division by zero");
        std::vector<Rational> r = a.c_;
        int db = b.degree();
        if (a.degree() < db) return {UniPoly(), a};
        std::vector<Rational> q(a.degree() - db + 1, Rational(0));
        for (int k = a.degree(); k >= db; --k) {
            if (sgn(r[k]) == 0) continue;
            Rational f = r[k] / b.c_[db];
            q[k - db] = f;
            for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.c_[j];
        }
        return {UniPoly(std::move(q)), UniPoly(std::move(r))};
    }

    /// Monic gcd over the rationals; gcd(0,0) = 0.
    static UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            UniPoly r = divrem(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        return (Rational(1) / a.leading()) * a;
    }

    bool is_coprime_with(const UniPoly& other) const {
        return gcd(*this, other).degree() == 0;
    }

    UniPoly squarefree_part() const {
        if (is_zero() || degree() == 0) return *this;
        UniPoly g = gcd(*this, derivative());
        if (g.degree() == 0) return *this;
        return divide_exact(g);
    }

    /// Exact polynomial square root, when one exists with rational coefficients.
    std::optional<UniPoly> sqrt_exact() const {
        if (is_zero()) return UniPoly();
        if (degree() % 2 != 0) return std::nullopt;
        int lowest = 0;
        while (sgn(coeff(lowest)) == 0) ++lowest;
        if (lowest % 2 != 0) return std::nullopt;
        auto c0root = rational_sqrt(coeff(lowest));
        if (!c0root) return std::nullopt;
        int m = (degree() - lowest) / 2;
        std::vector<Rational> s(m + 1, Rational(0));
        s[0] = *c0root;
        for (int k = 1; k <= m; ++k) {
            Rational acc = coeff(lowest + k);
            for (int i = 1; i < k; ++i) acc -= s[i] * s[k - i];
            s[k] = acc / (Rational(2) * s[0]);
        }
        UniPoly root = UniPoly::monomial(lowest / 2) * UniPoly(std::move(s));
        if (!(root * root == *this)) return std::nullopt;
        return root;
    }

    /// Content (gcd of numerators over lcm of denominators) and primitive part
    /// with positive leading coefficient; used to tame growth in exact chains.
    UniPoly primitive_part() const {
        if (is_zero()) return *this;
        Integer num_gcd = 0, den_lcm = 1;
        for (const auto& q : c_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
        }
        Rational scale(den_lcm, num_gcd);
        scale.canonicalize();
        UniPoly out = scale * *this;
        if (sgn(out.leading()) < 0) out = Rational(-1) * out;
        return out;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            if (sgn(c_[k]) == 0) continue;
            if (!first) os << (sgn(c_[k]) > 0 ? " + " : " - ");
            else if (sgn(c_[k]) < 0) os << "-";
            Rational a = abs(c_[k]);
            if (a != 1 || k == 0) os << a.get_str();
            if (k > 0) {
                if (a != 1) os << "*";
                os << var;
                if (k > 1) os << "^" << k;
            }
            first = false;
        }
        return os.str();
    }

  private:
    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }

    std::vector<Rational> c_;  // c_[k] multiplies lambda^k
};

} // namespace spinpoly
