#pragma once

#include "spinpoly/rational.hpp"

namespace spinpoly {

/// First-order jet a + a' eps over the exact rationals. Used to push a
/// derivative in lambda through pendant-tree elimination without symbols.
struct Jet {
    Rational val;
    Rational dot;

    Jet() : val(0), dot(0) {}
    Jet(Rational v) : val(std::move(v)), dot(0) {}
    Jet(Rational v, Rational d) : val(std::move(v)), dot(std::move(d)) {}

    static Jet variable(const Rational& v) { return Jet(v, Rational(1)); }

    friend Jet operator+(const Jet& a, const Jet& b) { return {a.val + b.val, a.dot + b.dot}; }
    friend Jet operator-(const Jet& a, const Jet& b) { return {a.val - b.val, a.dot - b.dot}; }
    friend Jet operator*(const Jet& a, const Jet& b) {
        return {a.val * b.val, a.dot * b.val + a.val * b.dot};
    }
    friend Jet operator/(const Jet& a, const Jet& b) {
        if (sgn(b.val) == 0)
            throw inconsistency_error("jet division by zero value");
        Rational v = a.val / b.val;
        return {v, (a.dot - v * b.dot) / b.val};
    }
    Jet& operator+=(const Jet& o) { *this = *this + o; return *this; }
    Jet& operator*=(const Jet& o) { *this = *this * o; return *this; }

    friend bool operator==(const Jet& a, const Jet& b) { return a.val == b.val && a.dot == b.dot; }
};

inline Jet pow_jet(const Jet& base, unsigned long exp) {
    Jet out(Rational(1));
    Jet acc = base;
    while (exp) {
        if (exp & 1) out *= acc;
        acc *= acc;
        exp >>= 1;
    }
    return out;
}

} // namespace spinpoly
