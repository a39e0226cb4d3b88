#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "spinpoly/errors.hpp"

namespace spinpoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parse "p", "-p" or "p/q" into an exact rational. Decimal notation is
/// rejected so no silent precision loss can happen on the way in.
inline Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw precondition_error("empty rational literal");
    for (char ch : text) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+'))
            throw precondition_error("bad rational literal: " + text);
    }
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw precondition_error("bad rational literal: " + text);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline Rational pow_rational(const Rational& base, unsigned long exp) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    out.canonicalize();
    return out;
}

inline Integer pow_integer(const Integer& base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline Integer pow2(unsigned long exp) {
    Integer out = 1;
    mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), exp);
    return out;
}

/// Exact square root of a rational if it is a perfect square.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0)
        return std::nullopt;
    Integer num_root, den_root;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        return std::nullopt;
    mpz_sqrt(num_root.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), q.get_den_mpz_t());
    return Rational(num_root, den_root);
}

} // namespace spinpoly
