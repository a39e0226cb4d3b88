#pragma once

#include <set>
#include <string>
#include <vector>

#include "spinpoly/unipoly.hpp"

namespace spinpoly {

/// Point evaluations of an unknown degree-n over degree-n rational function.
struct SampleSet {
    int declared_degree = 0;
    std::vector<std::pair<Rational, Rational>> points;  // (x_i, R(x_i))

    void validate() const {
        if (declared_degree < 0)
            throw precondition_error("declared degree must be nonnegative");
        if (static_cast<int>(points.size()) < 2 * declared_degree + 2)
            throw precondition_error("need at least 2n+2 samples");
        std::set<Rational> xs;
        for (const auto& [x, r] : points)
            if (!xs.insert(x).second)
                throw precondition_error("sample abscissas must be distinct");
    }
};

enum class Side { numerator, denominator };

struct RationalFunctionRep {
    UniPoly p;  // numerator
    UniPoly q;  // denominator
    std::string normalization = "primitive-ray";
};

namespace detail {

/// Fraction-free row echelon form (Bareiss) over the integers, with row
/// pivoting and column skipping. Returns pivot columns; matrix is left in
/// echelon form with exact integer entries.
inline std::vector<int> bareiss_echelon(std::vector<std::vector<Integer>>& a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> pivot_cols;
    Integer prev_pivot = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(a[i][c]) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[r], a[pr]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                Integer t = a[i][j] * a[r][c] - a[i][c] * a[r][j];
                Integer quot, rem;
                mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(),
                            prev_pivot.get_mpz_t());
                if (sgn(rem) != 0)
                    throw inconsistency_error("fraction-free elimination divided inexactly");
                a[i][j] = quot;
            }
            a[i][c] = 0;
        }
        prev_pivot = a[r][c];
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

} // namespace detail

/// Recover (p, q) from samples of p/q up to one overall scalar, by exact
/// nullspace computation of the homogeneous system p(x_i) - R_i q(x_i) = 0.
/// The solution is returned as a primitive integer-coefficient ray with the
/// first nonzero entry positive. Throws rank_deficient unless the nullspace
/// is exactly one-dimensional (the hypothesis of the interpolation theorem).
inline RationalFunctionRep interpolate(const SampleSet& samples) {
    samples.validate();
    const int n = samples.declared_degree;
    const int cols = 2 * n + 2;
    const int rows = static_cast<int>(samples.points.size());

    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (int i = 0; i < rows; ++i) {
        const auto& [x, rv] = samples.points[i];
        std::vector<Rational> row(cols);
        Rational xp(1);
        for (int k = 0; k <= n; ++k) {
            row[k] = xp;
            row[n + 1 + k] = -rv * xp;
            xp *= x;
        }
        Integer den_lcm = 1;
        for (const auto& q : row)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
        for (int k = 0; k < cols; ++k) {
            Rational scaled = row[k] * Rational(den_lcm);
            scaled.canonicalize();
            if (scaled.get_den() != 1)
                throw inconsistency_error("denominator clearing failed");
            a[i][k] = scaled.get_num();
        }
    }

    std::vector<int> pivots = detail::bareiss_echelon(a);
    int rank = static_cast<int>(pivots.size());
    int nullity = cols - rank;
    if (nullity != 1)
        throw rank_deficient("sample matrix nullity is " + std::to_string(nullity) +
                             ", expected 1 (common factor or wrong declared degree)");

    // back-substitute with the unique free column set to 1
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    int free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<Rational> sol(cols, Rational(0));
    sol[free_col] = 1;
    for (int r = rank - 1; r >= 0; --r) {
        int c = pivots[r];
        Rational acc(0);
        for (int j = c + 1; j < cols; ++j)
            if (sgn(a[r][j]) != 0) acc += Rational(a[r][j]) * sol[j];
        sol[c] = -acc / Rational(a[r][c]);
    }

    // clear to a primitive integer vector, first nonzero entry positive
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& q : sol) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    for (auto& q : sol) {
        q *= Rational(den_lcm);
        q.canonicalize();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
    }
    if (sgn(num_gcd) != 0)
        for (auto& q : sol) {
            q /= Rational(num_gcd);
            q.canonicalize();
        }
    int first = 0;
    while (first < cols && sgn(sol[first]) == 0) ++first;
    if (first == cols)
        throw inconsistency_error("nullspace produced the zero vector");
    if (sgn(sol[first]) < 0)
        for (auto& q : sol) q = -q;

    RationalFunctionRep rep;
    rep.p = UniPoly(std::vector<Rational>(sol.begin(), sol.begin() + n + 1));
    rep.q = UniPoly(std::vector<Rational>(sol.begin() + n + 1, sol.end()));
    if (rep.q.is_zero())
        throw inconsistency_error("recovered denominator is identically zero");
    for (const auto& [x, rv] : samples.points) {
        Rational qv = rep.q.eval(x);
        if (sgn(qv) == 0)
            throw inconsistency_error("recovered denominator vanishes at a sample point");
        if (rep.p.eval(x) != rv * qv)
            throw inconsistency_error("recovered ray fails to reproduce a sample");
    }
    if (!rep.p.is_zero() && UniPoly::gcd(rep.p, rep.q).degree() != 0)
        throw inconsistency_error("recovered pair has a nontrivial common factor");
    return rep;
}

/// Scale both parts so the pinned coefficient takes the requested value.
inline RationalFunctionRep normalize(RationalFunctionRep rep, Side side, int index,
                                     const Rational& value) {
    const Rational& pinned =
        (side == Side::numerator) ? rep.p.coeff(index) : rep.q.coeff(index);
    if (sgn(pinned) == 0)
        throw precondition_error("normalization impossible: pinned coefficient is zero");
    Rational scale = value / pinned;
    rep.p = scale * rep.p;
    rep.q = scale * rep.q;
    rep.normalization = std::string(side == Side::numerator ? "p" : "q") + "[" +
                        std::to_string(index) + "]=" + value.get_str();
    return rep;
}

} // namespace spinpoly
