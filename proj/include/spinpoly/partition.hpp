#pragma once

#include <vector>

#include "spinpoly/graphs.hpp"
#include "spinpoly/jet.hpp"
#include "spinpoly/unipoly.hpp"

namespace spinpoly {

struct EnumCaps {
    int ising_max_n = 24;
    int matching_max_edges = 40;
};

namespace detail {

inline Rational f_zero(const Rational&) { return Rational(0); }
inline Rational f_one(const Rational&) { return Rational(1); }
inline Rational f_from(const Rational&, const Rational& q) { return q; }
inline Jet f_zero(const Jet&) { return Jet(Rational(0)); }
inline Jet f_one(const Jet&) { return Jet(Rational(1)); }
inline Jet f_from(const Jet&, const Rational& q) { return Jet(q); }
inline BigComplex f_zero(const BigComplex& proto) { return BigComplex(proto.precision()); }
inline BigComplex f_one(const BigComplex& proto) { return BigComplex(Rational(1), proto.precision()); }
inline BigComplex f_from(const BigComplex& proto, const Rational& q) {
    return BigComplex(q, proto.precision());
}

template <class F>
F f_pow(const F& base, unsigned long e) {
    F out = f_one(base);
    F acc = base;
    while (e) {
        if (e & 1) out = out * acc;
        acc = acc * acc;
        e >>= 1;
    }
    return out;
}

/// Per-vertex lists of (earlier neighbor, multiplicity) and self-loop counts,
/// shared by the configuration-space recursions.
struct BackEdges {
    std::vector<std::vector<std::pair<int, int>>> prior;  // prior[v] = {(u<v, mult)}
    std::vector<int> loops;

    explicit BackEdges(const MultiGraph& g)
        : prior(g.vertex_count()), loops(g.vertex_count(), 0) {
        std::vector<std::vector<int>> mult(g.vertex_count());
        for (auto& m : mult) m.assign(g.vertex_count(), 0);
        for (const auto& e : g.edges()) {
            if (e.u == e.v) {
                ++loops[e.u];
            } else {
                int hi = std::max(e.u, e.v), lo = std::min(e.u, e.v);
                ++mult[hi][lo];
            }
        }
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int u = 0; u < v; ++u)
                if (mult[v][u]) prior[v].push_back({u, mult[v][u]});
    }
};

} // namespace detail

/// Ising partition function as a polynomial in the vertex activity: the
/// coefficient of lambda^k sums beta^{disagreements} over the configurations
/// with exactly k plus spins. Gray-code sweep over all 2^n configurations.
inline UniPoly ising_poly(const MultiGraph& g, const Rational& beta,
                          const EnumCaps& caps = {}) {
    if (sgn(beta) <= 0 || beta > 1)
        throw precondition_error("ising edge potential must satisfy 0 < beta <= 1");
    int n = g.vertex_count();
    if (n > caps.ising_max_n)
        throw cap_exceeded("ising enumeration cap exceeded");
    int m = g.edge_count();
    std::vector<Rational> bpow(m + 1);
    bpow[0] = 1;
    for (int i = 1; i <= m; ++i) bpow[i] = bpow[i - 1] * beta;

    std::vector<std::vector<std::pair<int, int>>> nonloop(n);  // nonloop[v] = {(u, mult)}
    {
        std::vector<std::vector<int>> mult(n);
        for (auto& row : mult) row.assign(n, 0);
        for (const auto& e : g.edges())
            if (e.u != e.v) {
                ++mult[e.u][e.v];
                ++mult[e.v][e.u];
            }
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < n; ++u)
                if (mult[v][u]) nonloop[v].push_back({u, mult[v][u]});
    }

    std::vector<Rational> coeffs(n + 1, Rational(0));
    std::vector<char> spin(n, 0);  // all-minus start: d = 0, p = 0
    int d = 0, p = 0;
    coeffs[0] += bpow[0];
    const unsigned long total = 1ul << n;
    for (unsigned long s = 1; s < total; ++s) {
        int v = __builtin_ctzl(s);
        for (auto [u, mu] : nonloop[v]) d += (spin[u] == spin[v]) ? mu : -mu;
        spin[v] ^= 1;
        p += spin[v] ? 1 : -1;
        coeffs[p] += bpow[d];
    }

    UniPoly z{std::vector<Rational>(coeffs)};
    if (z.coeff(0) != 1 || z.degree() != n)
        throw inconsistency_error("ising polynomial lost its normalization");
    return z;
}

/// Two-spin analogue: coefficient of lambda^k sums a1^{++edges} a2^{--edges}.
inline UniPoly twospin_poly(const MultiGraph& g, const Rational& a1, const Rational& a2,
                            const EnumCaps& caps = {}) {
    if (sgn(a1) <= 0 || sgn(a2) <= 0)
        throw precondition_error("two-spin potentials must be positive");
    int n = g.vertex_count();
    if (n > caps.ising_max_n)
        throw cap_exceeded("two-spin enumeration cap exceeded");
    int m = g.edge_count();
    std::vector<Rational> apow(m + 1), bpow(m + 1);
    apow[0] = bpow[0] = 1;
    for (int i = 1; i <= m; ++i) {
        apow[i] = apow[i - 1] * a1;
        bpow[i] = bpow[i - 1] * a2;
    }
    detail::BackEdges be(g);
    std::vector<Rational> coeffs(n + 1, Rational(0));
    std::vector<char> spin(n, 0);

    // recursive assignment tracking (plus-count, ++agreements, --agreements)
    auto rec = [&](auto&& self, int v, int p, int ep, int em) -> void {
        if (v == n) {
            coeffs[p] += apow[ep] * bpow[em];
            return;
        }
        for (int s = 0; s <= 1; ++s) {
            spin[v] = static_cast<char>(s);
            int dep = s ? be.loops[v] : 0, dem = s ? 0 : be.loops[v];
            for (auto [u, mu] : be.prior[v])
                if (spin[u] == s) (s ? dep : dem) += mu;
            self(self, v + 1, p + s, ep + dep, em + dem);
        }
    };
    rec(rec, 0, 0, 0, 0);
    return UniPoly(std::move(coeffs));
}

/// Weighted matching polynomial: coefficient of lambda^k is the total edge
/// weight of matchings leaving k vertices unmatched. Parallel edges between a
/// pair act additively; self-loops can never be matched.
inline UniPoly matching_poly(const MultiGraph& g, const EnumCaps& caps = {}) {
    if (g.edge_count() > caps.matching_max_edges)
        throw cap_exceeded("matching enumeration cap exceeded");
    int n = g.vertex_count();
    for (const auto& e : g.edges())
        if (sgn(e.w) <= 0)
            throw precondition_error("matching weights must be positive");

    // forward[v] = {(u > v, summed weight)}
    std::vector<std::vector<std::pair<int, Rational>>> fwd(n);
    {
        std::vector<std::vector<Rational>> acc(n);
        for (auto& row : acc) row.assign(n, Rational(0));
        for (const auto& e : g.edges())
            if (e.u != e.v) {
                int lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
                acc[lo][hi] += e.w;
            }
        for (int v = 0; v < n; ++v)
            for (int u = v + 1; u < n; ++u)
                if (sgn(acc[v][u]) != 0) fwd[v].push_back({u, acc[v][u]});
    }

    std::vector<Rational> coeffs(n + 1, Rational(0));
    std::vector<char> covered(n, 0);
    Rational prod(1);
    auto rec = [&](auto&& self, int v, int pairs) -> void {
        while (v < n && covered[v]) ++v;
        if (v == n) {
            coeffs[n - 2 * pairs] += prod;
            return;
        }
        covered[v] = 1;
        self(self, v + 1, pairs);  // v stays unmatched
        for (auto& [u, wsum] : fwd[v]) {
            if (covered[u]) continue;
            covered[u] = 1;
            prod *= wsum;
            self(self, v + 1, pairs + 1);
            prod /= wsum;
            covered[u] = 0;
        }
        covered[v] = 0;
    };
    rec(rec, 0, 0);
    return UniPoly(std::move(coeffs));
}

template <class F>
struct IsingSums {
    F z;       // weighted partition function
    F dz;      // image under sum_v z_v d/dz_v
};

/// Weighted multivariate Ising sums, exact over whatever field F carries
/// (rationals, jets, or complex at fixed precision). fixed_plus marks
/// vertices conditioned to spin +; their activities are excluded from both
/// the product and the derivative, matching the conditioned partition sum.
template <class F>
IsingSums<F> weighted_ising_sums(const MultiGraph& g, const F& beta, const std::vector<F>& z,
                                 const VertexWeightAssignment& w,
                                 const std::vector<bool>& fixed_plus = {}) {
    int n = g.vertex_count();
    if (static_cast<int>(z.size()) != n || static_cast<int>(w.w.size()) != n)
        throw precondition_error("activity/weight vector size mismatch");
    std::vector<bool> fixed = fixed_plus.empty() ? std::vector<bool>(n, false) : fixed_plus;
    if (static_cast<int>(fixed.size()) != n)
        throw precondition_error("conditioning set size mismatch");

    detail::BackEdges be(g);
    int m = g.edge_count();
    std::vector<F> bpow;
    bpow.reserve(m + 1);
    bpow.push_back(detail::f_one(beta));
    for (int i = 1; i <= m; ++i) bpow.push_back(bpow.back() * beta);
    std::vector<F> zpow;
    zpow.reserve(n);
    for (int v = 0; v < n; ++v) zpow.push_back(detail::f_pow(z[v], static_cast<unsigned long>(w.w[v])));

    IsingSums<F> out{detail::f_zero(beta), detail::f_zero(beta)};
    std::vector<char> spin(n, 0);
    auto rec = [&](auto&& self, int v, const F& weight, long plus_weight) -> void {
        if (v == n) {
            out.z = out.z + weight;
            out.dz = out.dz + weight * detail::f_from(beta, Rational(plus_weight));
            return;
        }
        int lo = fixed[v] ? 1 : 0;
        for (int s = 1; s >= lo; --s) {
            spin[v] = static_cast<char>(s);
            int dis = 0;
            for (auto [u, mu] : be.prior[v])
                if (spin[u] != s) dis += mu;
            F f = bpow[dis];
            long pw = 0;
            if (s && !fixed[v]) {
                f = f * zpow[v];
                pw = w.w[v];
            }
            self(self, v + 1, weight * f, plus_weight + pw);
        }
    };
    rec(rec, 0, detail::f_one(beta), 0);
    return out;
}

template <class F>
F weighted_ising_eval(const MultiGraph& g, const F& beta, const std::vector<F>& z,
                      const VertexWeightAssignment& w) {
    return weighted_ising_sums(g, beta, z, w).z;
}

template <class F>
F weighted_ising_D_eval(const MultiGraph& g, const F& beta, const std::vector<F>& z,
                        const VertexWeightAssignment& w) {
    return weighted_ising_sums(g, beta, z, w).dz;
}

/// Partition sum conditioned on the vertices of S carrying spin +, with the
/// convention that S-activities are dropped (the empty complement gives 1).
template <class F>
IsingSums<F> conditioned_partition_plus(const MultiGraph& g, const std::vector<bool>& in_s,
                                        const F& beta, const std::vector<F>& z,
                                        const VertexWeightAssignment& w) {
    bool any = false;
    for (bool b : in_s) any = any || b;
    if (!any)
        throw precondition_error("conditioning set must be nonempty");
    return weighted_ising_sums(g, beta, z, w, in_s);
}

/// Matching sum with per-vertex monomer activities: sum over matchings of
/// (product of matched edge weights) * (product of unmatched activities).
template <class F>
F matching_eval_multi(const MultiGraph& g, const std::vector<F>& z, const EnumCaps& caps = {}) {
    if (g.edge_count() > caps.matching_max_edges)
        throw cap_exceeded("matching enumeration cap exceeded");
    int n = g.vertex_count();
    if (static_cast<int>(z.size()) != n)
        throw precondition_error("activity vector size mismatch");
    std::vector<std::vector<std::pair<int, Rational>>> fwd(n);
    {
        std::vector<std::vector<Rational>> acc(n);
        for (auto& row : acc) row.assign(n, Rational(0));
        for (const auto& e : g.edges())
            if (e.u != e.v) {
                int lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
                acc[lo][hi] += e.w;
            }
        for (int v = 0; v < n; ++v)
            for (int u = v + 1; u < n; ++u)
                if (sgn(acc[v][u]) != 0) fwd[v].push_back({u, acc[v][u]});
    }
    F proto = z.empty() ? F() : z[0];
    F total = detail::f_zero(proto);
    std::vector<char> covered(n, 0);
    auto rec = [&](auto&& self, int v, const F& prod) -> void {
        while (v < n && covered[v]) ++v;
        if (v == n) {
            total = total + prod;
            return;
        }
        covered[v] = 1;
        self(self, v + 1, prod * z[v]);
        for (auto& [u, wsum] : fwd[v]) {
            if (covered[u]) continue;
            covered[u] = 1;
            self(self, v + 1, prod * detail::f_from(proto, wsum));
            covered[u] = 0;
        }
        covered[v] = 0;
    };
    rec(rec, 0, detail::f_one(proto));
    return total;
}

/// Two-spin sum with per-vertex activities.
template <class F>
F twospin_eval_multi(const MultiGraph& g, const F& a1, const F& a2, const std::vector<F>& z) {
    int n = g.vertex_count();
    if (static_cast<int>(z.size()) != n)
        throw precondition_error("activity vector size mismatch");
    detail::BackEdges be(g);
    F total = detail::f_zero(a1);
    std::vector<char> spin(n, 0);
    auto rec = [&](auto&& self, int v, const F& weight) -> void {
        if (v == n) {
            total = total + weight;
            return;
        }
        for (int s = 0; s <= 1; ++s) {
            spin[v] = static_cast<char>(s);
            int agree = be.loops[v];
            for (auto [u, mu] : be.prior[v])
                if (spin[u] == s) agree += mu;
            F f = detail::f_pow(s ? a1 : a2, static_cast<unsigned long>(agree));
            if (s) f = f * z[v];
            self(self, v + 1, weight * f);
        }
    };
    rec(rec, 0, detail::f_one(a1));
    return total;
}

enum class ObservableKind { magnetization, mean_energy, susceptibility, monomer_count, dimer_count };

struct ObservableValue {
    ObservableKind kind;
    Rational value;
};

/// All Ising averages at exact rational parameters. The mean energy is the
/// beta-weighted disagreement average, computed from a direct enumeration of
/// sum_sigma d(sigma) beta^{d} lambda^{p} rather than a bivariate polynomial.
struct IsingObservables {
    Rational magnetization;
    Rational mean_energy;
    Rational susceptibility;
};

inline IsingObservables ising_observables(const MultiGraph& g, const Rational& beta,
                                          const Rational& lambda, const EnumCaps& caps = {}) {
    if (sgn(lambda) <= 0)
        throw precondition_error("activity must be positive");
    int n = g.vertex_count();
    if (n > caps.ising_max_n)
        throw cap_exceeded("ising enumeration cap exceeded");
    UniPoly z = ising_poly(g, beta, caps);
    UniPoly dz = z.theta();
    UniPoly d2z = dz.theta();
    Rational zv = z.eval(lambda);
    if (sgn(zv) == 0)
        throw inconsistency_error("partition function vanished at positive parameters");

    // energy numerator via the same Gray-code sweep, weighted by d
    int m = g.edge_count();
    std::vector<Rational> bpow(m + 1);
    bpow[0] = 1;
    for (int i = 1; i <= m; ++i) bpow[i] = bpow[i - 1] * beta;
    std::vector<std::vector<std::pair<int, int>>> nonloop(n);
    {
        std::vector<std::vector<int>> mult(n);
        for (auto& row : mult) row.assign(n, 0);
        for (const auto& e : g.edges())
            if (e.u != e.v) {
                ++mult[e.u][e.v];
                ++mult[e.v][e.u];
            }
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < n; ++u)
                if (mult[v][u]) nonloop[v].push_back({u, mult[v][u]});
    }
    std::vector<Rational> energy_coeffs(n + 1, Rational(0));
    std::vector<char> spin(n, 0);
    int d = 0, p = 0;
    for (unsigned long s = 1, total = 1ul << n; s < total; ++s) {
        int v = __builtin_ctzl(s);
        for (auto [u, mu] : nonloop[v]) d += (spin[u] == spin[v]) ? mu : -mu;
        spin[v] ^= 1;
        p += spin[v] ? 1 : -1;
        energy_coeffs[p] += Rational(d) * bpow[d];
    }
    Rational energy_num = UniPoly(std::move(energy_coeffs)).eval(lambda);

    IsingObservables out;
    out.magnetization = dz.eval(lambda) / zv;
    out.mean_energy = energy_num / zv;
    out.susceptibility = d2z.eval(lambda) / zv - out.magnetization * out.magnetization;
    if (out.magnetization < 0 || out.magnetization > n)
        throw inconsistency_error("magnetization left [0, n]");
    if (sgn(out.susceptibility) < 0)
        throw inconsistency_error("negative susceptibility at positive parameters");
    return out;
}

struct MatchingObservables {
    Rational monomer_count;
    Rational dimer_count;
};

inline MatchingObservables matching_observables(const MultiGraph& g, const Rational& lambda,
                                                const EnumCaps& caps = {}) {
    if (sgn(lambda) <= 0)
        throw precondition_error("monomer activity must be positive");
    UniPoly zm = matching_poly(g, caps);
    Rational zv = zm.eval(lambda);
    if (sgn(zv) == 0)
        throw inconsistency_error("matching polynomial vanished at positive activity");
    MatchingObservables out;
    out.monomer_count = zm.theta().eval(lambda) / zv;
    out.dimer_count = (Rational(g.vertex_count()) - out.monomer_count) / 2;
    if (out.monomer_count < 0 || out.monomer_count > g.vertex_count())
        throw inconsistency_error("monomer count left [0, n]");
    return out;
}

inline Rational twospin_magnetization(const MultiGraph& g, const Rational& a1, const Rational& a2,
                                      const Rational& lambda, const EnumCaps& caps = {}) {
    UniPoly zs = twospin_poly(g, a1, a2, caps);
    Rational zv = zs.eval(lambda);
    if (sgn(zv) == 0)
        throw inconsistency_error("two-spin partition function vanished");
    return zs.theta().eval(lambda) / zv;
}

} // namespace spinpoly
