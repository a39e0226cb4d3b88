#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "spinpoly/bigfloat.hpp"
#include "spinpoly/rational.hpp"

namespace spinpoly {

/// Undirected multigraph with positive rational edge weights. Self-loops and
/// parallel edges are allowed; the edge list keeps insertion order so every
/// downstream polynomial is reproducible run to run.
class MultiGraph {
  public:
    struct Edge {
        int u, v;
        Rational w;
    };

    explicit MultiGraph(int n) : n_(n) {
        if (n <= 0)
            throw precondition_error("graph must have at least one vertex");
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    void add_edge(int u, int v, Rational w = Rational(1)) {
        check_vertex(u);
        check_vertex(v);
        if (sgn(w) <= 0)
            throw precondition_error("edge weight must be positive");
        edges_.push_back({u, v, std::move(w)});
        connected_cache_.reset();
    }

    /// Degree with each self-loop counted twice.
    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (const auto& e : edges_) {
            if (e.u == v) ++d;
            if (e.v == v) ++d;
        }
        return d;
    }

    int max_degree() const {
        int best = 0;
        std::vector<int> deg(n_, 0);
        for (const auto& e : edges_) {
            ++deg[e.u];
            ++deg[e.v];
        }
        for (int d : deg) best = std::max(best, d);
        return best;
    }

    bool has_edge_between(int u, int v) const {
        for (const auto& e : edges_)
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
        return false;
    }

    bool is_connected() const {
        if (!connected_cache_) connected_cache_ = compute_connected();
        return *connected_cache_;
    }

  private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw precondition_error("vertex id out of range");
    }

    bool compute_connected() const {
        std::vector<std::vector<int>> adj(n_);
        for (const auto& e : edges_) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        std::vector<bool> seen(n_, false);
        std::vector<int> stack = {0};
        seen[0] = true;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[v])
                if (!seen[u]) {
                    seen[u] = true;
                    ++count;
                    stack.push_back(u);
                }
        }
        return count == n_;
    }

    int n_;
    std::vector<Edge> edges_;
    mutable std::optional<bool> connected_cache_;
};

inline bool connected(const MultiGraph& g) { return g.is_connected(); }

/// Positive integer vertex weights; legal when w(v) >= degree(v) everywhere
/// (self-loops counted twice).
struct VertexWeightAssignment {
    std::vector<long> w;

    static VertexWeightAssignment uniform(int n, long value) {
        VertexWeightAssignment a;
        a.w.assign(n, value);
        return a;
    }

    bool is_legal(const MultiGraph& g) const {
        if (static_cast<int>(w.size()) != g.vertex_count()) return false;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (w[v] < 1 || w[v] < g.degree(v)) return false;
        return true;
    }
};

/// Per-vertex complex activity at a recorded precision.
struct ActivityAssignment {
    std::vector<BigComplex> z;
    int precision = 256;

    static ActivityAssignment uniform(int n, const BigComplex& value, int prec) {
        ActivityAssignment a;
        a.z.assign(n, value);
        a.precision = prec;
        return a;
    }
};

/// Directed graph with integer arc weights and at most one arc per ordered
/// pair; self-loops allowed.
class DirectedWeightedGraph {
  public:
    struct Arc {
        int src, dst;
        Integer w;
    };

    explicit DirectedWeightedGraph(int n) : n_(n) {
        if (n <= 0)
            throw precondition_error("graph must have at least one vertex");
    }

    int vertex_count() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    void add_arc(int src, int dst, Integer w) {
        if (src < 0 || src >= n_ || dst < 0 || dst >= n_)
            throw precondition_error("arc endpoint out of range");
        if (sgn(w) == 0)
            throw precondition_error("arc weight must be nonzero");
        if (!seen_.insert({src, dst}).second)
            throw precondition_error("duplicate arc");
        arcs_.push_back({src, dst, std::move(w)});
    }

    bool has_arc(int src, int dst) const { return seen_.count({src, dst}) > 0; }

    int max_in_degree() const { return max_dir_degree(false); }
    int max_out_degree() const { return max_dir_degree(true); }

  private:
    int max_dir_degree(bool out) const {
        std::vector<int> deg(n_, 0);
        for (const auto& a : arcs_) ++deg[out ? a.src : a.dst];
        return *std::max_element(deg.begin(), deg.end());
    }

    int n_;
    std::vector<Arc> arcs_;
    std::set<std::pair<int, int>> seen_;
};

/// G(k) with k fresh degree-1 neighbors per vertex, unit edge weights.
/// New vertex ids are appended after the originals, grouped by host vertex.
inline MultiGraph star_augment(const MultiGraph& g, int k) {
    if (k < 0)
        throw precondition_error("star_augment needs k >= 0");
    int n = g.vertex_count();
    MultiGraph out(n * (1 + k));
    for (const auto& e : g.edges()) out.add_edge(e.u, e.v, e.w);
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < k; ++j) out.add_edge(v, n + v * k + j);
    return out;
}

/// G(k) with a fresh pendant path of k vertices hanging off each vertex,
/// host connected to the path head by an edge. In doubled mode every path
/// edge, including the connecting edge, becomes a parallel pair.
inline MultiGraph path_augment(const MultiGraph& g, int k, bool doubled = false,
                               bool double_connecting_edge = true) {
    if (k < 0)
        throw precondition_error("path_augment needs k >= 0");
    int n = g.vertex_count();
    MultiGraph out(n * (1 + k));
    for (const auto& e : g.edges()) out.add_edge(e.u, e.v, e.w);
    auto link = [&out](int a, int b, bool twice) {
        out.add_edge(a, b);
        if (twice) out.add_edge(a, b);
    };
    for (int v = 0; v < n; ++v) {
        if (k == 0) break;
        int head = n + v * k;
        link(v, head, doubled && double_connecting_edge);
        for (int j = 1; j < k; ++j) link(head + j - 1, head + j, doubled);
    }
    return out;
}

/// One fresh vertex joined to attach_at by a unit edge.
inline MultiGraph add_pendant_vertex(const MultiGraph& g, int attach_at) {
    if (attach_at < 0 || attach_at >= g.vertex_count())
        throw precondition_error("attach vertex out of range");
    MultiGraph out(g.vertex_count() + 1);
    for (const auto& e : g.edges()) out.add_edge(e.u, e.v, e.w);
    out.add_edge(attach_at, g.vertex_count());
    return out;
}

/// Merge u and v (which must be distinct and non-adjacent) into one vertex.
/// The merged vertex takes id min(u,v); ids above max(u,v) shift down by one.
/// Parallel edges may result.
inline MultiGraph merge_vertices(const MultiGraph& g, int u, int v) {
    if (u == v)
        throw precondition_error("cannot merge a vertex with itself");
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
        throw precondition_error("vertex id out of range");
    if (g.has_edge_between(u, v))
        throw precondition_error("cannot merge adjacent vertices");
    int lo = std::min(u, v), hi = std::max(u, v);
    auto remap = [lo, hi](int x) {
        if (x == hi) return lo;
        return x > hi ? x - 1 : x;
    };
    MultiGraph out(g.vertex_count() - 1);
    for (const auto& e : g.edges()) out.add_edge(remap(e.u), remap(e.v), e.w);
    return out;
}

/// Undirected bipartite double cover: vertex x of d becomes (x,0) at id x and
/// (x,1) at id n+x; arc (x,y,w) becomes edge {(x,0),(y,1)} of weight w. The
/// total weight of perfect matchings equals the cycle-cover weight of d,
/// so only graphs with positive arc weights can be doubled.
inline MultiGraph bipartite_double(const DirectedWeightedGraph& d) {
    int n = d.vertex_count();
    MultiGraph out(2 * n);
    for (const auto& a : d.arcs()) {
        if (sgn(a.w) < 0)
            throw precondition_error("bipartite_double needs positive arc weights");
        out.add_edge(a.src, n + a.dst, Rational(a.w));
    }
    return out;
}

} // namespace spinpoly
