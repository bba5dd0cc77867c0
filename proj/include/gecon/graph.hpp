#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gecon {

// Vertices are dense 0..n-1; adjacency rows fit in one word per vertex.
inline constexpr int kMaxVertices = 62;

struct UnsupportedSizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
        if (a == b) throw std::invalid_argument("edge endpoints must differ");
        if (a < 0 || b < 0) throw std::invalid_argument("negative vertex id");
    }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

inline std::uint64_t all_vertices_mask(int n) {
    return n == 0 ? 0 : (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

/// Simple undirected graph, immutable after construction. All operations on
/// graphs are pure functions returning new values.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(check_order(n), 0) {}

    Graph(int n, const EdgeList& edges) : Graph(n) {
        for (const Edge& e : edges) {
            if (e.v >= n_) throw std::invalid_argument("edge endpoint out of range");
            adj_[e.u] |= bit(e.v);
            adj_[e.v] |= bit(e.u);
        }
    }

    int order() const { return n_; }

    int size() const {
        int twice = 0;
        for (std::uint64_t row : adj_) twice += std::popcount(row);
        return twice / 2;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && (adj_[u] >> v) & 1;
    }

    std::uint64_t neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    /// Edges in lexicographic (u,v) order.
    EdgeList edges() const {
        EdgeList out;
        for (int u = 0; u < n_; ++u) {
            std::uint64_t higher = adj_[u] >> (u + 1);
            while (higher) {
                int v = u + 1 + std::countr_zero(higher);
                out.emplace_back(u, v);
                higher &= higher - 1;
            }
        }
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    static int check_order(int n) {
        if (n < 0 || n > kMaxVertices) throw UnsupportedSizeError("graph order out of range");
        return n;
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

inline Graph complement(const Graph& g) {
    const int n = g.order();
    EdgeList edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

/// Removes the given edges; pairs not present in g are ignored.
inline Graph delete_edges(const Graph& g, const EdgeList& remove) {
    std::uint64_t gone_by_u[kMaxVertices] = {};
    for (const Edge& e : remove) {
        if (e.v >= g.order()) throw std::invalid_argument("edge endpoint out of range");
        gone_by_u[e.u] |= bit(e.v);
    }
    EdgeList kept;
    for (const Edge& e : g.edges())
        if (!((gone_by_u[e.u] >> e.v) & 1)) kept.push_back(e);
    return Graph(g.order(), kept);
}

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
    std::vector<int> sequence;  // sorted descending
};

inline DegreeStats degree_stats(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("degree_stats needs at least one vertex");
    DegreeStats st;
    st.sequence.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) st.sequence.push_back(g.degree(v));
    std::sort(st.sequence.begin(), st.sequence.end(), std::greater<>());
    st.min_degree = st.sequence.back();
    st.max_degree = st.sequence.front();
    return st;
}

/// Vertices reachable from `start`, as a bitmask.
inline std::uint64_t component_mask(const Graph& g, int start) {
    std::uint64_t seen = bit(start);
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.neighbors(v) & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen;
}

inline bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    return component_mask(g, 0) == all_vertices_mask(g.order());
}

/// Lexicographically smallest k-subset iteration helper: calls fn(mask) for
/// every k-subset of {0..n-1} in lexicographic order of the sorted vertex
/// list. fn returning false stops the sweep early.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int v : pick) mask |= bit(v);
        if (!fn(mask)) return;
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) return;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

inline std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace gecon
