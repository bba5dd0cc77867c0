#pragma once

#include <optional>
#include <vector>

#include "gecon/canonical.hpp"
#include "gecon/generators.hpp"
#include "gecon/graph.hpp"
#include "gecon/maxflow.hpp"
#include "gecon/packing.hpp"

namespace gecon {

inline int ceil_half(int k) { return (k + 1) / 2; }

inline int floor_div(int a, int b) {
    return a / b - ((a % b != 0) && ((a < 0) != (b < 0)));
}

/// Order-only bounds on lambda_k(G) + lambda_k(~G) and the product. The
/// product ceiling is the real square ((n - ceil(k/2)) / 2)^2, kept as an
/// exact rational with denominator 4; the floored value is reported as well.
struct OrderBounds {
    int sum_lower = 1;
    int sum_upper = 0;
    int product_lower = 0;
    int product_upper_num = 0;  // (n - ceil(k/2))^2, over product_upper_den
    int product_upper_den = 4;
    int product_upper_floor = 0;
};

inline OrderBounds order_bounds(int n, int k) {
    if (k < 2 || k > n) throw std::invalid_argument("k must satisfy 2 <= k <= n");
    OrderBounds b;
    b.sum_upper = n - ceil_half(k);
    b.product_upper_num = b.sum_upper * b.sum_upper;
    b.product_upper_floor = b.product_upper_num / 4;
    return b;
}

/// Size-aware lower bound on the connectivity sum, defined for n >= 6. Below
/// the n/3 edge threshold it comes from the spanning-tree guarantee of a
/// near-complete complement; above it from the classical sum bound on
/// edge-connectivity, halved.
inline int size_sum_lower(int n, int m) {
    if (n < 6) throw std::invalid_argument("size_sum_lower is stated for n >= 6");
    if (m < 0 || m > n * (n - 1) / 2) throw std::invalid_argument("edge count out of range");
    if (m <= n / 3) return stp_lower_bound_near_complete(n, m);
    return std::max(1, floor_div(n - 2 - m, 2));
}

/// Size-aware upper bound on the connectivity sum.
inline int size_sum_upper(int n, int m, int k) {
    if (k < 2 || k > n) throw std::invalid_argument("k must satisfy 2 <= k <= n");
    if (m < 0 || m > n * (n - 1) / 2) throw std::invalid_argument("edge count out of range");
    const int top = n - ceil_half(k);
    if (m >= n - 1) return top;
    if (k % 2 == 0) return m == 0 ? top : top - 1;
    return m <= (k - 1) / 2 ? top : top - 1;
}

/// Size-aware upper bound on the connectivity product.
inline int size_product_upper(int n, int m) {
    if (n < 1 || m < 0 || m > n * (n - 1) / 2) throw std::invalid_argument("bad n,m");
    if (m <= n - 2) return 0;
    if ((2 * m) % n == 0) {
        const int r = 2 * m / n;
        return (r - 1) * (n - 2 - r);
    }
    const int r = 2 * m / n;
    return r * (n - 2 - r);
}

/// Density ceiling on lambda_k itself: 0 below the tree threshold, else
/// floor(2m/n); when 2m/n is an integer (and m >= n) the ceiling sharpens to
/// 2m/n - 1.
struct DensityUpper {
    int basic = 0;
    std::optional<int> sharpened;
};

inline DensityUpper density_upper(int n, int m) {
    DensityUpper d;
    if (m < n - 1) return d;
    d.basic = 2 * m / n;
    if ((2 * m) % n == 0 && m >= n) d.sharpened = 2 * m / n - 1;
    return d;
}

/// Structure forcing lambda_k(G) = n - ceil(k/2): the complete graph for even
/// k; the complete graph minus at most (k-1)/2 edges for odd k. Purely
/// structural, no solver involved.
inline bool has_max_lambda_form(const Graph& g, int k) {
    const int n = g.order();
    if (k < 3 || k > n) throw std::invalid_argument("k must satisfy 3 <= k <= n");
    const int missing = n * (n - 1) / 2 - g.size();
    if (k % 2 == 0) return missing == 0;
    return missing <= (k - 1) / 2;
}

/// Necessary degree-balance condition for the sum to reach n - ceil(k/2).
inline bool degree_spread_ok(const Graph& g, int k) {
    if (k < 2 || k > g.order()) throw std::invalid_argument("k must satisfy 2 <= k <= n");
    const DegreeStats st = degree_stats(g);
    return st.max_degree - st.min_degree <= ceil_half(k) - 1;
}

/// Structural clauses every graph with lambda_k = floor(2m/n) must satisfy
/// (for m >= n-1). Returns the violated clause numbers, empty when the
/// claimed value is consistent; vacuously empty when claimed differs from the
/// density ceiling.
///   1: 2m/n must not be an integer
///   2: the minimum degree must equal floor(2m/n)
///   3: no two adjacent vertices may both have degree floor(2m/n)
inline std::vector<int> density_tightness_violations(const Graph& g, int k, int claimed) {
    const int n = g.order();
    const int m = g.size();
    if (m < n - 1) throw std::invalid_argument("density clauses assume m >= n-1");
    if (k < 3 || k > n) throw std::invalid_argument("k must satisfy 3 <= k <= n");
    std::vector<int> violated;
    if (claimed != 2 * m / n) return violated;
    if ((2 * m) % n == 0) violated.push_back(1);
    const int bound = 2 * m / n;
    if (degree_stats(g).min_degree != bound) violated.push_back(2);
    bool adjacent_pair = false;
    for (const Edge& e : g.edges())
        if (g.degree(e.u) == bound && g.degree(e.v) == bound) adjacent_pair = true;
    if (adjacent_pair) violated.push_back(3);
    return violated;
}

/// Predicted truth of lambda_k(G) * lambda_k(~G) = 0, from connectivity only.
inline bool product_zero_predicted(const Graph& g) {
    return !is_connected(g) || !is_connected(complement(g));
}

inline bool has_adjacent_min_degree_pair(const Graph& g) {
    if (g.order() < 2) return false;
    const int d = degree_stats(g).min_degree;
    for (const Edge& e : g.edges())
        if (g.degree(e.u) == d && g.degree(e.v) == d) return true;
    return false;
}

/// Classifier for the graphs whose connectivity sum with the complement is
/// exactly one. Condition tags:
///   cond1: class 1 or class 2 membership (n >= 5);
///   cond2: class 3 membership where some component of G minus the dominating
///          vertex is a tree on fewer than k vertices (n >= 5);
///   cond3: the sporadic list, up to isomorphism.
enum class SumOneCondition { none, cond1, cond2, cond3 };

inline const char* to_string(SumOneCondition c) {
    switch (c) {
        case SumOneCondition::none: return "none";
        case SumOneCondition::cond1: return "cond1";
        case SumOneCondition::cond2: return "cond2";
        case SumOneCondition::cond3: return "cond3";
    }
    return "?";
}

namespace detail {

// class-3 structure relative to a specific dominating vertex v1
inline bool class3_with_dominator(const Graph& g, int v1) {
    const int n = g.order();
    if (g.degree(v1) != n - 1) return false;
    for (int u = 0; u < n; ++u) {
        if (u == v1 || g.degree(u) != 2) continue;
        if (g.has_edge(u, v1)) return true;  // the other neighbor is adjacent to v1 anyway
    }
    return false;
}

inline bool has_small_tree_component_without(const Graph& g, int v1, int k) {
    const int n = g.order();
    std::uint64_t rest = all_vertices_mask(n) & ~bit(v1);
    while (rest) {
        const int start = std::countr_zero(rest);
        // component of G - v1 containing start
        std::uint64_t comp = bit(start), frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= g.neighbors(v) & ~bit(v1) & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        rest &= ~comp;
        int edges = 0;
        for (std::uint64_t scan = comp; scan;) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            edges += std::popcount(g.neighbors(v) & comp);
        }
        edges /= 2;
        const int verts = std::popcount(comp);
        if (edges == verts - 1 && verts < k) return true;
    }
    return false;
}

inline bool in_sporadic_list(const Graph& g, int k) {
    const int n = g.order();
    auto same = [&](const Graph& ref) { return isomorphic(g, ref); };
    if (k == n) {
        if (n == 3) return same(path_graph(3)) || same(cycle(3));
        if (n == 4) return same(cycle(4)) || same(delete_edges(complete(4), {{0, 1}}));
        if (n == 6 && same(complete_bipartite(3, 3))) return true;
        if (n >= 5)
            return same(complete_bipartite(2, n - 2)) ||
                   same(k2_bipartite_aug(n, {{2, 3}}));
        return false;
    }
    if (k == n - 1) {
        if (n == 4) return same(cycle(4));
        if (n >= 5) return same(complete_bipartite(2, n - 2));
    }
    return false;
}

}  // namespace detail

inline SumOneCondition sum_one_classify(const Graph& g, int k) {
    const int n = g.order();
    if (k < 3 || k > n) throw std::invalid_argument("k must satisfy 3 <= k <= n");
    if (n >= 5 && is_connected(g)) {
        if (class_membership(g, 1) || class_membership(g, 2)) return SumOneCondition::cond1;
        if (edge_connectivity(g) == 2) {
            for (int v1 = 0; v1 < n; ++v1)
                if (detail::class3_with_dominator(g, v1) &&
                    detail::has_small_tree_component_without(g, v1, k))
                    return SumOneCondition::cond2;
        }
    }
    if (detail::in_sporadic_list(g, k)) return SumOneCondition::cond3;
    return SumOneCondition::none;
}

}  // namespace gecon
