#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>

#include "gecon/graph.hpp"
#include "gecon/maxflow.hpp"

namespace gecon {

inline constexpr int kDefaultLambdaCap = 12;

/// Terminal set S, 2 <= |S| <= n.
struct TerminalSet {
    std::uint64_t mask = 0;

    static TerminalSet from_mask(std::uint64_t m) { return TerminalSet{m}; }
    static TerminalSet from_vertices(const std::vector<int>& vs) {
        TerminalSet s;
        for (int v : vs) s.mask |= bit(v);
        return s;
    }
    std::vector<int> vertices() const { return mask_to_vertices(mask); }
    int size() const { return std::popcount(mask); }
    bool contains(int v) const { return (mask >> v) & 1; }

    friend bool operator==(const TerminalSet&, const TerminalSet&) = default;
};

struct SteinerTree {
    EdgeList edges;
};

struct TreePacking {
    TerminalSet terminals;
    std::vector<SteinerTree> trees;
};

enum class PackingFault { none, not_a_tree, missing_terminal, edge_not_in_graph, overlap };

struct VerifyResult {
    bool ok = false;
    PackingFault fault = PackingFault::none;
    int tree_index = -1;  // offending tree, -1 when ok or for cross-tree overlap of the pair's second tree
};

inline const char* to_string(PackingFault f) {
    switch (f) {
        case PackingFault::none: return "ok";
        case PackingFault::not_a_tree: return "not-a-tree";
        case PackingFault::missing_terminal: return "missing-terminal";
        case PackingFault::edge_not_in_graph: return "edge-not-in-graph";
        case PackingFault::overlap: return "overlap";
    }
    return "?";
}

/// Checks a claimed packing against its definition: every tree is a tree
/// subgraph of g containing all terminals, and trees are pairwise
/// edge-disjoint. Independent of how the packing was produced.
inline VerifyResult verify_packing(const Graph& g, const TreePacking& p) {
    std::uint64_t seen_by_u[kMaxVertices] = {};
    for (int i = 0; i < static_cast<int>(p.trees.size()); ++i) {
        const SteinerTree& tree = p.trees[i];
        std::uint64_t verts = 0;
        for (const Edge& e : tree.edges) {
            if (e.v >= g.order() || !g.has_edge(e.u, e.v))
                return {false, PackingFault::edge_not_in_graph, i};
            if ((seen_by_u[e.u] >> e.v) & 1) return {false, PackingFault::overlap, i};
            verts |= bit(e.u) | bit(e.v);
        }
        // acyclic + connected: |V| == |E| + 1 and one BFS sweep covers V
        const int nv = std::popcount(verts);
        if (tree.edges.empty() || nv != static_cast<int>(tree.edges.size()) + 1)
            return {false, PackingFault::not_a_tree, i};
        Graph tg(g.order(), tree.edges);
        if (component_mask(tg, std::countr_zero(verts)) != verts)
            return {false, PackingFault::not_a_tree, i};
        if ((p.terminals.mask & ~verts) != 0) return {false, PackingFault::missing_terminal, i};
        for (const Edge& e : tree.edges) seen_by_u[e.u] |= bit(e.v);
    }
    return {true, PackingFault::none, -1};
}

namespace detail {

// Capacity argument on the terminal-incident edge pools: with a edges inside
// S and b edges having exactly one endpoint in S, a minimal S-tree either
// lies inside S (k-1 inside edges) or touches at least k pool edges, so at
// most max_p [ p + (a + b - p(k-1))/k ] trees fit.
inline int pool_capacity_bound(int a, int b, int k) {
    int best = 0;
    for (int p = 0; p * (k - 1) <= a; ++p)
        best = std::max(best, p + (a + b - p * (k - 1)) / k);
    return best;
}

// Exhaustive search for t pairwise edge-disjoint minimal S-trees. Trees are
// grown one slot at a time; within a slot the enumeration is the classic
// binary include/exclude over frontier edges from the lowest terminal, so
// every minimal tree on the allowed edges appears exactly once. Slot i+1 may
// only use edges with index above slot i's minimum edge, which breaks the
// permutation symmetry between trees of a packing.
class PackingSearch {
public:
    PackingSearch(const Graph& g, std::uint64_t terminals, int target)
        : g_(g),
          n_(g.order()),
          terminals_(terminals),
          k_(std::popcount(terminals)),
          t_(target),
          edges_(g.edges()),
          m_(static_cast<int>(edges_.size())),
          used_(m_, 0) {
        s0_ = std::countr_zero(terminals_);
        avail_count_ = m_;
        avail_deg_.assign(n_, 0);
        for (int e = 0; e < m_; ++e) {
            avail_deg_[edges_[e].u]++;
            avail_deg_[edges_[e].v]++;
            const int touch = touches(e);
            avail_inside_ += touch == 2;
            avail_touch_ += touch >= 1;
        }
        result_.assign(t_, {});
    }

    std::optional<std::vector<EdgeList>> run() {
        if (!pack(0, -1)) return std::nullopt;
        std::vector<EdgeList> trees;
        for (const std::vector<int>& ids : result_) {
            EdgeList tree;
            for (int e : ids) tree.push_back(edges_[e]);
            std::sort(tree.begin(), tree.end());
            trees.push_back(std::move(tree));
        }
        return trees;
    }

private:
    int touches(int e) const {
        return static_cast<int>(terminals_ >> edges_[e].u & 1) +
               static_cast<int>(terminals_ >> edges_[e].v & 1);
    }

    bool pack(int slot, int min_edge_bound) {
        if (slot == t_) return true;
        const int need = t_ - slot;
        if (avail_count_ < need * (k_ - 1)) return false;
        for (std::uint64_t rest = terminals_; rest;) {
            int s = std::countr_zero(rest);
            rest &= rest - 1;
            if (avail_deg_[s] < need) return false;
        }
        if (pool_capacity_bound(avail_inside_, avail_touch_ - avail_inside_, k_) < need)
            return false;
        if (slot > 0 && residual_connectivity_below(need)) return false;

        std::vector<int> tree;
        std::vector<char> banned(m_, 0);
        std::array<std::int8_t, kMaxVertices> tree_deg{};
        return grow(slot, min_edge_bound, bit(s0_), tree, banned, tree_deg);
    }

    // Pairwise local connectivity of the remaining graph, checked through a
    // fixed terminal: min over pairs equals min over (s0, v) pairs.
    bool residual_connectivity_below(int need) {
        EdgeList avail;
        avail.reserve(avail_count_);
        for (int e = 0; e < m_; ++e)
            if (!used_[e]) avail.push_back(edges_[e]);
        for (std::uint64_t rest = terminals_ & ~bit(s0_); rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            detail::UnitFlowNetwork net(n_, avail);
            if (net.max_flow(s0_, v, need) < need) return true;
        }
        return false;
    }

    bool grow(int slot, int min_edge_bound, std::uint64_t comp, std::vector<int>& tree,
              std::vector<char>& banned, std::array<std::int8_t, kMaxVertices>& tree_deg) {
        if ((terminals_ & ~comp) == 0 && minimal(comp, tree_deg)) {
            int tree_min = tree[0];
            for (int e : tree) tree_min = std::min(tree_min, e);
            result_[slot] = tree;
            std::sort(result_[slot].begin(), result_[slot].end());
            return pack(slot + 1, tree_min);
        }

        const int e = next_frontier_edge(comp, min_edge_bound, banned);
        if (e < 0) return false;
        const bool u_in = (comp >> edges_[e].u) & 1;
        const int inner = u_in ? edges_[e].u : edges_[e].v;
        const int outer = u_in ? edges_[e].v : edges_[e].u;

        // include e
        take(e);
        tree.push_back(e);
        tree_deg[inner]++;
        tree_deg[outer]++;
        bool viable = (terminals_ >> outer & 1) || has_exit(outer, comp | bit(outer), min_edge_bound, banned);
        if (viable && grow(slot, min_edge_bound, comp | bit(outer), tree, banned, tree_deg))
            return true;
        tree_deg[inner]--;
        tree_deg[outer]--;
        tree.pop_back();
        release(e);

        // exclude e
        banned[e] = 1;
        bool ok = frontier_still_viable(comp, min_edge_bound, banned, tree_deg) &&
                  grow(slot, min_edge_bound, comp, tree, banned, tree_deg);
        banned[e] = 0;
        return ok;
    }

    bool minimal(std::uint64_t comp, const std::array<std::int8_t, kMaxVertices>& tree_deg) const {
        for (std::uint64_t rest = comp & ~terminals_; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (tree_deg[v] == 1) return false;
        }
        return true;
    }

    int next_frontier_edge(std::uint64_t comp, int min_edge_bound,
                           const std::vector<char>& banned) const {
        for (int e = min_edge_bound + 1; e < m_; ++e) {
            if (used_[e] || banned[e]) continue;
            const bool u_in = (comp >> edges_[e].u) & 1;
            const bool v_in = (comp >> edges_[e].v) & 1;
            if (u_in != v_in) return e;
        }
        return -1;
    }

    // v just joined comp as a non-terminal leaf; it needs some free edge out
    // of comp to ever become internal.
    bool has_exit(int v, std::uint64_t comp, int min_edge_bound,
                  const std::vector<char>& banned) const {
        for (int e = min_edge_bound + 1; e < m_; ++e) {
            if (used_[e] || banned[e]) continue;
            if (edges_[e].u != v && edges_[e].v != v) continue;
            const int other = edges_[e].u == v ? edges_[e].v : edges_[e].u;
            if (!((comp >> other) & 1)) return true;
        }
        return false;
    }

    // After banning an edge: all missing terminals must stay reachable from
    // comp on allowed edges, and comp's non-terminal leaves must keep an exit.
    bool frontier_still_viable(std::uint64_t comp, int min_edge_bound,
                               const std::vector<char>& banned,
                               const std::array<std::int8_t, kMaxVertices>& tree_deg) const {
        std::uint64_t reach = comp;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int e = min_edge_bound + 1; e < m_; ++e) {
                if (used_[e] || banned[e]) continue;
                const bool u_in = (reach >> edges_[e].u) & 1;
                const bool v_in = (reach >> edges_[e].v) & 1;
                if (u_in == v_in) continue;
                reach |= bit(u_in ? edges_[e].v : edges_[e].u);
                grew = true;
            }
        }
        if ((terminals_ & ~reach) != 0) return false;
        for (std::uint64_t rest = comp & ~terminals_; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (tree_deg[v] == 1 && !has_exit(v, comp, min_edge_bound, banned)) return false;
        }
        return true;
    }

    void take(int e) {
        used_[e] = 1;
        avail_count_--;
        avail_deg_[edges_[e].u]--;
        avail_deg_[edges_[e].v]--;
        const int touch = touches(e);
        avail_inside_ -= touch == 2;
        avail_touch_ -= touch >= 1;
    }

    void release(int e) {
        used_[e] = 0;
        avail_count_++;
        avail_deg_[edges_[e].u]++;
        avail_deg_[edges_[e].v]++;
        const int touch = touches(e);
        avail_inside_ += touch == 2;
        avail_touch_ += touch >= 1;
    }

    const Graph& g_;
    int n_;
    std::uint64_t terminals_;
    int k_;
    int t_;
    std::vector<Edge> edges_;
    int m_;
    int s0_;
    std::vector<char> used_;
    int avail_count_ = 0;
    int avail_inside_ = 0;
    int avail_touch_ = 0;
    std::vector<int> avail_deg_;
    std::vector<std::vector<int>> result_;
};

inline void check_terminals(const Graph& g, const TerminalSet& s) {
    if (s.mask == 0 || (s.mask & ~all_vertices_mask(g.order())) != 0)
        throw std::invalid_argument("terminal set outside vertex range");
    if (s.size() < 2) throw std::invalid_argument("terminal set needs at least two vertices");
}

}  // namespace detail

/// Exact: returns a packing of t pairwise edge-disjoint S-trees when one
/// exists, nullopt when provably none does.
inline std::optional<TreePacking> pack_trees(const Graph& g, const TerminalSet& s, int target) {
    detail::check_terminals(g, s);
    if (target < 1) throw std::invalid_argument("target tree count must be positive");
    detail::PackingSearch search(g, s.mask, target);
    auto trees = search.run();
    if (!trees) return std::nullopt;
    TreePacking p;
    p.terminals = s;
    for (EdgeList& t : *trees) p.trees.push_back(SteinerTree{std::move(t)});
    return p;
}

struct LocalLambda {
    int value = 0;
    TreePacking certificate;
};

/// lambda(S): the maximum number of pairwise edge-disjoint S-trees, with a
/// certificate for the maximum. Probes downward from the cheap upper bounds
/// (pairwise connectivity through a fixed terminal, edge count, terminal
/// incidence pools), so on tight instances the first probe succeeds.
inline LocalLambda steiner_local_lambda(const Graph& g, const TerminalSet& s) {
    detail::check_terminals(g, s);
    LocalLambda out;
    out.certificate.terminals = s;

    const std::vector<int> terms = s.vertices();
    const int k = static_cast<int>(terms.size());
    int upper = g.size() / (k - 1);
    int a = 0, b = 0;
    for (const Edge& e : g.edges()) {
        const int touch = static_cast<int>(s.contains(e.u)) + static_cast<int>(s.contains(e.v));
        a += touch == 2;
        b += touch == 1;
    }
    upper = std::min(upper, detail::pool_capacity_bound(a, b, k));
    for (std::size_t i = 1; i < terms.size() && upper > 0; ++i)
        upper = std::min(upper, local_edge_connectivity(g, terms[0], terms[i], upper));

    for (int t = upper; t >= 1; --t) {
        if (auto packing = pack_trees(g, s, t)) {
            out.value = t;
            out.certificate = std::move(*packing);
            return out;
        }
    }
    return out;
}

struct LambdaResult {
    int value = 0;
    TerminalSet witness;       // lexicographically smallest minimizing S
    TreePacking certificate;   // optimal packing on the witness
};

/// Generalized k-edge-connectivity: exact minimum of lambda(S) over all
/// k-subsets. k=2 routes through max-flow; disconnected graphs give 0 with
/// the first component-straddling witness.
inline LambdaResult lambda_k(const Graph& g, int k, int max_n = kDefaultLambdaCap) {
    const int n = g.order();
    if (k < 2 || k > n) throw std::invalid_argument("k must satisfy 2 <= k <= n");
    if (n > max_n) throw UnsupportedSizeError("lambda_k cap exceeded");

    LambdaResult res;
    if (!is_connected(g)) {
        const std::uint64_t comp0 = component_mask(g, 0);
        for_each_subset(n, k, [&](std::uint64_t mask) {
            if ((mask & comp0) != 0 && (mask & ~comp0) != 0) {
                res.witness = TerminalSet::from_mask(mask);
                return false;
            }
            return true;
        });
        res.certificate.terminals = res.witness;
        return res;
    }

    if (k == 2) {
        int best = std::numeric_limits<int>::max();
        int bu = 0, bv = 1;
        for (int u = 0; u < n && best > 0; ++u)
            for (int v = u + 1; v < n && best > 0; ++v) {
                const int c = local_edge_connectivity(g, u, v, best);
                if (c < best) {
                    best = c;
                    bu = u;
                    bv = v;
                }
            }
        res.value = best;
        res.witness = TerminalSet::from_vertices({bu, bv});
        res.certificate.terminals = res.witness;
        for (const std::vector<int>& path : edge_disjoint_paths(g, bu, bv)) {
            SteinerTree t;
            for (std::size_t i = 0; i + 1 < path.size(); ++i) t.edges.emplace_back(path[i], path[i + 1]);
            std::sort(t.edges.begin(), t.edges.end());
            res.certificate.trees.push_back(std::move(t));
        }
        return res;
    }

    bool have = false;
    for_each_subset(n, k, [&](std::uint64_t mask) {
        const TerminalSet s = TerminalSet::from_mask(mask);
        if (!have) {
            LocalLambda ll = steiner_local_lambda(g, s);
            res.value = ll.value;
            res.witness = s;
            res.certificate = std::move(ll.certificate);
            have = true;
            return res.value > 0;
        }
        if (res.value == 0) return false;
        // keep the running minimum: a packing at the current best means this
        // S cannot lower it
        if (pack_trees(g, s, res.value)) return true;
        for (int t = res.value - 1; t >= 1; --t) {
            if (auto packing = pack_trees(g, s, t)) {
                res.value = t;
                res.witness = s;
                res.certificate = std::move(*packing);
                return true;
            }
        }
        res.value = 0;
        res.witness = s;
        res.certificate = TreePacking{s, {}};
        return false;
    });
    return res;
}

/// Spanning-tree packing number, lambda_n. 0 for disconnected graphs and for
/// n <= 1 (no two-block partition exists either, so the partition oracle
/// agrees there).
inline int stp_number(const Graph& g, int max_n = kDefaultLambdaCap) {
    if (g.order() <= 1) return 0;
    if (!is_connected(g)) return 0;
    return lambda_k(g, g.order(), max_n).value;
}

/// Guaranteed spanning-tree packing of K_n minus m edges, for m <= n/3:
/// min(n-2m-1, floor(n/2 - 2m/(n-1))).
inline int stp_lower_bound_near_complete(int n, int m) {
    if (m < 0 || m > n / 3) throw std::invalid_argument("edge deletion count out of range");
    const int by_cut = n - 2 * m - 1;
    const int by_density = (n * (n - 1) - 4 * m) / (2 * (n - 1));
    return std::min(by_cut, by_density);
}

}  // namespace gecon
