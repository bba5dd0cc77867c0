#pragma once

#include <limits>
#include <queue>

#include "gecon/graph.hpp"

namespace gecon {

namespace detail {

// Unit-capacity residual network over an undirected edge list. Each
// undirected edge becomes a pair of arcs with one unit each way, which is
// the standard encoding for edge-disjoint path counting.
class UnitFlowNetwork {
public:
    UnitFlowNetwork(int n, const EdgeList& edges) : n_(n), head_(n, -1) {
        arcs_.reserve(edges.size() * 2);
        for (const Edge& e : edges) add_pair(e.u, e.v);
    }

    // Max s-t flow by BFS augmentation, stopping once `limit` is reached.
    int max_flow(int s, int t, int limit = std::numeric_limits<int>::max()) {
        int flow = 0;
        while (flow < limit && augment(s, t)) ++flow;
        return flow;
    }

    // After max_flow, peel the s-t flow into edge-disjoint paths.
    std::vector<std::vector<int>> decompose_paths(int s, int t) {
        std::vector<std::vector<int>> paths;
        while (true) {
            std::vector<int> path{s};
            int v = s;
            while (v != t) {
                int chosen = -1;
                for (int a = head_[v]; a != -1; a = arcs_[a].next) {
                    if (arcs_[a].flow > 0) {
                        chosen = a;
                        break;
                    }
                }
                if (chosen == -1) break;
                arcs_[chosen].flow -= 1;
                v = arcs_[chosen].to;
                path.push_back(v);
            }
            if (v != t) return paths;
            paths.push_back(std::move(path));
        }
    }

private:
    struct Arc {
        int to;
        int next;
        int cap;
        int flow;
    };

    void add_pair(int u, int v) {
        arcs_.push_back({v, head_[u], 1, 0});
        head_[u] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({u, head_[v], 1, 0});
        head_[v] = static_cast<int>(arcs_.size()) - 1;
    }

    bool augment(int s, int t) {
        std::vector<int> via(n_, -1);
        std::queue<int> q;
        q.push(s);
        via[s] = -2;
        while (!q.empty() && via[t] == -1) {
            int v = q.front();
            q.pop();
            for (int a = head_[v]; a != -1; a = arcs_[a].next) {
                // residual = cap - flow on this arc, plus flow on the twin
                if (arcs_[a].cap - arcs_[a].flow + arcs_[a ^ 1].flow > 0 && via[arcs_[a].to] == -1) {
                    via[arcs_[a].to] = a;
                    q.push(arcs_[a].to);
                }
            }
        }
        if (via[t] == -1) return false;
        for (int v = t; v != s;) {
            int a = via[v];
            if (arcs_[a].cap - arcs_[a].flow > 0)
                arcs_[a].flow += 1;
            else
                arcs_[a ^ 1].flow -= 1;
            v = arcs_[a ^ 1].to;
        }
        return true;
    }

    int n_;
    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

}  // namespace detail

/// Maximum number of pairwise edge-disjoint u-v paths (Menger).
inline int local_edge_connectivity(const Graph& g, int u, int v,
                                   int limit = std::numeric_limits<int>::max()) {
    if (u == v) throw std::invalid_argument("local edge connectivity needs distinct vertices");
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw std::invalid_argument("vertex out of range");
    detail::UnitFlowNetwork net(g.order(), g.edges());
    return net.max_flow(u, v, limit);
}

/// Edge-disjoint u-v paths witnessing the local edge connectivity, each path
/// as a vertex sequence from u to v.
inline std::vector<std::vector<int>> edge_disjoint_paths(const Graph& g, int u, int v) {
    detail::UnitFlowNetwork net(g.order(), g.edges());
    net.max_flow(u, v);
    return net.decompose_paths(u, v);
}

/// Global edge connectivity; 0 for disconnected graphs and for n <= 1.
/// n-1 flow computations from a fixed root suffice for the global minimum.
inline int edge_connectivity(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    int best = std::numeric_limits<int>::max();
    const EdgeList edges = g.edges();
    for (int v = 1; v < n; ++v) {
        detail::UnitFlowNetwork net(n, edges);
        best = std::min(best, net.max_flow(0, v, best));
    }
    return best;
}

}  // namespace gecon
