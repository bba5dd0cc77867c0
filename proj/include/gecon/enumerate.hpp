#pragma once

#include <map>
#include <string>
#include <vector>

#include "gecon/canonical.hpp"
#include "gecon/graph.hpp"

namespace gecon {

inline constexpr int kDefaultEnumerateCap = 8;

/// All graphs on n vertices, one canonical representative per isomorphism
/// class, sorted by (edge count, canonical key). Built by extending the
/// (n-1)-vertex classes with every possible neighborhood for a new vertex,
/// which reaches every class since each graph restricts to its first n-1
/// vertices.
inline std::vector<Graph> enumerate_graphs(int n, bool connected_only = false,
                                           int cap = kDefaultEnumerateCap) {
    if (n < 1 || n > cap) throw UnsupportedSizeError("enumerate_graphs cap exceeded");

    std::vector<Graph> level{Graph(1)};
    for (int order = 2; order <= n; ++order) {
        std::map<std::string, Graph> seen;
        for (const Graph& base : level) {
            const EdgeList base_edges = base.edges();
            const int new_vertex = order - 1;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << new_vertex); ++mask) {
                EdgeList edges = base_edges;
                for (std::uint64_t rest = mask; rest;) {
                    int u = std::countr_zero(rest);
                    rest &= rest - 1;
                    edges.emplace_back(u, new_vertex);
                }
                CanonicalResult canon = canonical_form(Graph(order, edges));
                seen.emplace(std::move(canon.key), std::move(canon.graph));
            }
        }
        level.clear();
        level.reserve(seen.size());
        for (auto& [key, graph] : seen) level.push_back(std::move(graph));
    }

    if (connected_only) {
        std::vector<Graph> kept;
        for (const Graph& g : level)
            if (is_connected(g)) kept.push_back(g);
        level = std::move(kept);
    }
    std::sort(level.begin(), level.end(), [](const Graph& a, const Graph& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return encode_graph6(a) < encode_graph6(b);
    });
    return level;
}

}  // namespace gecon
