#pragma once

#include <string>
#include <vector>

#include "gecon/graph.hpp"
#include "gecon/graph6.hpp"

namespace gecon {

inline constexpr int kDefaultCanonicalCap = 10;

struct CanonicalResult {
    Graph graph;                 // canonical representative, isomorphic to the input
    std::string key;             // graph6 of the representative
    std::vector<int> placement;  // placement[new_label] = old vertex
};

namespace detail {

// Exhaustive best-labeling search. The code of a labeling is the adjacency
// upper triangle read in column order, packed MSB-first into one word
// (n <= 10 keeps it within 45 bits); we maximize it. Branches whose partial
// code falls behind the incumbent prefix are cut, and unplaced twins
// (identical adjacency outside the pair) collapse into one branch.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
        total_bits_ = n_ * (n_ - 1) / 2;
        rows_.resize(n_);
        for (int v = 0; v < n_; ++v) rows_[v] = g.neighbors(v);
    }

    std::vector<int> run() {
        perm_.assign(n_, -1);
        best_perm_.assign(n_, -1);
        have_best_ = false;
        dfs(0, 0, 0);
        return best_perm_;
    }

private:
    void dfs(int depth, std::uint64_t code, int bits) {
        if (depth == n_) {
            if (!have_best_ || code > best_code_) {
                best_code_ = code;
                best_perm_ = perm_;
                have_best_ = true;
            }
            return;
        }
        std::uint64_t unused = all_vertices_mask(n_);
        for (int q = 0; q < depth; ++q) unused &= ~bit(perm_[q]);

        // candidate words, greedily largest first
        std::vector<std::pair<std::uint64_t, int>> cands;
        for (std::uint64_t rest = unused; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (has_smaller_twin(unused, v)) continue;
            std::uint64_t w = 0;
            for (int q = 0; q < depth; ++q) w = (w << 1) | ((rows_[v] >> perm_[q]) & 1);
            cands.emplace_back(w, v);
        }
        std::sort(cands.begin(), cands.end(),
                  [](const auto& a, const auto& b) {
                      return a.first != b.first ? a.first > b.first : a.second < b.second;
                  });

        for (const auto& [w, v] : cands) {
            const std::uint64_t next_code = (code << depth) | w;
            const int next_bits = bits + depth;
            if (have_best_ && next_code < (best_code_ >> (total_bits_ - next_bits))) continue;
            perm_[depth] = v;
            dfs(depth + 1, next_code, next_bits);
            perm_[depth] = -1;
        }
    }

    bool has_smaller_twin(std::uint64_t unused, int v) const {
        for (std::uint64_t rest = unused & (bit(v) - 1); rest;) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            const std::uint64_t off = ~(bit(u) | bit(v));
            if ((rows_[u] & off) == (rows_[v] & off)) return true;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    int total_bits_;
    std::vector<std::uint64_t> rows_;
    std::vector<int> perm_;
    std::vector<int> best_perm_;
    std::uint64_t best_code_ = 0;
    bool have_best_ = false;
};

}  // namespace detail

/// Canonical form under isomorphism: isomorphic inputs yield identical
/// outputs. Exact search, intended for n <= max_n.
inline CanonicalResult canonical_form(const Graph& g, int max_n = kDefaultCanonicalCap) {
    const int n = g.order();
    if (n > max_n) throw UnsupportedSizeError("canonical_form cap exceeded");
    CanonicalResult res;
    if (n <= 1) {
        res.graph = g;
        res.placement.assign(n, 0);
        res.key = encode_graph6(g);
        return res;
    }
    detail::CanonicalSearch search(g);
    res.placement = search.run();
    std::vector<int> pos(n);
    for (int p = 0; p < n; ++p) pos[res.placement[p]] = p;
    EdgeList edges;
    for (const Edge& e : g.edges()) edges.emplace_back(pos[e.u], pos[e.v]);
    res.graph = Graph(n, edges);
    res.key = encode_graph6(res.graph);
    return res;
}

inline std::string canonical_key(const Graph& g, int max_n = kDefaultCanonicalCap) {
    return canonical_form(g, max_n).key;
}

inline bool isomorphic(const Graph& a, const Graph& b, int max_n = kDefaultCanonicalCap) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_key(a, max_n) == canonical_key(b, max_n);
}

}  // namespace gecon
