#pragma once

#include <optional>
#include <string>

#include "gecon/graph.hpp"
#include "gecon/maxflow.hpp"

namespace gecon {

inline Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    EdgeList edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

/// K_{a,b} with parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite needs a,b >= 1");
    EdgeList edges;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) edges.emplace_back(u, v);
    return Graph(a + b, edges);
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    EdgeList edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    EdgeList edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

/// Harary graph H_{n,d}: d-edge-connected with minimum degree d. Even d joins
/// i to i+-1..i+-d/2 around the circle; odd d with even n adds the diameters;
/// odd d with odd n takes H_{n,d-1} plus the edges i -- i+(n-1)/2 for
/// 0 <= i <= (n-1)/2 (one vertex ends up with degree d+1). Several odd-odd
/// variants exist in the literature; this is the classical one.
inline Graph harary(int n, int d) {
    if (d < 2 || d >= n) throw std::invalid_argument("harary needs 2 <= d < n");
    EdgeList edges;
    for (int j = 1; j <= d / 2; ++j)
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + j) % n);
    if (d % 2 == 1) {
        if (n % 2 == 0) {
            for (int i = 0; i < n / 2; ++i) edges.emplace_back(i, i + n / 2);
        } else {
            for (int i = 0; i <= (n - 1) / 2; ++i) edges.emplace_back(i, (i + (n - 1) / 2) % n);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, edges);
}

/// K_{2,n-2} (parts {0,1} and {2..n-1}) plus augmentation edges inside the
/// large part.
inline Graph k2_bipartite_aug(int n, const EdgeList& aug) {
    if (n < 5) throw std::invalid_argument("k2_bipartite_aug needs n >= 5");
    EdgeList edges;
    for (int u = 0; u < 2; ++u)
        for (int v = 2; v < n; ++v) edges.emplace_back(u, v);
    for (const Edge& e : aug) {
        if (e.u < 2 || e.v >= n)
            throw std::invalid_argument("augmentation edge must lie inside the large part");
        edges.push_back(e);
    }
    return Graph(n, edges);
}

/// Order-(4r+1) construction pairing a near-balanced complete bipartite graph
/// with its complement so both pack exactly r spanning trees. The r trees are
/// explicit Hamiltonian paths of K_{2r,2r+1}: tree i links the large-part
/// vertices in circular order 2i, 2i+1, ... through the small part. The 2r
/// leftover edges are returned alongside.
struct Example2 {
    Graph graph;           // K_{2r,2r+1} minus the leftover edges
    EdgeList deleted;      // the 2r leftover edges
    std::vector<EdgeList> trees;  // r edge-disjoint spanning trees of graph
};

inline Example2 example2_graph(int r) {
    if (r < 1) throw std::invalid_argument("example2 needs r >= 1");
    const int small = 2 * r, large = 2 * r + 1;
    auto a = [&](int j) { return j; };            // small part: 0..2r-1
    auto b = [&](int i) { return small + i % large; };  // large part: 2r..4r

    Example2 out;
    EdgeList all;
    for (int i = 0; i < r; ++i) {
        EdgeList tree;
        for (int j = 0; j < small; ++j) {
            tree.emplace_back(a(j), b(j + 2 * i));
            tree.emplace_back(a(j), b(j + 2 * i + 1));
        }
        std::sort(tree.begin(), tree.end());
        all.insert(all.end(), tree.begin(), tree.end());
        out.trees.push_back(std::move(tree));
    }
    out.graph = Graph(4 * r + 1, all);
    for (int j = 0; j < small; ++j) out.deleted.emplace_back(a(j), b(j + 2 * r));
    std::sort(out.deleted.begin(), out.deleted.end());
    return out;
}

/// Membership in the four order-n classes behind the sum-equals-one
/// characterization, reconstructed from their degree/adjacency constraints:
///   1: a pendant vertex attached to a dominating vertex (lambda = 1);
///   2: a dominating vertex plus an adjacent degree-2 pair joined only to
///      each other and the dominator (lambda = 2);
///   3: a degree-2 vertex whose two neighbors are adjacent, one of them
///      dominating (lambda = 2);
///   4: a degree-2 vertex with non-adjacent neighbors that dominate the rest
///      of the graph jointly (lambda = 2).
/// Returns the distinguished vertex: the dominator for classes 1-3, the
/// degree-2 vertex for class 4.
inline std::optional<int> class_membership(const Graph& g, int class_id,
                                           std::optional<int> k = std::nullopt) {
    (void)k;  // the classes do not depend on k
    const int n = g.order();
    if (class_id < 1 || class_id > 4) throw std::invalid_argument("class id must be 1..4");
    if (n < 5) return std::nullopt;
    if (!is_connected(g)) return std::nullopt;

    switch (class_id) {
        case 1: {
            if (edge_connectivity(g) != 1) return std::nullopt;
            for (int v = 0; v < n; ++v) {
                if (g.degree(v) != n - 1) continue;
                for (int u = 0; u < n; ++u)
                    if (u != v && g.degree(u) == 1 && g.has_edge(u, v)) return v;
            }
            return std::nullopt;
        }
        case 2: {
            if (edge_connectivity(g) != 2) return std::nullopt;
            for (int u1 = 0; u1 < n; ++u1) {
                if (g.degree(u1) != n - 1) continue;
                for (int v1 = 0; v1 < n; ++v1) {
                    if (v1 == u1 || g.degree(v1) != 2) continue;
                    for (int v2 = v1 + 1; v2 < n; ++v2) {
                        if (v2 == u1 || g.degree(v2) != 2) continue;
                        if (g.has_edge(v1, v2) && g.has_edge(v1, u1) && g.has_edge(v2, u1))
                            return u1;
                    }
                }
            }
            return std::nullopt;
        }
        case 3: {
            if (edge_connectivity(g) != 2) return std::nullopt;
            for (int u1 = 0; u1 < n; ++u1) {
                if (g.degree(u1) != 2) continue;
                const std::vector<int> nb = mask_to_vertices(g.neighbors(u1));
                if (!g.has_edge(nb[0], nb[1])) continue;
                if (g.degree(nb[0]) == n - 1) return nb[0];
                if (g.degree(nb[1]) == n - 1) return nb[1];
            }
            return std::nullopt;
        }
        case 4: {
            if (edge_connectivity(g) != 2) return std::nullopt;
            for (int u1 = 0; u1 < n; ++u1) {
                if (g.degree(u1) != 2) continue;
                const std::vector<int> nb = mask_to_vertices(g.neighbors(u1));
                if (g.has_edge(nb[0], nb[1])) continue;
                bool joint = true;
                for (int w = 0; w < n && joint; ++w) {
                    if (w == u1 || w == nb[0] || w == nb[1]) continue;
                    joint = g.has_edge(w, nb[0]) && g.has_edge(w, nb[1]);
                }
                if (joint) return u1;
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

/// Canonical small member of each class, used by the generator CLI.
inline Graph class_representative(int class_id, int n) {
    if (n < 5) throw std::invalid_argument("class representatives need n >= 5");
    switch (class_id) {
        case 1: {
            // K_{n-1} with a pendant attached: vertex 0 pendant on dominator 1
            EdgeList edges{{0, 1}};
            for (int u = 1; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            return Graph(n, edges);
        }
        case 2: {
            // dominator 0; degree-2 pair {1,2}; the rest a clique
            EdgeList edges{{1, 2}};
            for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
            for (int u = 3; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            return Graph(n, edges);
        }
        case 3: {
            // dominator 0; vertex 1 of degree 2 adjacent to 0 and 2; 2..n-1 a clique
            EdgeList edges;
            for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
            edges.emplace_back(1, 2);
            for (int u = 2; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            return Graph(n, edges);
        }
        case 4:
            return k2_bipartite_aug(n, {});
        default:
            throw std::invalid_argument("class id must be 1..4");
    }
}

/// Graph family selector for the CLI and harness configs, e.g.
/// "harary,n=8,d=4" or "k2_bipartite_aug,n=6,aug=2-3:4-5".
struct FamilySpec {
    std::string family;
    int n = 0, a = 0, b = 0, d = 0, r = 0;
    EdgeList aug;
};

inline FamilySpec parse_family_spec(const std::string& text) {
    FamilySpec spec;
    std::size_t start = 0;
    bool first = true;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        std::string token = text.substr(start, end - start);
        start = end + 1;
        if (token.empty()) {
            if (start > text.size()) break;
            continue;
        }
        const std::size_t eq = token.find('=');
        if (first && eq == std::string::npos) {
            spec.family = token;
            first = false;
            continue;
        }
        first = false;
        if (eq == std::string::npos) throw std::invalid_argument("family spec token needs key=value: " + token);
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "family") {
            spec.family = value;
        } else if (key == "n" || key == "a" || key == "b" || key == "d" || key == "r") {
            const int parsed = std::stoi(value);
            if (key == "n") spec.n = parsed;
            if (key == "a") spec.a = parsed;
            if (key == "b") spec.b = parsed;
            if (key == "d") spec.d = parsed;
            if (key == "r") spec.r = parsed;
        } else if (key == "aug") {
            std::size_t p = 0;
            while (p < value.size()) {
                std::size_t q = value.find(':', p);
                if (q == std::string::npos) q = value.size();
                const std::string pair = value.substr(p, q - p);
                const std::size_t dash = pair.find('-');
                if (dash == std::string::npos)
                    throw std::invalid_argument("aug edge needs the form u-v: " + pair);
                spec.aug.emplace_back(std::stoi(pair.substr(0, dash)), std::stoi(pair.substr(dash + 1)));
                p = q + 1;
            }
        } else {
            throw std::invalid_argument("unknown family spec key: " + key);
        }
        if (end == text.size()) break;
    }
    if (spec.family.empty()) throw std::invalid_argument("family spec needs a family tag");
    return spec;
}

inline Graph build_family(const FamilySpec& spec) {
    if (spec.family == "complete") return complete(spec.n);
    if (spec.family == "complete_bipartite") return complete_bipartite(spec.a, spec.b);
    if (spec.family == "cycle") return cycle(spec.n);
    if (spec.family == "path") return path_graph(spec.n);
    if (spec.family == "harary") return harary(spec.n, spec.d);
    if (spec.family == "k2_bipartite_aug") return k2_bipartite_aug(spec.n, spec.aug);
    if (spec.family == "example2") return example2_graph(spec.r).graph;
    if (spec.family == "class1") return class_representative(1, spec.n);
    if (spec.family == "class2") return class_representative(2, spec.n);
    if (spec.family == "class3") return class_representative(3, spec.n);
    if (spec.family == "class4") return class_representative(4, spec.n);
    throw std::invalid_argument("unknown family: " + spec.family);
}

}  // namespace gecon
