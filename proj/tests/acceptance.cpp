// Acceptance suite: runs every exit criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <random>
#include <sstream>

#include "gecon/bounds.hpp"
#include "gecon/enumerate.hpp"
#include "gecon/generators.hpp"
#include "gecon/harness.hpp"
#include "gecon/packing.hpp"
#include "gecon/partition.hpp"

using namespace gecon;

namespace {

// Memoized lambda_k over canonical keys. Every computed certificate is
// re-checked by verify_packing, so each value that flows into a criterion is
// certificate-sound.
class Evaluator {
public:
    int lambda(const Graph& g, int k) {
        if (!is_connected(g)) return 0;
        if (g.order() == 1) return 0;
        const CanonicalResult canon = canonical_form(g);
        auto& per_k = table_[canon.key];
        if (auto it = per_k.find(k); it != per_k.end()) return it->second;
        const LambdaResult r = lambda_k(canon.graph, k);
        if (r.value > 0) {
            const VerifyResult v = verify_packing(canon.graph, r.certificate);
            if (!v.ok || static_cast<int>(r.certificate.trees.size()) != r.value)
                throw std::logic_error("unsound certificate for " + canon.key);
        }
        per_k[k] = r.value;
        return r.value;
    }

    int stp(const Graph& g) {
        if (g.order() <= 1 || !is_connected(g)) return 0;
        return lambda(g, g.order());
    }

private:
    std::map<std::string, std::map<int, int>> table_;
};

Evaluator eval;

const std::vector<Graph>& graphs_of_order(int n) {
    static std::map<int, std::vector<Graph>> memo;
    auto it = memo.find(n);
    if (it == memo.end()) it = memo.emplace(n, enumerate_graphs(n)).first;
    return it->second;
}

Graph seeded_random_graph(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    EdgeList edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1) edges.emplace_back(u, v);
    return Graph(n, edges);
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& what) {
        pass = false;
        detail << "\n    counterexample: " << what;
    }
};

// 1. lambda_k of complete graphs equals n - ceil(k/2)
Outcome criterion_complete_graphs() {
    Outcome out;
    int checked = 0;
    for (int n = 3; n <= 8; ++n)
        for (int k = 2; k <= n; ++k, ++checked) {
            const int got = eval.lambda(complete(n), k);
            if (got != n - ceil_half(k))
                out.fail("K_" + std::to_string(n) + " k=" + std::to_string(k) + " got " +
                         std::to_string(got));
        }
    out.detail << checked << " (n,k) pairs";
    return out;
}

// 2. spanning-tree packing of complete bipartite graphs
Outcome criterion_complete_bipartite() {
    Outcome out;
    int checked = 0;
    for (int a = 1; a <= 7; ++a)
        for (int b = a; a + b <= 8; ++b, ++checked) {
            const int got = eval.stp(complete_bipartite(a, b));
            const int want = a * b / (a + b - 1);
            if (got != want)
                out.fail("K_{" + std::to_string(a) + "," + std::to_string(b) + "} got " +
                         std::to_string(got) + " want " + std::to_string(want));
        }
    out.detail << checked << " (a,b) pairs";
    return out;
}

// 3. spanning-tree packing of Harary graphs vs floor(d/2)
Outcome criterion_harary() {
    Outcome out;
    int checked = 0;
    for (int n = 3; n <= 9; ++n)
        for (int d = 2; d < n; ++d, ++checked) {
            const Graph h = harary(n, d);
            const int got = eval.stp(h);
            if (got != d / 2) {
                const int oracle = nwt_partition_bound(h);
                out.fail("H_{" + std::to_string(n) + "," + std::to_string(d) + "} got " +
                         std::to_string(got) + " want " + std::to_string(d / 2) +
                         " (partition oracle " + std::to_string(oracle) + ")");
            }
        }
    out.detail << checked << " (n,d) pairs";
    return out;
}

// 4. cycle complements: lambda_3(C_9)=1, lambda_3(~C_9)=5, lambda_3(~C_10)=6
Outcome criterion_cycle_complements() {
    Outcome out;
    if (eval.lambda(cycle(9), 3) != 1) out.fail("lambda_3(C_9)");
    if (eval.lambda(complement(cycle(9)), 3) != 5) out.fail("lambda_3(~C_9)");
    if (eval.lambda(complement(cycle(10)), 3) != 6) out.fail("lambda_3(~C_10)");
    out.detail << "3 values";
    return out;
}

// 5. paired construction on n=4r+1 vertices is tight for sum and product
Outcome criterion_paired_construction() {
    Outcome out;
    for (int r = 1; r <= 2; ++r) {
        const Example2 ex = example2_graph(r);
        const int n = 4 * r + 1;
        const Graph co = complement(ex.graph);
        const int sg = eval.stp(ex.graph);
        const int sc = eval.stp(co);
        if (sg != r) out.fail("r=" + std::to_string(r) + " stp(G)=" + std::to_string(sg));
        if (sc != r) out.fail("r=" + std::to_string(r) + " stp(~G)=" + std::to_string(sc));
        if (nwt_partition_bound(ex.graph) != r || nwt_partition_bound(co) != r)
            out.fail("r=" + std::to_string(r) + " partition oracle disagrees");
        if (sg + sc != n - ceil_half(n)) out.fail("r=" + std::to_string(r) + " sum not extremal");
        if (sg * sc != r * r) out.fail("r=" + std::to_string(r) + " product not r^2");
    }
    out.detail << "r in {1,2}";
    return out;
}

// 6. the augmented-bipartite family: exact small-order connectivity values
Outcome criterion_augmented_bipartite() {
    Outcome out;
    for (int n = 6; n <= 7; ++n) {
        const std::string tag = "n=" + std::to_string(n) + " ";
        const Graph plain = k2_bipartite_aug(n, {});
        const Graph plus = k2_bipartite_aug(n, {{2, 3}});
        const Graph pp_disjoint = k2_bipartite_aug(n, {{2, 3}, {4, 5}});
        const Graph pp_adjacent = k2_bipartite_aug(n, {{2, 3}, {3, 4}});

        if (eval.lambda(pp_disjoint, n) < 2) out.fail(tag + "lambda_n(K++ disjoint) < 2");
        if (eval.lambda(pp_adjacent, n) < 2) out.fail(tag + "lambda_n(K++ adjacent) < 2");
        if (eval.lambda(plus, n - 1) < 2) out.fail(tag + "lambda_{n-1}(K+) < 2");
        if (eval.lambda(plus, n) != 1) out.fail(tag + "lambda_n(K+) != 1");
        if (eval.lambda(plain, n - 2) < 2) out.fail(tag + "lambda_{n-2}(K_{2,n-2}) < 2");
        if (eval.lambda(plain, n) != 1) out.fail(tag + "lambda_n(K_{2,n-2}) != 1");
        if (eval.lambda(plain, n - 1) != 1) out.fail(tag + "lambda_{n-1}(K_{2,n-2}) != 1");
    }
    out.detail << "n in {6,7}, both double-augmentation variants";
    return out;
}

// 7. solver, partition oracle, and lambda_n agree on every small connected graph
Outcome criterion_oracle_equivalence() {
    Outcome out;
    int checked = 0, at6 = 0;
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : graphs_of_order(n)) {
            if (!is_connected(g)) continue;
            ++checked;
            if (n == 6) ++at6;
            const int solver = stp_number(g);
            const int oracle = nwt_partition_bound(g);
            const int lam = eval.lambda(g, n);
            if (solver != oracle || solver != lam)
                out.fail(encode_graph6(g) + " solver=" + std::to_string(solver) + " partition=" +
                         std::to_string(oracle) + " lambda_n=" + std::to_string(lam));
        }
    if (at6 != 112) out.fail("expected 112 connected classes at n=6, saw " + std::to_string(at6));
    out.detail << checked << " connected graphs (112 at n=6)";
    return out;
}

// 8. deletion guarantee: K_n minus every small edge set packs at least the bound
Outcome criterion_deletion_guarantee() {
    Outcome out;
    // all edge-set shapes with at most 3 edges, up to isomorphism
    const std::vector<EdgeList> shapes[4] = {
        {{}},
        {{{0, 1}}},
        {{{0, 1}, {2, 3}}, {{0, 1}, {1, 2}}},
        {{{0, 1}, {2, 3}, {4, 5}},
         {{0, 1}, {1, 2}, {3, 4}},
         {{0, 1}, {1, 2}, {2, 3}},
         {{0, 1}, {0, 2}, {0, 3}},
         {{0, 1}, {1, 2}, {0, 2}}}};
    int checked = 0;
    for (int n = 6; n <= 9; ++n)
        for (int m = 0; m <= n / 3; ++m)
            for (const EdgeList& shape : shapes[m]) {
                ++checked;
                const Graph g = delete_edges(complete(n), shape);
                const int bound = stp_lower_bound_near_complete(n, m);
                if (bound < 1) continue;
                std::vector<int> everyone(n);
                std::iota(everyone.begin(), everyone.end(), 0);
                const auto packing = pack_trees(g, TerminalSet::from_vertices(everyone), bound);
                if (!packing || !verify_packing(g, *packing).ok)
                    out.fail("K_" + std::to_string(n) + " minus " + std::to_string(m) +
                             " edges: no packing of " + std::to_string(bound));
            }
    out.detail << checked << " deletion sets";
    return out;
}

// 9. exhaustive order/size bound audit at n in {6,7}
Outcome criterion_bound_audit() {
    Outcome out;
    long rows = 0;
    for (int n = 6; n <= 7; ++n)
        for (const Graph& g : graphs_of_order(n)) {
            const Graph co = complement(g);
            const int m = g.size();
            for (int k = 3; k <= n; ++k) {
                ++rows;
                const int a = eval.lambda(g, k), b = eval.lambda(co, k);
                const int sum = a + b, prod = a * b;
                const OrderBounds ob = order_bounds(n, k);
                const int lo = std::max(1, size_sum_lower(n, m));
                const int hi = std::min(ob.sum_upper, size_sum_upper(n, m, k));
                if (sum < lo || sum > hi)
                    out.fail(encode_graph6(g) + " k=" + std::to_string(k) + " sum=" +
                             std::to_string(sum) + " outside [" + std::to_string(lo) + "," +
                             std::to_string(hi) + "]");
                const int np = size_product_upper(n, m);
                if (4 * prod > ob.product_upper_num || prod > np)
                    out.fail(encode_graph6(g) + " k=" + std::to_string(k) + " product=" +
                             std::to_string(prod) + " above min(" +
                             std::to_string(ob.product_upper_num) + "/4, " + std::to_string(np) +
                             ")");
            }
        }
    out.detail << rows << " (graph,k) rows";
    return out;
}

// 10. sum-equals-one characterization audit at n in {5,6} plus sporadic orders
Outcome criterion_sum_one_audit() {
    Outcome out;
    long rows = 0;
    for (int n = 5; n <= 6; ++n)
        for (const Graph& g : graphs_of_order(n)) {
            const Graph co = complement(g);
            for (int k = 3; k <= n; ++k) {
                ++rows;
                const int sum = eval.lambda(g, k) + eval.lambda(co, k);
                const bool fires = sum_one_classify(g, k) != SumOneCondition::none ||
                                   sum_one_classify(co, k) != SumOneCondition::none;
                if ((sum == 1) != fires)
                    out.fail(encode_graph6(g) + " k=" + std::to_string(k) + " sum=" +
                             std::to_string(sum) + " classifier=" + (fires ? "fires" : "silent"));
            }
        }

    // sporadic orders, checked individually
    const Graph k4e = delete_edges(complete(4), {{0, 1}});
    if (eval.lambda(k4e, 3) != 2) out.fail("lambda_3(K_4-e) != 2");
    if (eval.lambda(k4e, 4) != 1) out.fail("lambda_4(K_4-e) != 1");
    struct Sporadic {
        Graph g;
        int k;
        bool expect;
    };
    const std::vector<Sporadic> sporadics = {
        {path_graph(3), 3, true}, {cycle(3), 3, true},     {cycle(4), 3, true},
        {cycle(4), 4, true},      {k4e, 4, true},          {k4e, 3, false},
        {complete(4), 3, false},  {complete(3), 3, false}, {path_graph(4), 3, false}};
    for (const Sporadic& s : sporadics) {
        ++rows;
        const int sum = eval.lambda(s.g, s.k) + eval.lambda(complement(s.g), s.k);
        const bool fires = sum_one_classify(s.g, s.k) != SumOneCondition::none ||
                           sum_one_classify(complement(s.g), s.k) != SumOneCondition::none;
        if ((sum == 1) != s.expect || fires != s.expect)
            out.fail("sporadic " + encode_graph6(s.g) + " k=" + std::to_string(s.k));
    }
    out.detail << rows << " (graph,k) rows";
    return out;
}

// helpers shared by criterion 11
void check_graph_properties(const Graph& g, Outcome& out, std::mt19937_64& rng) {
    const int n = g.order();
    const int m = g.size();
    const std::string id = encode_graph6(g);
    const bool conn = is_connected(g);
    const int lam = conn ? edge_connectivity(g) : 0;
    const DegreeStats st = degree_stats(g);
    const Graph co = complement(g);

    std::vector<int> lk(n + 2, 0);
    for (int k = 2; k <= n; ++k) lk[k] = eval.lambda(g, k);

    for (int k = 2; k <= n; ++k) {
        // monotone in k
        if (k < n && lk[k + 1] > lk[k]) out.fail(id + " monotonicity at k=" + std::to_string(k));
        if (k < 3) continue;

        if (conn) {
            if (!(1 <= lk[k] && lk[k] <= lam && lam <= st.min_degree))
                out.fail(id + " connectivity chain at k=" + std::to_string(k));
            if (lk[k] < lam / 2) out.fail(id + " halving bound at k=" + std::to_string(k));
            if (has_adjacent_min_degree_pair(g) && lk[k] > st.min_degree - 1)
                out.fail(id + " adjacent-min-pair bound at k=" + std::to_string(k));

            // structure forcing the maximum, both directions
            const bool attains = lk[k] == n - ceil_half(k);
            if (attains != has_max_lambda_form(g, k))
                out.fail(id + " max-structure mismatch at k=" + std::to_string(k));

            // density ceiling and its sharpening
            const DensityUpper du = density_upper(n, m);
            const int ceiling = du.sharpened ? *du.sharpened : du.basic;
            if (lk[k] > ceiling) out.fail(id + " density ceiling at k=" + std::to_string(k));
            if (m >= n - 1 && lk[k] == du.basic &&
                !density_tightness_violations(g, k, lk[k]).empty())
                out.fail(id + " density consistency at k=" + std::to_string(k));
        } else {
            // disconnected: the sum attains the maximum iff the complement has the form
            const int sum = lk[k] + eval.lambda(co, k);
            const bool attains = sum == n - ceil_half(k);
            if (attains != has_max_lambda_form(co, k))
                out.fail(id + " disconnected max-structure at k=" + std::to_string(k));
        }

        // degree balance is necessary at the maximum sum
        const int sum = lk[k] + eval.lambda(co, k);
        if (sum == n - ceil_half(k) && !degree_spread_ok(g, k))
            out.fail(id + " degree spread at k=" + std::to_string(k));

        // product is zero exactly when a side is disconnected
        const int prod = lk[k] * eval.lambda(co, k);
        if ((prod == 0) != product_zero_predicted(g))
            out.fail(id + " product-zero at k=" + std::to_string(k));
    }

    if (conn) {
        // a 2l-edge-connected graph packs l spanning trees
        if (eval.lambda(g, n) < lam / 2) out.fail(id + " spanning guarantee from connectivity");

        // deleting edges cannot raise lambda_k
        if (m > 0 && n >= 3) {
            EdgeList edges = g.edges();
            std::shuffle(edges.begin(), edges.end(), rng);
            edges.resize(std::max<std::size_t>(1, edges.size() / 4));
            const Graph h = delete_edges(g, edges);
            const int k = 3 + static_cast<int>(rng() % (n - 2));
            if (eval.lambda(h, k) > lk[k]) out.fail(id + " subgraph monotonicity");
        }
    }
}

// 11. the property suite
Outcome criterion_property_suite() {
    Outcome out;
    std::mt19937_64 rng(0x5eed);
    long graphs = 0;

    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : graphs_of_order(n)) {
            ++graphs;
            check_graph_properties(g, out, rng);
        }
    for (int i = 0; i < 200; ++i) {
        ++graphs;
        check_graph_properties(seeded_random_graph(7, 0xACC07 + i), out, rng);
    }

    // dominating vertex with 3-edge-connectivity forces lambda_k >= 2 (n <= 8)
    long filtered = 0;
    for (int n = 5; n <= 8; ++n)
        for (const Graph& g : graphs_of_order(n)) {
            if (degree_stats(g).max_degree != n - 1) continue;
            if (!is_connected(g) || edge_connectivity(g) != 3) continue;
            ++filtered;
            for (int k = 3; k <= n; ++k) {
                bool ok = true;
                for_each_subset(n, k, [&](std::uint64_t mask) {
                    if (!pack_trees(g, TerminalSet::from_mask(mask), 2)) {
                        ok = false;
                        return false;
                    }
                    return true;
                });
                if (!ok) out.fail(encode_graph6(g) + " dominated 3-connected but lambda_" +
                                  std::to_string(k) + " < 2");
            }
        }

    // dominated graphs whose components outside the dominator are big or
    // cyclic keep lambda_k >= 2
    {
        // star center 0 over two triangles
        const Graph two_triangles(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
                                      {1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
        for (int k = 3; k <= 7; ++k)
            if (eval.lambda(two_triangles, k) < 2)
                out.fail("dominated two-triangle graph at k=" + std::to_string(k));
        // star center 0 over a long path: a tree component on 6 >= k vertices
        const Graph big_path(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
                                 {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
        for (int k = 3; k <= 6; ++k)
            if (eval.lambda(big_path, k) < 2)
                out.fail("dominated path graph at k=" + std::to_string(k));
        if (eval.lambda(big_path, 7) != 1) out.fail("dominated path graph at k=7 should be 1");
    }

    // oracle equivalence extends to n=7 connected graphs
    long at7 = 0;
    for (const Graph& g : graphs_of_order(7)) {
        if (!is_connected(g)) continue;
        ++at7;
        if (eval.lambda(g, 7) != nwt_partition_bound(g))
            out.fail(encode_graph6(g) + " solver/partition mismatch");
    }

    out.detail << graphs << " graphs, " << filtered << " dominated 3-connected graphs, " << at7
               << " connected n=7 classes";
    return out;
}

// 12. determinism and plumbing
Outcome criterion_determinism() {
    Outcome out;

    // graph6 round trip across every class up to n=8
    long count = 0;
    for (int n = 1; n <= 8; ++n)
        for (const Graph& g : graphs_of_order(n)) {
            ++count;
            const std::string line = encode_graph6(g);
            if (parse_graph6(line) != g) out.fail("round trip " + line);
        }

    // identical reports across worker counts
    RunConfig cfg;
    cfg.mode = "ng-check";
    cfg.inline_graphs = {"E~~w", "EFz_", "DqK", "D~{", "E?~o", "EhEG"};
    cfg.format = "json";
    cfg.workers = 1;
    const Report one = run(cfg);
    cfg.workers = 4;
    const Report four = run(cfg);
    if (one.output != four.output) out.fail("reports differ across worker counts");

    // warm cache equals cold cache
    const auto path = std::filesystem::temp_directory_path() / "gecon_acceptance_cache.jsonl";
    std::filesystem::remove(path);
    RunConfig cached = cfg;
    cached.workers = 1;
    cached.cache_path = path.string();
    const Report cold = run(cached);
    const Report warm = run(cached);
    std::filesystem::remove(path);
    if (cold.output != warm.output) out.fail("warm cache changed the report");
    if (cold.output != one.output) out.fail("cache changed the report against no-cache");

    out.detail << count << " round trips, worker counts {1,4}, cache warm/cold";
    return out;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Outcome (*fn)();
    };
    const Entry entries[] = {
        {"complete graphs", criterion_complete_graphs},
        {"complete bipartite packing", criterion_complete_bipartite},
        {"harary packing", criterion_harary},
        {"cycle complements", criterion_cycle_complements},
        {"paired construction", criterion_paired_construction},
        {"augmented bipartite family", criterion_augmented_bipartite},
        {"oracle equivalence", criterion_oracle_equivalence},
        {"deletion guarantee", criterion_deletion_guarantee},
        {"bound audit", criterion_bound_audit},
        {"sum-one audit", criterion_sum_one_audit},
        {"property suite", criterion_property_suite},
        {"determinism and plumbing", criterion_determinism},
    };

    int failures = 0;
    int idx = 0;
    for (const Entry& entry : entries) {
        ++idx;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = entry.fn();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %2d: %s — %s (%.1fs)%s\n", out.pass ? "PASS" : "FAIL", idx,
                    entry.name, out.detail.str().c_str(), secs, "");
        if (!out.pass) ++failures;
        std::fflush(stdout);
    }
    std::printf("%d/12 criteria passed\n", 12 - failures);
    return failures;
}
