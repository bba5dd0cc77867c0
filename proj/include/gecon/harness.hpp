#pragma once

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gecon/bounds.hpp"
#include "gecon/cache.hpp"
#include "gecon/canonical.hpp"
#include "gecon/certificates.hpp"
#include "gecon/enumerate.hpp"
#include "gecon/generators.hpp"
#include "gecon/graph6.hpp"
#include "gecon/packing.hpp"
#include "gecon/partition.hpp"

namespace gecon {

struct RunConfig {
    std::string mode;                        // lambda | stp | ng-check | classify | enumerate | gen
    std::string input_path;                  // graph6 file, or "-" for stdin
    std::vector<std::string> inline_graphs;  // graph6 lines passed directly
    std::string family;                      // FamilySpec text
    int k_lo = 0, k_hi = 0;                  // 0 = mode default (lambda: 2..n, others: 3..n)
    int cap = kDefaultLambdaCap;
    int enum_n = 0;                          // order for enumerate / sampling
    bool connected_only = false;
    int workers = 1;
    std::string cache_path;
    std::string format = "text";             // json | csv | text
    std::uint64_t seed = 0;
    int sample = 0;                          // > 0: this many seeded random graphs on enum_n vertices
    bool emit_certificates = false;          // lambda mode: embed full certificates (always freshly computed)
};

struct Report {
    std::string output;
    int counterexamples = 0;
    int exit_code = 0;
};

namespace detail {

template <typename Fn>
void parallel_for(int count, int workers, Fn&& fn) {
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (std::thread& t : pool) t.join();
}

struct HarnessContext {
    LambdaCache cache;
    std::mutex mutex;
    int cap = kDefaultLambdaCap;

    explicit HarnessContext(const RunConfig& cfg)
        : cache(cfg.cache_path.empty() ? LambdaCache()
                                       : LambdaCache(std::filesystem::path(cfg.cache_path))),
          cap(cfg.cap) {}

    // lambda_k on a canonical graph, cache-backed. Values and witnesses are
    // computed on the canonical labeling, so warm and cold runs agree.
    CacheEntry lambda(const Graph& canon, const std::string& key, int k, bool fresh = false,
                      TreePacking* cert_out = nullptr) {
        if (!fresh && cert_out == nullptr) {
            std::lock_guard lock(mutex);
            if (auto hit = cache.get(key, k)) return *hit;
        }
        const LambdaResult r = lambda_k(canon, k, cap);
        CacheEntry e;
        e.key = key;
        e.k = k;
        e.lambda = r.value;
        e.witness = r.witness.vertices();
        e.cert_digest = packing_digest(r.certificate);
        if (cert_out) *cert_out = r.certificate;
        {
            std::lock_guard lock(mutex);
            cache.put(e);
        }
        return e;
    }
};

struct InputGraph {
    std::string given;  // graph6 as provided (or as generated)
    Graph graph;
};

inline std::vector<InputGraph> load_inputs(const RunConfig& cfg) {
    std::vector<InputGraph> inputs;
    auto add_line = [&](const std::string& line) {
        if (line.empty() || line[0] == '#') return;
        inputs.push_back({line, parse_graph6(line)});
    };
    if (!cfg.family.empty()) {
        const Graph g = build_family(parse_family_spec(cfg.family));
        inputs.push_back({encode_graph6(g), g});
    }
    for (const std::string& line : cfg.inline_graphs) add_line(line);
    if (!cfg.input_path.empty()) {
        if (cfg.input_path == "-") {
            std::string line;
            while (std::getline(std::cin, line)) add_line(line);
        } else {
            std::ifstream in(cfg.input_path);
            if (!in) throw std::runtime_error("cannot open input: " + cfg.input_path);
            std::string line;
            while (std::getline(in, line)) add_line(line);
        }
    }
    if (cfg.sample > 0) {
        if (cfg.enum_n < 2) throw std::invalid_argument("sampling needs an order (--n)");
        for (int i = 0; i < cfg.sample; ++i) {
            std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(i) * 0x9e3779b97f4a7c15ull);
            EdgeList edges;
            for (int u = 0; u < cfg.enum_n; ++u)
                for (int v = u + 1; v < cfg.enum_n; ++v)
                    if (rng() & 1) edges.emplace_back(u, v);
            const Graph g(cfg.enum_n, edges);
            inputs.push_back({encode_graph6(g), g});
        }
    }
    return inputs;
}

inline std::pair<int, int> k_range_for(const RunConfig& cfg, int n, int lo_default) {
    int lo = cfg.k_lo > 0 ? cfg.k_lo : lo_default;
    int hi = cfg.k_hi > 0 ? cfg.k_hi : n;
    lo = std::max(lo, 2);
    hi = std::min(hi, n);
    return {lo, hi};
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// Renders one report shape three ways from the same row list.
struct ReportBuilder {
    std::string mode;
    std::vector<std::string> columns;
    std::vector<nlohmann::json> rows;
    nlohmann::json summary;

    std::string render(const std::string& format) const {
        if (format == "json") {
            nlohmann::json doc;
            doc["mode"] = mode;
            doc["rows"] = rows;
            doc["summary"] = summary;
            return doc.dump(1) + "\n";
        }
        if (format == "csv") {
            std::ostringstream out;
            for (std::size_t i = 0; i < columns.size(); ++i)
                out << (i ? "," : "") << columns[i];
            out << '\n';
            for (const nlohmann::json& row : rows) {
                for (std::size_t i = 0; i < columns.size(); ++i) {
                    if (i) out << ',';
                    const nlohmann::json& cell = row.contains(columns[i]) ? row.at(columns[i])
                                                                          : nlohmann::json();
                    if (cell.is_string())
                        out << csv_escape(cell.get<std::string>());
                    else if (!cell.is_null() && !cell.is_structured())
                        out << cell.dump();
                    else if (cell.is_array()) {
                        std::string flat;
                        for (const nlohmann::json& item : cell) {
                            if (!flat.empty()) flat += ' ';
                            flat += item.is_string() ? item.get<std::string>() : item.dump();
                        }
                        out << csv_escape(flat);
                    }
                }
                out << '\n';
            }
            return out.str();
        }
        // text
        std::ostringstream out;
        for (const nlohmann::json& row : rows) {
            bool first = true;
            for (const std::string& col : columns) {
                if (!row.contains(col) || row.at(col).is_null()) continue;
                if (!first) out << "  ";
                first = false;
                const nlohmann::json& cell = row.at(col);
                out << col << '=';
                if (cell.is_string())
                    out << cell.get<std::string>();
                else if (cell.is_array()) {
                    out << '[';
                    bool f2 = true;
                    for (const nlohmann::json& item : cell) {
                        if (!f2) out << ' ';
                        f2 = false;
                        out << (item.is_string() ? item.get<std::string>() : item.dump());
                    }
                    out << ']';
                } else
                    out << cell.dump();
            }
            out << '\n';
        }
        out << "# summary: " << summary.dump() << '\n';
        return out.str();
    }
};

// One evaluated statement row for ng-check.
inline nlohmann::json statement_row(const std::string& id, const nlohmann::json& expected,
                                    const nlohmann::json& observed, bool pass) {
    nlohmann::json j;
    j["statement"] = id;
    j["expected"] = expected;
    j["observed"] = observed;
    j["pass"] = pass;
    return j;
}

}  // namespace detail

inline Report run(const RunConfig& cfg) {
    using detail::ReportBuilder;
    Report report;
    ReportBuilder out;
    out.mode = cfg.mode;

    if (cfg.mode == "enumerate") {
        if (cfg.enum_n < 1) throw std::invalid_argument("enumerate needs an order (--n)");
        const std::vector<Graph> graphs = enumerate_graphs(cfg.enum_n, cfg.connected_only,
                                                           std::min(cfg.cap, kDefaultEnumerateCap));
        out.columns = {"graph"};
        for (const Graph& g : graphs) out.rows.push_back({{"graph", encode_graph6(g)}});
        out.summary["count"] = graphs.size();
        out.summary["connected_only"] = cfg.connected_only;
        report.output = out.render(cfg.format);
        return report;
    }

    if (cfg.mode == "gen") {
        if (cfg.family.empty()) throw std::invalid_argument("gen needs --family");
        const Graph g = build_family(parse_family_spec(cfg.family));
        out.columns = {"graph", "n", "m"};
        out.rows.push_back({{"graph", encode_graph6(g)}, {"n", g.order()}, {"m", g.size()}});
        out.summary["count"] = 1;
        report.output = out.render(cfg.format);
        return report;
    }

    const std::vector<detail::InputGraph> inputs = detail::load_inputs(cfg);
    if (inputs.empty()) throw std::invalid_argument("no input graphs");
    detail::HarnessContext ctx(cfg);

    std::vector<std::vector<nlohmann::json>> per_graph(inputs.size());
    std::atomic<int> counterexamples{0};

    if (cfg.mode == "lambda") {
        out.columns = {"graph", "key", "n", "k", "lambda", "witness", "digest", "certificate"};
        detail::parallel_for(static_cast<int>(inputs.size()), cfg.workers, [&](int i) {
            const CanonicalResult canon = canonical_form(inputs[i].graph,
                                                          std::max(cfg.cap, kDefaultCanonicalCap));
            const auto [lo, hi] = detail::k_range_for(cfg, inputs[i].graph.order(), 2);
            for (int k = lo; k <= hi; ++k) {
                TreePacking cert;
                const CacheEntry e = ctx.lambda(canon.graph, canon.key, k, cfg.emit_certificates,
                                                cfg.emit_certificates ? &cert : nullptr);
                nlohmann::json row;
                row["graph"] = inputs[i].given;
                row["key"] = e.key;
                row["n"] = inputs[i].graph.order();
                row["k"] = k;
                row["lambda"] = e.lambda;
                row["witness"] = e.witness;
                row["digest"] = e.cert_digest;
                if (cfg.emit_certificates) row["certificate"] = packing_to_json(cert);
                per_graph[i].push_back(std::move(row));
            }
        });
    } else if (cfg.mode == "stp") {
        out.columns = {"graph", "key", "n", "stp", "partition_bound", "agree"};
        detail::parallel_for(static_cast<int>(inputs.size()), cfg.workers, [&](int i) {
            const Graph& g = inputs[i].graph;
            const CanonicalResult canon = canonical_form(g, std::max(cfg.cap, kDefaultCanonicalCap));
            nlohmann::json row;
            row["graph"] = inputs[i].given;
            row["key"] = canon.key;
            row["n"] = g.order();
            int stp;
            if (g.order() >= 2 && is_connected(g))
                stp = ctx.lambda(canon.graph, canon.key, g.order()).lambda;
            else
                stp = 0;
            row["stp"] = stp;
            if (g.order() <= kDefaultPartitionCap) {
                const int nwt = nwt_partition_bound(canon.graph);
                row["partition_bound"] = nwt;
                row["agree"] = nwt == stp;
                if (nwt != stp) counterexamples.fetch_add(1);
            }
            per_graph[i].push_back(std::move(row));
        });
    } else if (cfg.mode == "classify") {
        out.columns = {"graph", "key", "n", "k", "class1", "class2", "class3", "class4",
                       "max_form", "sum_one", "sum_one_complement"};
        detail::parallel_for(static_cast<int>(inputs.size()), cfg.workers, [&](int i) {
            const Graph& g = inputs[i].graph;
            const CanonicalResult canon = canonical_form(g, std::max(cfg.cap, kDefaultCanonicalCap));
            const Graph cg = complement(canon.graph);
            const auto [lo, hi] = detail::k_range_for(cfg, g.order(), 3);
            for (int k = std::max(lo, 3); k <= hi; ++k) {
                nlohmann::json row;
                row["graph"] = inputs[i].given;
                row["key"] = canon.key;
                row["n"] = g.order();
                row["k"] = k;
                for (int c = 1; c <= 4; ++c) {
                    const auto witness = g.order() >= 5 ? class_membership(canon.graph, c)
                                                        : std::nullopt;
                    row["class" + std::to_string(c)] = witness ? nlohmann::json(*witness)
                                                               : nlohmann::json();
                }
                row["max_form"] = has_max_lambda_form(canon.graph, k);
                row["sum_one"] = to_string(sum_one_classify(canon.graph, k));
                row["sum_one_complement"] = to_string(sum_one_classify(cg, k));
                per_graph[i].push_back(std::move(row));
            }
        });
    } else if (cfg.mode == "ng-check") {
        out.columns = {"graph", "key", "n", "m", "k", "statement", "expected", "observed", "pass"};
        detail::parallel_for(static_cast<int>(inputs.size()), cfg.workers, [&](int i) {
            const Graph& g0 = inputs[i].graph;
            const CanonicalResult canon = canonical_form(g0, std::max(cfg.cap, kDefaultCanonicalCap));
            const Graph& g = canon.graph;
            const CanonicalResult cocanon = canonical_form(complement(g));
            const int n = g.order();
            const int m = g.size();
            const bool g_conn = is_connected(g);
            const bool cg_conn = is_connected(cocanon.graph);
            const int lambda_g = g_conn ? edge_connectivity(g) : 0;
            const int delta = degree_stats(g).min_degree;

            const auto [lo, hi] = detail::k_range_for(cfg, n, 3);
            std::vector<int> lam_g(hi + 2, 0), lam_cg(hi + 2, 0);
            const int top = std::min(hi + 1, n);  // the monotone row needs k+1
            for (int k = std::max(lo, 2); k <= top; ++k) {
                lam_g[k] = ctx.lambda(g, canon.key, k).lambda;
                lam_cg[k] = ctx.lambda(cocanon.graph, cocanon.key, k).lambda;
            }

            for (int k = std::max(lo, 3); k <= hi; ++k) {
                const int sum = lam_g[k] + lam_cg[k];
                const int prod = lam_g[k] * lam_cg[k];
                const OrderBounds ob = order_bounds(n, k);
                std::vector<nlohmann::json> rows;

                rows.push_back(detail::statement_row("sum-lower-order", ob.sum_lower, sum,
                                                     sum >= ob.sum_lower));
                rows.push_back(detail::statement_row("sum-upper-order", ob.sum_upper, sum,
                                                     sum <= ob.sum_upper));
                rows.push_back(detail::statement_row(
                    "product-upper-order",
                    std::to_string(ob.product_upper_num) + "/" + std::to_string(ob.product_upper_den),
                    prod, 4 * prod <= ob.product_upper_num));
                if (n >= 6) {
                    const int L = size_sum_lower(n, m);
                    rows.push_back(detail::statement_row("sum-lower-size", L, sum, sum >= L));
                }
                const int M = size_sum_upper(n, m, k);
                rows.push_back(detail::statement_row("sum-upper-size", M, sum, sum <= M));
                const int N = size_product_upper(n, m);
                rows.push_back(detail::statement_row("product-upper-size", N, prod, prod <= N));

                const bool zero_pred = product_zero_predicted(g);
                rows.push_back(detail::statement_row("product-zero-iff", zero_pred, prod == 0,
                                                     (prod == 0) == zero_pred));

                if (g_conn) {
                    const bool attains = lam_g[k] == ob.sum_upper;
                    const bool form = has_max_lambda_form(g, k);
                    rows.push_back(detail::statement_row("max-sum-iff", form, attains,
                                                         attains == form));
                } else {
                    const bool attains = sum == ob.sum_upper;
                    const bool form = has_max_lambda_form(cocanon.graph, k);
                    rows.push_back(detail::statement_row("max-sum-complement-iff", form, attains,
                                                         attains == form));
                }

                const bool one_pred = sum_one_classify(g, k) != SumOneCondition::none ||
                                      sum_one_classify(cocanon.graph, k) != SumOneCondition::none;
                rows.push_back(detail::statement_row("sum-one-iff", one_pred, sum == 1,
                                                     (sum == 1) == one_pred));

                if (sum == ob.sum_upper)
                    rows.push_back(detail::statement_row("degree-spread", ceil_half(k) - 1,
                                                         degree_stats(g).max_degree - delta,
                                                         degree_spread_ok(g, k)));

                if (g_conn) {
                    const DensityUpper du = density_upper(n, m);
                    const int ceiling = du.sharpened ? *du.sharpened : du.basic;
                    rows.push_back(detail::statement_row("density-upper", ceiling, lam_g[k],
                                                         lam_g[k] <= ceiling));
                    if (m >= n - 1 && lam_g[k] == du.basic) {
                        const std::vector<int> v = density_tightness_violations(g, k, lam_g[k]);
                        rows.push_back(detail::statement_row("density-consistency",
                                                             nlohmann::json::array(), v, v.empty()));
                    }
                    rows.push_back(detail::statement_row("halving", lambda_g / 2, lam_g[k],
                                                         lam_g[k] >= lambda_g / 2));
                    rows.push_back(detail::statement_row(
                        "observation-chain", "1<=lk<=lambda<=delta", lam_g[k],
                        1 <= lam_g[k] && lam_g[k] <= lambda_g && lambda_g <= delta));
                    if (has_adjacent_min_degree_pair(g))
                        rows.push_back(detail::statement_row("adjacent-min-pair", delta - 1,
                                                             lam_g[k], lam_g[k] <= delta - 1));
                }
                if (k + 1 <= n)
                    rows.push_back(detail::statement_row("monotone", lam_g[k], lam_g[k + 1],
                                                         lam_g[k + 1] <= lam_g[k]));

                for (nlohmann::json& row : rows) {
                    row["graph"] = inputs[i].given;
                    row["key"] = canon.key;
                    row["n"] = n;
                    row["m"] = m;
                    row["k"] = k;
                    if (!row.at("pass").get<bool>()) counterexamples.fetch_add(1);
                    per_graph[i].push_back(std::move(row));
                }
            }
        });
    } else {
        throw std::invalid_argument("unknown mode: " + cfg.mode);
    }

    std::size_t total_rows = 0;
    for (std::vector<nlohmann::json>& rows : per_graph) {
        total_rows += rows.size();
        for (nlohmann::json& row : rows) out.rows.push_back(std::move(row));
    }
    out.summary["graphs"] = inputs.size();
    out.summary["rows"] = total_rows;
    out.summary["counterexamples"] = counterexamples.load();
    if (ctx.cache.warnings() > 0) out.summary["cache_warnings"] = ctx.cache.warnings();

    report.counterexamples = counterexamples.load();
    report.exit_code = report.counterexamples > 0 ? 1 : 0;
    report.output = out.render(cfg.format);
    return report;
}

}  // namespace gecon
