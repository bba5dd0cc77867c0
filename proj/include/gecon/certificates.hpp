#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "gecon/packing.hpp"

namespace gecon {

/// Certificate wire format: {"terminals":[...], "trees":[[[u,v],...],...]}
inline nlohmann::json packing_to_json(const TreePacking& p) {
    nlohmann::json j;
    j["terminals"] = p.terminals.vertices();
    nlohmann::json trees = nlohmann::json::array();
    for (const SteinerTree& t : p.trees) {
        nlohmann::json tree = nlohmann::json::array();
        for (const Edge& e : t.edges) tree.push_back({e.u, e.v});
        trees.push_back(std::move(tree));
    }
    j["trees"] = std::move(trees);
    return j;
}

inline TreePacking packing_from_json(const nlohmann::json& j) {
    TreePacking p;
    p.terminals = TerminalSet::from_vertices(j.at("terminals").get<std::vector<int>>());
    for (const nlohmann::json& tree : j.at("trees")) {
        SteinerTree t;
        for (const nlohmann::json& e : tree) t.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        p.trees.push_back(std::move(t));
    }
    return p;
}

/// FNV-1a over the serialized certificate, as a short stable fingerprint.
inline std::string digest(std::string_view text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

inline std::string packing_digest(const TreePacking& p) {
    return digest(packing_to_json(p).dump());
}

}  // namespace gecon
