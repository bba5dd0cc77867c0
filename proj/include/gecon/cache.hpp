#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "gecon/graph.hpp"

namespace gecon {

// Bump on any change that can alter solver outputs; stale entries are ignored.
inline constexpr const char* kSolverVersion = "gecon-solver-1";

struct CacheEntry {
    std::string key;  // canonical graph6
    int k = 0;
    int lambda = 0;
    std::vector<int> witness;  // terminal set on the canonical labeling
    std::string cert_digest;
    std::string version = kSolverVersion;
};

/// Append-only store of lambda_k results, one JSON object per line.
/// Corrupt lines are skipped with a warning count, never a crash; rereads are
/// last-write-wins per (key, k, version).
class LambdaCache {
public:
    LambdaCache() = default;

    explicit LambdaCache(const std::filesystem::path& file) : path_(file) {
        std::ifstream in(file);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                const nlohmann::json j = nlohmann::json::parse(line);
                CacheEntry e;
                e.key = j.at("key").get<std::string>();
                e.k = j.at("k").get<int>();
                e.lambda = j.at("lambda").get<int>();
                e.witness = j.at("witness").get<std::vector<int>>();
                e.cert_digest = j.at("digest").get<std::string>();
                e.version = j.at("version").get<std::string>();
                entries_[{e.key, e.k, e.version}] = std::move(e);
            } catch (const std::exception&) {
                ++warnings_;
            }
        }
    }

    std::optional<CacheEntry> get(const std::string& key, int k,
                                  const std::string& version = kSolverVersion) const {
        const auto it = entries_.find({key, k, version});
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    void put(const CacheEntry& e) {
        const auto key = std::make_tuple(e.key, e.k, e.version);
        const auto it = entries_.find(key);
        if (it != entries_.end() && it->second.lambda == e.lambda) return;  // idempotent
        entries_[key] = e;
        if (!path_) return;
        nlohmann::json j;
        j["key"] = e.key;
        j["k"] = e.k;
        j["lambda"] = e.lambda;
        j["witness"] = e.witness;
        j["digest"] = e.cert_digest;
        j["version"] = e.version;
        std::ofstream out(*path_, std::ios::app);
        out << j.dump() << '\n';
    }

    int warnings() const { return warnings_; }
    std::size_t size() const { return entries_.size(); }

private:
    std::map<std::tuple<std::string, int, std::string>, CacheEntry> entries_;
    std::optional<std::filesystem::path> path_;
    int warnings_ = 0;
};

}  // namespace gecon
