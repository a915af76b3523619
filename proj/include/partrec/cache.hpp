#pragma once

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace partrec {

/// Content-addressed cache of expensive artifacts (partition tables, long
/// q-expansions, eigenform tables). Entries are JSON files keyed by a hash
/// of (kind, parameters, format version); payloads carry a checksum and a
/// corrupt entry falls back to recomputation. Writes are atomic
/// (temp + rename). Bumping kFormatVersion orphans every old entry.
class Cache {
public:
    static constexpr int kFormatVersion = 1;

    /// Disabled cache (all loads miss, stores are no-ops).
    Cache() = default;
    explicit Cache(std::filesystem::path dir);

    bool enabled() const { return !dir_.empty(); }
    const std::filesystem::path& dir() const { return dir_; }

    std::optional<nlohmann::json> load(const std::string& key) const;
    void store(const std::string& key, const nlohmann::json& payload) const;

    static std::string checksum(const std::string& bytes);

private:
    std::filesystem::path path_for(const std::string& key) const;
    std::filesystem::path dir_;
};

}  // namespace partrec
