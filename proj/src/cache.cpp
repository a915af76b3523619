#include "partrec/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace partrec {

namespace {

// FNV-1a, 64-bit
std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string Cache::checksum(const std::string& bytes) { return hex64(fnv1a(bytes)); }

std::filesystem::path Cache::path_for(const std::string& key) const {
    return dir_ / (hex64(fnv1a(key + "#v" + std::to_string(kFormatVersion))) + ".json");
}

std::optional<nlohmann::json> Cache::load(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    const auto path = path_for(key);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        if (j.at("key") != key) return std::nullopt;
        if (j.at("version") != kFormatVersion) return std::nullopt;
        const std::string payload = j.at("payload").dump();
        if (j.at("checksum") != checksum(payload)) return std::nullopt;  // corrupt: recompute
        return j.at("payload");
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
}

void Cache::store(const std::string& key, const nlohmann::json& payload) const {
    if (!enabled()) return;
    nlohmann::json j{{"key", key},
                     {"version", kFormatVersion},
                     {"checksum", checksum(payload.dump())},
                     {"payload", payload}};
    const auto path = path_for(key);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << j.dump();
        if (!out) return;  // cache is best-effort; failure to write is not an error
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
}

}  // namespace partrec
