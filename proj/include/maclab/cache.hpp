#pragma once

// On-disk cache of expensive intermediates.
//
// One JSON file per entry, named <op>-<key hash>.json:
//   {"format": "maclab-cache/1", "code_version": ..., "op": ..., "params": ...,
//    "checksum": "fnv1a64:<hex of payload dump>", "payload": ...}
// The full key is stored and compared on read, so a hash collision or a
// stale code version is a miss. A file that fails to parse or whose
// checksum does not match is recomputed and rewritten.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "maclab/serialize.hpp"
#include "maclab/version.hpp"

namespace maclab {

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << v;
    return os.str();
}

class Cache {
public:
    static constexpr const char* format = "maclab-cache/1";

    struct Stats {
        int hits = 0, misses = 0, rewrites = 0;
    };

    explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

    // Explicit directory if given, else MACLAB_CACHE_DIR, else no cache.
    static std::optional<Cache> open(const std::string& explicit_dir = "") {
        std::string d = explicit_dir;
        if (d.empty())
            if (const char* e = std::getenv("MACLAB_CACHE_DIR")) d = e;
        if (d.empty()) return std::nullopt;
        return Cache(d);
    }

    const std::filesystem::path& dir() const { return dir_; }

    std::filesystem::path path_for(const std::string& op, const Json& params) const {
        return dir_ / (op + "-" + hex64(fnv1a64(key_string(op, params))) + ".json");
    }

    Json get_or_compute(const std::string& op, const Json& params, const std::function<Json()>& compute) {
        std::filesystem::path p = path_for(op, params);
        bool existed = std::filesystem::exists(p);
        if (existed)
            if (auto hit = read(p, op, params)) {
                bump(&Stats::hits);
                return *hit;
            }
        Json payload = compute();
        write(p, op, params, payload);
        bump(existed ? &Stats::rewrites : &Stats::misses);
        return payload;
    }

    Stats stats() const {
        std::lock_guard<std::mutex> g(*mu_);
        return stats_;
    }

private:
    static std::string key_string(const std::string& op, const Json& params) {
        return op + "\n" + params.dump() + "\n" + code_version;
    }

    static std::string checksum(const Json& payload) { return "fnv1a64:" + hex64(fnv1a64(payload.dump())); }

    static std::optional<Json> read(const std::filesystem::path& p, const std::string& op, const Json& params) {
        std::ifstream in(p);
        Json j = Json::parse(in, nullptr, false);
        if (j.is_discarded() || !j.is_object()) return std::nullopt;
        if (j.value("format", "") != format || j.value("code_version", "") != code_version) return std::nullopt;
        if (j.value("op", "") != op || !j.contains("params") || j["params"] != params) return std::nullopt;
        if (!j.contains("payload") || j.value("checksum", "") != checksum(j["payload"])) return std::nullopt;
        return j["payload"];
    }

    static void write(const std::filesystem::path& p, const std::string& op, const Json& params, const Json& payload) {
        Json j;
        j["format"] = format;
        j["code_version"] = code_version;
        j["op"] = op;
        j["params"] = params;
        j["checksum"] = checksum(payload);
        j["payload"] = payload;
        std::ostringstream tid;
        tid << std::this_thread::get_id();
        std::filesystem::path tmp = p;
        tmp += ".tmp" + tid.str();
        {
            std::ofstream out(tmp, std::ios::trunc);
            out << j.dump() << '\n';
            if (!out) throw CacheError("cannot write cache file " + tmp.string());
        }
        std::filesystem::rename(tmp, p);
    }

    void bump(int Stats::*field) {
        std::lock_guard<std::mutex> g(*mu_);
        ++(stats_.*field);
    }

    std::filesystem::path dir_;
    std::shared_ptr<std::mutex> mu_ = std::make_shared<std::mutex>();
    Stats stats_;
};

// Optional-cache helper: computes directly when there is no cache.
inline Json cached(Cache* cache, const std::string& op, const Json& params, const std::function<Json()>& compute) {
    return cache ? cache->get_or_compute(op, params, compute) : compute();
}

}  // namespace maclab
