#include "polarsim/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>

#include "json.hpp"
#include "polarsim/version.hpp"
#include "polarsim/writers.hpp"

namespace polarsim {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read back " + path + " for digesting");
    }
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

std::string iso8601_utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

std::string manifest_json(const RunManifest& m, const std::string& created_utc) {
    nlohmann::json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = m.command;
    j["generator"] = kGeneratorName;
    j["base_seed"] = m.base_seed;
    j["config"] = m.config_echo;
    j["created_utc"] = created_utc;
    auto& outs = j["outputs"] = nlohmann::json::array();
    for (const auto& o : m.outputs) {
        char digest[19];
        std::snprintf(digest, sizeof(digest), "0x%016llx",
                      static_cast<unsigned long long>(o.digest));
        outs.push_back({{"path", o.path}, {"fnv1a64", digest}, {"rows", o.rows}});
    }
    return j.dump(2) + "\n";
}

void write_manifest_sidecar(const std::string& data_path, const RunManifest& m) {
    const std::string path = data_path + ".manifest.json";
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }
    out << manifest_json(m, iso8601_utc_now());
    out.flush();
    if (!out) {
        throw IoError("failed while writing " + path);
    }
}

}  // namespace polarsim
