#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polarsim {

struct ManifestOutput {
    std::string path;       // the data file, as given on the command line
    std::uint64_t digest;   // FNV-1a 64 over the file's bytes
    std::uint64_t rows;     // data rows, excluding header and comment lines
};

// Reproducibility record written next to every output file as
// `<output>.manifest.json`. Everything needed to regenerate the file
// byte-for-byte, plus a digest to tell whether a file at hand is that output.
struct RunManifest {
    std::string command;      // "run", "sweep", "figure fig3", ...
    std::string config_echo;  // canonical resolved configuration
    std::uint64_t base_seed = 0;
    std::vector<ManifestOutput> outputs;
};

std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t fnv1a64_file(const std::string& path);  // throws IoError

std::string iso8601_utc_now();

std::string manifest_json(const RunManifest& m, const std::string& created_utc);

// Writes `data_path + ".manifest.json"`. Throws IoError.
void write_manifest_sidecar(const std::string& data_path, const RunManifest& m);

}  // namespace polarsim
