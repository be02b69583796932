#pragma once

#include "gicreg/channel.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gicreg {

inline constexpr const char* kToolVersion = "0.1.0";

/// Reproducibility record written next to every region/oracle output.
struct RunManifest {
    std::string command;
    ChannelParams channel{1.0, 1.0, 0.0, 0.0};
    std::string scheme;
    std::map<std::string, std::string> settings;  // grid axes, budget, quadrature...
    std::uint64_t seed = 0;
    std::string tool_version = kToolVersion;
    double wall_clock_seconds = 0.0;
    std::vector<std::pair<std::string, std::string>> outputs;  // path -> digest
};

/// FNV-1a 64-bit digest of a file's bytes, as a fixed-width hex string.
std::string fnv1a64_file(const std::string& path);

void write_manifest(const RunManifest& m, const std::string& path);

}  // namespace gicreg
