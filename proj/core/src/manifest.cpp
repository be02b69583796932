#include "gicreg/manifest.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace gicreg {

std::string fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path + " for digest");
    std::uint64_t hash = 0xCBF29CE484222325ULL;
    char buf[8192];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            hash ^= static_cast<unsigned char>(buf[i]);
            hash *= 0x100000001B3ULL;
        }
        if (got < static_cast<std::streamsize>(sizeof(buf))) break;
    }
    char hex[17];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(hash));
    return hex;
}

void write_manifest(const RunManifest& m, const std::string& path) {
    nlohmann::json j;
    j["command"] = m.command;
    j["channel"] = {{"p1", m.channel.p1}, {"p2", m.channel.p2},
                    {"a12", m.channel.a12}, {"a21", m.channel.a21}};
    j["scheme"] = m.scheme;
    j["settings"] = m.settings;
    j["seed"] = m.seed;
    j["tool_version"] = m.tool_version;
    j["wall_clock_seconds"] = m.wall_clock_seconds;
    nlohmann::json outs = nlohmann::json::object();
    for (const auto& [file, digest] : m.outputs) outs[file] = digest;
    j["outputs"] = std::move(outs);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace gicreg
