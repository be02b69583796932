#include "gicreg/config_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gicreg {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::runtime_error("invalid number '" + text + "' for " + what);
    }
    if (used != text.size()) {
        throw std::runtime_error("invalid number '" + text + "' for " + what);
    }
    return v;
}

}  // namespace

ConfigFile ConfigFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str(), path);
}

ConfigFile ConfigFile::parse_string(const std::string& text, const std::string& origin) {
    ConfigFile cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                     ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                     ": expected 'key = value'");
        }
        cfg.entries_[key] = value;
    }
    return cfg;
}

std::optional<std::string> ConfigFile::get(const std::string& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::optional<double> ConfigFile::get_double(const std::string& key) const {
    const auto v = get(key);
    if (!v) return std::nullopt;
    return parse_double(*v, key);
}

GridAxis parse_grid_axis(const std::string& text) {
    const auto c1 = text.find(':');
    if (c1 == std::string::npos) {
        const double v = parse_double(trim(text), "grid axis");
        return GridAxis{v, v, 0.0};
    }
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) {
        throw std::runtime_error("grid axis '" + text + "' must be 'lo:hi:step' or a number");
    }
    GridAxis axis;
    axis.lo = parse_double(trim(text.substr(0, c1)), "grid axis lo");
    axis.hi = parse_double(trim(text.substr(c1 + 1, c2 - c1 - 1)), "grid axis hi");
    axis.step = parse_double(trim(text.substr(c2 + 1)), "grid axis step");
    if (axis.step < 0.0 || axis.hi < axis.lo) {
        throw std::runtime_error("grid axis '" + text + "' must have hi >= lo and step >= 0");
    }
    return axis;
}

}  // namespace gicreg
