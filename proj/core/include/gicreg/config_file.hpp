#pragma once

#include "gicreg/optimizer.hpp"

#include <map>
#include <optional>
#include <string>

namespace gicreg {

/// Key-value run configuration: one `key = value` pair per line, `#`
/// comments, blank lines ignored. Channel keys are p1/p2/a12/a21; grid
/// dimensions use dotted keys like `grid.alpha = 0:1:0.01`.
class ConfigFile {
public:
    static ConfigFile parse_file(const std::string& path);
    static ConfigFile parse_string(const std::string& text, const std::string& origin = "<string>");

    std::optional<std::string> get(const std::string& key) const;
    std::optional<double> get_double(const std::string& key) const;

    const std::map<std::string, std::string>& entries() const { return entries_; }

private:
    std::map<std::string, std::string> entries_;
};

/// Parses `lo:hi:step` into a grid axis; a single number pins the axis.
GridAxis parse_grid_axis(const std::string& text);

}  // namespace gicreg
