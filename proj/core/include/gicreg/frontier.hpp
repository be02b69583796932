#pragma once

#include "gicreg/channel.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace gicreg {

/// Pareto-reduced upper boundary of an achievable region: points sorted
/// by strictly increasing r1 and strictly decreasing r2, none dominating
/// another. Exact coordinate ties are resolved toward the smaller
/// provenance ordinal, which makes insertion order-insensitive.
class Frontier {
public:
    void insert(RatePair p);
    void merge(const Frontier& other);

    const std::vector<RatePair>& points() const { return points_; }
    bool empty() const { return points_.empty(); }
    std::size_t size() const { return points_.size(); }

    double max_r1() const;
    double max_r2() const;

private:
    std::vector<RatePair> points_;
};

/// Upper concave envelope (time-sharing closure) of the frontier points
/// augmented with their axis projections; result is Pareto-reduced.
/// Throws std::invalid_argument on an empty frontier.
Frontier convex_hull(const Frontier& f);

struct DominanceReport {
    bool dominates = false;
    double max_violation = 0.0;  // largest amount a point of b sticks out of a
};

/// True iff every point of b lies inside the region of a (piecewise
/// linear interpolation between a's points) within `slack`.
DominanceReport dominates(const Frontier& a, const Frontier& b, double slack);

/// Largest r1 on the interpolated frontier subject to r2 >= r2_min;
/// 0 if infeasible.
double corner_query(const Frontier& f, double r2_min);

void write_frontier_csv(const Frontier& f, std::ostream& out);
void write_frontier_csv(const Frontier& f, const std::string& path);

/// Reads a `r1,r2` CSV produced by write_frontier_csv. Throws
/// std::runtime_error on malformed content.
Frontier read_frontier_csv(const std::string& path);

/// Maps a scheme tag to its flat parameter names (for JSON export).
using ParamNamer = std::function<std::vector<std::string>(const std::string& scheme, std::size_t dim)>;

void write_frontier_json(const Frontier& f, const std::string& path, const ParamNamer& namer);

}  // namespace gicreg
