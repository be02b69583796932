#include "gicreg/frontier.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gicreg {

void Frontier::insert(RatePair p) {
    if (!std::isfinite(p.r1) || !std::isfinite(p.r2) || p.r1 < 0.0 || p.r2 < 0.0) {
        throw std::invalid_argument("frontier points must be finite and non-negative");
    }
    // first incumbent with r1 >= p.r1 has the largest r2 among those
    auto it = std::lower_bound(points_.begin(), points_.end(), p.r1,
                               [](const RatePair& q, double r1) { return q.r1 < r1; });
    if (it != points_.end()) {
        if (it->r1 == p.r1 && it->r2 == p.r2) {
            if (p.provenance.ordinal < it->provenance.ordinal) *it = std::move(p);
            return;
        }
        if (it->r2 >= p.r2) return;  // dominated (strict in at least one coord)
    }
    // erase incumbents dominated by p: the trailing run before `it` with
    // r2 <= p.r2, plus `it` itself when it shares r1 with lower r2
    auto last = it;
    if (last != points_.end() && last->r1 == p.r1 && last->r2 < p.r2) ++last;
    auto first = it;
    while (first != points_.begin() && std::prev(first)->r2 <= p.r2) --first;
    it = points_.erase(first, last);
    points_.insert(it, std::move(p));
}

void Frontier::merge(const Frontier& other) {
    for (const RatePair& p : other.points_) insert(p);
}

double Frontier::max_r1() const {
    return points_.empty() ? 0.0 : points_.back().r1;
}

double Frontier::max_r2() const {
    return points_.empty() ? 0.0 : points_.front().r2;
}

Frontier convex_hull(const Frontier& f) {
    if (f.empty()) throw std::invalid_argument("convex hull of an empty frontier");
    // augment with the axis projections, then keep the upper envelope
    std::vector<RatePair> pts = f.points();
    pts.insert(pts.begin(), RatePair{0.0, f.max_r2(), f.points().front().provenance});
    pts.push_back(RatePair{f.max_r1(), 0.0, f.points().back().provenance});

    std::vector<RatePair> hull;
    auto cross = [](const RatePair& o, const RatePair& a, const RatePair& b) {
        return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
    };
    for (RatePair& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) >= 0.0) {
            hull.pop_back();
        }
        hull.push_back(std::move(p));
    }
    Frontier out;
    for (RatePair& p : hull) out.insert(std::move(p));
    return out;
}

namespace {

// piecewise-linear frontier value at r1 = x (x must be within [min,max] r1)
double interpolate(const std::vector<RatePair>& pts, double x) {
    if (x <= pts.front().r1) return pts.front().r2;
    auto hi = std::lower_bound(pts.begin(), pts.end(), x,
                               [](const RatePair& q, double v) { return q.r1 < v; });
    if (hi == pts.end()) return pts.back().r2;
    if (hi->r1 == x) return hi->r2;
    auto lo = std::prev(hi);
    const double t = (x - lo->r1) / (hi->r1 - lo->r1);
    return lo->r2 + t * (hi->r2 - lo->r2);
}

}  // namespace

DominanceReport dominates(const Frontier& a, const Frontier& b, double slack) {
    if (a.empty() || b.empty()) throw std::invalid_argument("dominance needs nonempty frontiers");
    if (slack < 0.0) throw std::invalid_argument("slack must be >= 0");
    DominanceReport rep;
    rep.dominates = true;
    for (const RatePair& q : b.points()) {
        const double over_r1 = q.r1 - a.max_r1();
        const double over_r2 = q.r2 - interpolate(a.points(), std::min(q.r1, a.max_r1()));
        const double violation = std::max(over_r1, over_r2);
        if (violation > rep.max_violation) rep.max_violation = violation;
        if (violation > slack) rep.dominates = false;
    }
    if (rep.max_violation < 0.0) rep.max_violation = 0.0;
    return rep;
}

double corner_query(const Frontier& f, double r2_min) {
    if (f.empty()) throw std::invalid_argument("corner query on an empty frontier");
    const auto& pts = f.points();
    if (r2_min > f.max_r2()) return 0.0;
    if (r2_min <= pts.back().r2) return f.max_r1();
    // walk to the edge straddling r2_min (r2 strictly decreasing)
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i].r2 >= r2_min && r2_min > pts[i + 1].r2) {
            const double t = (pts[i].r2 - r2_min) / (pts[i].r2 - pts[i + 1].r2);
            return pts[i].r1 + t * (pts[i + 1].r1 - pts[i].r1);
        }
    }
    return pts.front().r1;
}

namespace {

std::string format_rate(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

void write_frontier_csv(const Frontier& f, std::ostream& out) {
    out << "r1,r2\n";
    for (const RatePair& p : f.points()) {
        out << format_rate(p.r1) << ',' << format_rate(p.r2) << '\n';
    }
}

void write_frontier_csv(const Frontier& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_frontier_csv(f, out);
    if (!out) throw std::runtime_error("failed writing " + path);
}

Frontier read_frontier_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || (line != "r1,r2" && line != "r1,r2\r")) {
        throw std::runtime_error(path + ": expected header 'r1,r2'");
    }
    Frontier f;
    std::uint64_t row = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error(path + ": malformed row " + line);
        std::size_t used1 = 0, used2 = 0;
        double r1, r2;
        try {
            r1 = std::stod(line.substr(0, comma), &used1);
            r2 = std::stod(line.substr(comma + 1), &used2);
        } catch (const std::exception&) {
            throw std::runtime_error(path + ": malformed row " + line);
        }
        if (used1 != comma || used2 != line.size() - comma - 1) {
            throw std::runtime_error(path + ": malformed row " + line);
        }
        f.insert(RatePair{r1, r2, Provenance{"csv", {}, row++}});
    }
    return f;
}

void write_frontier_json(const Frontier& f, const std::string& path, const ParamNamer& namer) {
    nlohmann::json arr = nlohmann::json::array();
    for (const RatePair& p : f.points()) {
        nlohmann::json obj;
        obj["r1"] = p.r1;
        obj["r2"] = p.r2;
        obj["scheme"] = p.provenance.scheme;
        nlohmann::json params = nlohmann::json::object();
        std::vector<std::string> names;
        if (namer) names = namer(p.provenance.scheme, p.provenance.values.size());
        for (std::size_t i = 0; i < p.provenance.values.size(); ++i) {
            const std::string key = i < names.size() ? names[i] : "p" + std::to_string(i);
            params[key] = p.provenance.values[i];
        }
        obj["params"] = std::move(params);
        arr.push_back(std::move(obj));
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << arr.dump(2) << '\n';
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace gicreg
