#include "gicreg/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace gicreg {

std::string to_string(SchemeId id) {
    switch (id) {
        case SchemeId::Sason: return "sason";
        case SchemeId::Theorem2: return "theorem2";
        case SchemeId::Arma: return "arma";
        case SchemeId::ArmaSplit: return "arma-split";
        case SchemeId::HkSc: return "hk-sc";
        case SchemeId::HkSim: return "hk-sim";
        case SchemeId::HkCorollary: return "hk-corollary";
        case SchemeId::HkBaseline: return "hk-baseline";
    }
    return "unknown";
}

std::optional<SchemeId> scheme_from_string(std::string_view name) {
    for (SchemeId id : {SchemeId::Sason, SchemeId::Theorem2, SchemeId::Arma, SchemeId::ArmaSplit,
                        SchemeId::HkSc, SchemeId::HkSim, SchemeId::HkCorollary,
                        SchemeId::HkBaseline}) {
        if (to_string(id) == name) return id;
    }
    return std::nullopt;
}

namespace {

constexpr double kFilterClip = 0.99;

const std::vector<std::string> kHkNames = {"alpha",  "beta",   "lambda", "xi1",    "xi2",   "rho_x1",
                                           "rho_x2", "rho_u1", "rho_v1", "rho_u2", "rho_v2"};

std::size_t expected_dim(SchemeId id, std::size_t dim) {
    switch (id) {
        case SchemeId::Sason: return 3;
        case SchemeId::Theorem2:
            if (dim >= 3 && (dim - 3) % 4 == 0 && dim > 3) return dim;
            return 7;  // canonical: one coefficient per slot
        case SchemeId::Arma: return 7;
        case SchemeId::ArmaSplit: return 11;
        case SchemeId::HkSc:
        case SchemeId::HkSim:
        case SchemeId::HkCorollary: return 11;
        case SchemeId::HkBaseline: return 2;
    }
    return 0;
}

}  // namespace

std::vector<std::string> scheme_param_names(SchemeId id, std::size_t dim) {
    switch (id) {
        case SchemeId::Sason: return {"alpha", "beta", "lambda"};
        case SchemeId::Theorem2: {
            std::vector<std::string> names = {"alpha", "beta", "lambda"};
            const std::size_t m = dim >= 3 ? (dim - 3) / 4 : 1;
            for (const char* slot : {"r11", "r21", "r12", "r22"}) {
                for (std::size_t k = 1; k <= m; ++k) {
                    names.push_back(std::string(slot) + "_" + std::to_string(k));
                }
            }
            return names;
        }
        case SchemeId::Arma:
            return {"alpha", "beta", "lambda", "rho_x1", "rho_x2", "kappa_1", "kappa_2"};
        case SchemeId::ArmaSplit:
            return {"alpha",      "beta",      "lambda",     "rho_x1_s1", "kappa_1_s1", "rho_x2_s1",
                    "kappa_2_s1", "rho_x1_s2", "kappa_1_s2", "rho_x2_s2", "kappa_2_s2"};
        case SchemeId::HkSc:
        case SchemeId::HkSim:
        case SchemeId::HkCorollary: return kHkNames;
        case SchemeId::HkBaseline: return {"xi1", "xi2"};
    }
    return {};
}

std::uint64_t GridAxis::count() const {
    if (step <= 0.0 || hi <= lo) return 1;
    return static_cast<std::uint64_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

double GridAxis::value(std::uint64_t k) const {
    return count() == 1 ? lo : lo + static_cast<double>(k) * step;
}

std::uint64_t GridSpec::total_points() const {
    std::uint64_t total = axes.empty() ? 0 : 1;
    for (const auto& [name, axis] : axes) {
        const std::uint64_t c = axis.count();
        if (total > UINT64_MAX / c) throw std::overflow_error("grid too large");
        total *= c;
    }
    return total;
}

void GridSpec::decode(std::uint64_t index, std::vector<double>& out) const {
    out.resize(axes.size());
    for (std::size_t d = axes.size(); d-- > 0;) {
        const std::uint64_t c = axes[d].second.count();
        out[d] = axes[d].second.value(index % c);
        index /= c;
    }
}

std::vector<ParamSupport> scheme_support(SchemeId id, std::size_t dim) {
    const std::size_t n = expected_dim(id, dim);
    std::vector<ParamSupport> s(n, ParamSupport{0.0, 1.0});
    const auto names = scheme_param_names(id, n);
    for (std::size_t d = 0; d < n; ++d) {
        const std::string& name = names[d];
        const bool filter = name.rfind("rho", 0) == 0 || name.rfind("kappa", 0) == 0 ||
                            name.rfind("r1", 0) == 0 || name.rfind("r2", 0) == 0;
        if (filter) s[d] = ParamSupport{-kFilterClip, kFilterClip};
    }
    return s;
}

GridSpec default_grid(SchemeId id, double unit_step, double filter_step, int cosine_terms) {
    if (unit_step <= 0.0 || filter_step <= 0.0) {
        throw std::invalid_argument("grid steps must be positive");
    }
    std::size_t dim = expected_dim(id, 0);
    if (id == SchemeId::Theorem2) dim = 3 + 4 * static_cast<std::size_t>(cosine_terms);
    const auto names = scheme_param_names(id, dim);
    const auto support = scheme_support(id, dim);
    GridSpec g;
    for (std::size_t d = 0; d < dim; ++d) {
        const bool unit = support[d].lo == 0.0;
        g.axes.emplace_back(names[d],
                            GridAxis{support[d].lo, support[d].hi, unit ? unit_step : filter_step});
    }
    return g;
}

void SearchBudget::validate() const {
    if (max_evaluations == 0) throw std::invalid_argument("search budget must be positive");
    if (refinement_rounds <= 0) throw std::invalid_argument("refinement rounds must be positive");
}

namespace {

FilterCoeffs first_order(double rho, double kappa) {
    return FilterCoeffs{{rho}, {kappa}};
}

struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

SplitMix64 sample_rng(std::uint64_t seed, std::uint64_t round, std::uint64_t index) {
    SplitMix64 mixer{seed};
    std::uint64_t s = mixer.next();
    s ^= (round + 1) * 0xD6E8FEB86659FD93ULL;
    s ^= (index + 1) * 0xA3B195354A39B70DULL;
    return SplitMix64{s};
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(chunk_index) over [0, chunks) on a small pool and returns the
/// per-chunk frontiers merged in chunk order.
template <class Fn>
Frontier run_chunks(std::uint64_t chunks, int threads, Fn&& fn) {
    std::vector<Frontier> results(static_cast<std::size_t>(chunks));
    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= chunks) break;
            results[static_cast<std::size_t>(c)] = fn(c);
        }
    };
    const int nt = static_cast<int>(std::min<std::uint64_t>(
        static_cast<std::uint64_t>(resolve_threads(threads)), std::max<std::uint64_t>(chunks, 1)));
    if (nt <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nt));
        for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    Frontier out;
    for (Frontier& f : results) out.merge(f);
    return out;
}

constexpr std::uint64_t kOrdinalStride = 8;

}  // namespace

std::vector<RatePair> evaluate_scheme_point(const ChannelParams& ch, SchemeId id,
                                            std::span<const double> v,
                                            const QuadratureConfig& quad,
                                            Theorem5Weighting weighting) {
    const std::vector<double> values(v.begin(), v.end());
    auto tag = [&](RatePair p) {
        p.provenance.scheme = to_string(id);
        p.provenance.values = values;
        return p;
    };
    try {
        switch (id) {
            case SchemeId::Sason: {
                return {tag(sason_rates(ch, SasonParams{v[0], v[1], v[2]}))};
            }
            case SchemeId::Theorem2: {
                const std::size_t m = (v.size() - 3) / 4;
                std::array<SpectrumShape, 4> shapes;
                for (std::size_t slot = 0; slot < 4; ++slot) {
                    std::vector<double> coeffs(v.begin() + 3 + slot * m,
                                               v.begin() + 3 + (slot + 1) * m);
                    shapes[slot] = SpectrumShape::cosine_series(std::move(coeffs));
                }
                return {tag(theorem2_rates(ch, SasonParams{v[0], v[1], v[2]}, shapes, quad))};
            }
            case SchemeId::Arma: {
                auto p = ArmaSchemeParams::tied(SasonParams{v[0], v[1], v[2]},
                                                first_order(v[3], v[5]), first_order(v[4], v[6]));
                return {tag(theorem3_rates(ch, p, quad))};
            }
            case SchemeId::ArmaSplit: {
                ArmaSchemeParams p;
                p.base = SasonParams{v[0], v[1], v[2]};
                p.user1_seg1 = first_order(v[3], v[4]);
                p.user2_seg1 = first_order(v[5], v[6]);
                p.user1_seg2 = first_order(v[7], v[8]);
                p.user2_seg2 = first_order(v[9], v[10]);
                return {tag(theorem3_rates(ch, p, quad))};
            }
            case SchemeId::HkSc:
            case SchemeId::HkSim:
            case SchemeId::HkCorollary: {
                const HkSchemeParams p{v[0], v[1], v[2], v[3], v[4], v[5],
                                       v[6], v[7], v[8], v[9], v[10]};
                if (id == SchemeId::HkCorollary) {
                    // shares the phi terms between both decoders
                    return hk_combined_points(ch, p, quad, weighting);
                }
                std::vector<RatePair> out;
                if (id == SchemeId::HkSc) {
                    RatePair rect = theorem4_rates(ch, p, quad);
                    rect.provenance.scheme = "hk-sc";
                    rect.provenance.values = values;
                    out.push_back(std::move(rect));
                } else {
                    for (RatePair corner : theorem5_rates(ch, p, quad, weighting).corners()) {
                        corner.provenance.scheme = "hk-sim";
                        corner.provenance.values = values;
                        out.push_back(std::move(corner));
                    }
                }
                return out;
            }
            case SchemeId::HkBaseline: {
                const HkRegionBounds b = hk_baseline_region(ch, HkBaselineParams{v[0], v[1]});
                std::vector<RatePair> out;
                for (RatePair corner : hk_baseline_corner_points(b)) {
                    out.push_back(tag(std::move(corner)));
                }
                return out;
            }
        }
    } catch (const std::invalid_argument&) {
        // infeasible parameter combination (e.g. negative density): skip
        return {};
    }
    return {};
}

Frontier grid_search(const ChannelParams& ch, SchemeId id, const GridSpec& grid,
                     const SearchOptions& opts) {
    const std::size_t dim = grid.axes.size();
    if (dim != expected_dim(id, dim)) {
        throw std::invalid_argument("grid dimension does not match scheme " + to_string(id));
    }
    const auto names = scheme_param_names(id, dim);
    for (std::size_t d = 0; d < dim; ++d) {
        const auto& [name, axis] = grid.axes[d];
        if (name != names[d]) {
            throw std::invalid_argument("grid axis " + std::to_string(d) + " must be '" +
                                        names[d] + "', got '" + name + "'");
        }
        const bool filter = name.rfind("rho", 0) == 0 || name.rfind("kappa", 0) == 0 ||
                            name.rfind("r1", 0) == 0 || name.rfind("r2", 0) == 0;
        const double lo = filter ? std::nextafter(-1.0, 0.0) : 0.0;
        const double hi = filter ? std::nextafter(1.0, 0.0) : 1.0;
        if (axis.lo < lo || axis.hi > hi || axis.lo > axis.hi || axis.step < 0.0) {
            throw std::invalid_argument("grid axis '" + name + "' outside its support [" +
                                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
        }
    }
    const std::uint64_t total = grid.total_points();
    if (total == 0) throw std::invalid_argument("empty grid");
    if (total > 500000000ULL) {
        throw std::invalid_argument("grid has " + std::to_string(total) +
                                    " points; coarsen steps or fix dimensions");
    }
    const std::uint64_t chunk = 2048;
    const std::uint64_t chunks = (total + chunk - 1) / chunk;
    return run_chunks(chunks, opts.threads, [&](std::uint64_t c) {
        Frontier local;
        std::vector<double> values;
        const std::uint64_t begin = c * chunk;
        const std::uint64_t end = std::min(total, begin + chunk);
        for (std::uint64_t i = begin; i < end; ++i) {
            grid.decode(i, values);
            auto pts = evaluate_scheme_point(ch, id, values, opts.quad, opts.weighting);
            std::uint64_t sub = 0;
            for (RatePair& p : pts) {
                p.provenance.ordinal = i * kOrdinalStride + sub++;
                local.insert(std::move(p));
            }
        }
        return local;
    });
}

Frontier random_refine_search(const ChannelParams& ch, SchemeId id, const SearchBudget& budget,
                              const SearchOptions& opts, const std::vector<double>* anchor) {
    budget.validate();
    const std::size_t dim = anchor ? anchor->size() : expected_dim(id, 0);
    if (dim != expected_dim(id, dim)) {
        throw std::invalid_argument("anchor dimension does not match scheme " + to_string(id));
    }
    const auto support = scheme_support(id, dim);
    const int rounds = budget.refinement_rounds;
    const std::uint64_t per_round = std::max<std::uint64_t>(1, budget.max_evaluations / rounds);

    Frontier cumulative;
    std::uint64_t sample_base = 0;
    for (int r = 0; r < rounds; ++r) {
        std::uint64_t count = per_round;
        if (r == rounds - 1 && budget.max_evaluations > per_round * static_cast<std::uint64_t>(rounds)) {
            count += budget.max_evaluations - per_round * static_cast<std::uint64_t>(rounds);
        }

        // anchors: caller-supplied box in round 0, current frontier after
        std::vector<std::vector<double>> anchors;
        if (r == 0) {
            if (anchor) anchors.push_back(*anchor);
        } else {
            for (const RatePair& p : cumulative.points()) {
                if (p.provenance.values.size() == dim) anchors.push_back(p.provenance.values);
            }
        }
        const int shrink_pow = r + (anchor ? 1 : 0);
        const double width_factor = std::pow(0.4, shrink_pow);

        const std::uint64_t chunk = 1024;
        const std::uint64_t chunks = (count + chunk - 1) / chunk;
        Frontier round_front = run_chunks(chunks, opts.threads, [&](std::uint64_t c) {
            Frontier local;
            std::vector<double> values(dim);
            const std::uint64_t begin = c * chunk;
            const std::uint64_t end = std::min(count, begin + chunk);
            for (std::uint64_t i = begin; i < end; ++i) {
                SplitMix64 rng = sample_rng(budget.seed, static_cast<std::uint64_t>(r), i);
                for (std::size_t d = 0; d < dim; ++d) {
                    const double lo = support[d].lo;
                    const double hi = support[d].hi;
                    double v;
                    if (anchors.empty()) {
                        v = lo + rng.uniform() * (hi - lo);
                    } else {
                        const auto& a = anchors[static_cast<std::size_t>(i % anchors.size())];
                        const double w = 0.5 * (hi - lo) * width_factor;
                        v = a[d] + (2.0 * rng.uniform() - 1.0) * w;
                        v = std::clamp(v, lo, hi);
                    }
                    values[d] = v;
                }
                auto pts = evaluate_scheme_point(ch, id, values, opts.quad, opts.weighting);
                std::uint64_t sub = 0;
                for (RatePair& p : pts) {
                    p.provenance.ordinal = (sample_base + i) * kOrdinalStride + sub++;
                    local.insert(std::move(p));
                }
            }
            return local;
        });
        cumulative.merge(round_front);
        sample_base += count;
    }
    return cumulative;
}

}  // namespace gicreg
