#pragma once

#include "gicreg/channel.hpp"
#include "gicreg/frontier.hpp"
#include "gicreg/quadrature.hpp"
#include "gicreg/schemes.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gicreg {

enum class SchemeId {
    Sason,        // Theorem-1 time sharing, white inputs
    Theorem2,     // general cosine-series spectra
    Arma,         // ARMA filters, tied across segments
    ArmaSplit,    // ARMA filters, free per segment
    HkSc,         // rate splitting, successive cancellation
    HkSim,        // rate splitting, simultaneous decoding
    HkCorollary,  // union of HkSc and HkSim, hulled
    HkBaseline,   // Gaussian HK baseline region
};

std::string to_string(SchemeId id);
std::optional<SchemeId> scheme_from_string(std::string_view name);

/// Flat parameter names for a scheme; `dim` disambiguates the
/// cosine-series scheme whose truncation length is variable.
std::vector<std::string> scheme_param_names(SchemeId id, std::size_t dim);

/// One grid dimension: lo + k*step for k = 0.. while <= hi (+eps);
/// step == 0 pins the dimension at lo.
struct GridAxis {
    double lo = 0.0;
    double hi = 0.0;
    double step = 0.0;

    std::uint64_t count() const;
    double value(std::uint64_t k) const;
};

struct GridSpec {
    std::vector<std::pair<std::string, GridAxis>> axes;

    std::uint64_t total_points() const;
    void decode(std::uint64_t index, std::vector<double>& out) const;
};

struct ParamSupport {
    double lo;
    double hi;
};
std::vector<ParamSupport> scheme_support(SchemeId id, std::size_t dim);

/// Default grid: [0,1] parameters at unit_step, (-1,1) parameters at
/// filter_step clipped to +-0.99.
GridSpec default_grid(SchemeId id, double unit_step = 1e-2, double filter_step = 2e-2,
                      int cosine_terms = 1);

struct SearchBudget {
    std::uint64_t max_evaluations = 200000;
    std::uint64_t seed = 1;
    int refinement_rounds = 3;

    void validate() const;
};

struct SearchOptions {
    int threads = 0;  // <= 0: hardware concurrency
    QuadratureConfig quad;
    Theorem5Weighting weighting = Theorem5Weighting::TimeSharing;
};

/// Candidate rate points contributed by one parameter vector: one
/// rectangle corner for most schemes, two pentagon corners for the
/// simultaneous-decoding scheme, polytope vertices for the baseline.
/// Parameter vectors that violate a construction invariant (e.g. a
/// negative cosine-series density) contribute nothing.
std::vector<RatePair> evaluate_scheme_point(const ChannelParams& ch, SchemeId id,
                                            std::span<const double> values,
                                            const QuadratureConfig& quad,
                                            Theorem5Weighting weighting);

/// Exhaustive evaluation at every grid point; deterministic for fixed
/// inputs regardless of thread count.
Frontier grid_search(const ChannelParams& ch, SchemeId id, const GridSpec& grid,
                     const SearchOptions& opts = {});

/// Seeded uniform sampling with shrinking refinement boxes around the
/// running frontier (or around `anchor` when provided). Deterministic
/// for a fixed seed regardless of thread count.
Frontier random_refine_search(const ChannelParams& ch, SchemeId id, const SearchBudget& budget,
                              const SearchOptions& opts = {},
                              const std::vector<double>* anchor = nullptr);

}  // namespace gicreg
