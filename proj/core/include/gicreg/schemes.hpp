#pragma once

#include "gicreg/channel.hpp"
#include "gicreg/frontier.hpp"
#include "gicreg/quadrature.hpp"
#include "gicreg/spectrum.hpp"

#include <array>
#include <span>
#include <vector>

namespace gicreg {

/// Time-share and power-split point of the Sato/Sason scheme: user 1
/// spends alpha*P1 of its energy in mode 1 (fraction lambda of the time)
/// and the rest in mode 2; user 2 spends beta*P2 in mode 1. lambda in
/// {0,1} degenerates to a single mode whose vanished term contributes 0.
struct SasonParams {
    double alpha;
    double beta;
    double lambda;

    void validate() const;
};

/// Per-mode energies of one user; mode2 is the exact complement so that
/// mode1 + mode2 reconstructs the total power.
struct SegmentEnergies {
    double mode1;
    double mode2;
};
SegmentEnergies split_energy(double fraction, double total_power);

/// One filter slot: AR and MA coefficient lists (shape only, power is
/// assigned by the scheme).
struct FilterCoeffs {
    std::vector<double> ar;
    std::vector<double> ma;

    bool is_identity() const { return ar.empty() && ma.empty(); }
};

/// Theorem-3 style parameter point: base time/power split plus one filter
/// per user and segment. The tied construction uses the same filter for
/// both segments of a user; the split variant frees all four slots.
struct ArmaSchemeParams {
    SasonParams base;
    FilterCoeffs user1_seg1;
    FilterCoeffs user2_seg1;
    FilterCoeffs user1_seg2;
    FilterCoeffs user2_seg2;

    static ArmaSchemeParams tied(SasonParams base, FilterCoeffs user1, FilterCoeffs user2);

    void validate() const;
};

/// Rate-splitting parameter vector (support [0,1]^5 x (-1,1)^6): time
/// share and power splits plus one AR(1) pole per stream. xi2 splits user
/// 2's mode-1 power into private (u2) and common (v2); xi1 does the same
/// for user 1 in mode 2.
struct HkSchemeParams {
    double alpha;
    double beta;
    double lambda;
    double xi1;
    double xi2;
    double rho_x1;
    double rho_x2;
    double rho_u1;
    double rho_v1;
    double rho_u2;
    double rho_v2;

    void validate() const;
};

/// Gaussian Han-Kobayashi baseline splits (degenerate time-sharing Q).
struct HkBaselineParams {
    double xi1;
    double xi2;

    void validate() const;
};

/// Weighting of the second user's mode-1 bracket in the
/// simultaneous-decoding rates: TimeSharing multiplies it by the mode-1
/// fraction lambda, consistent with the time-sharing construction;
/// AsPrinted keeps the alternative 1-lambda weight for comparison.
/// TimeSharing is the default everywhere.
enum class Theorem5Weighting { TimeSharing, AsPrinted };

/// Pentagon bounds of the simultaneous-decoding scheme: the region for
/// one parameter point is {R1 <= r1_max, R2 <= r2_max, R1+R2 <= r_sum}.
struct PentagonBounds {
    double r1_max;
    double r2_max;
    double r_sum;

    /// Dominant corners of the pentagon, clamped to non-negative rates.
    std::array<RatePair, 2> corners() const;
};

/// Bounds of the baseline HK region for one (xi1, xi2):
/// R1<=rho1, R2<=rho2, R1+R2<=rho12, 2R1+R2<=rho10, R1+2R2<=rho20.
struct HkRegionBounds {
    double rho1;
    double rho2;
    double rho12;
    double rho10;
    double rho20;
};

/// Spectrum shape for the general-spectra theorem slots; power is filled
/// in by the scheme.
struct SpectrumShape {
    enum class Kind { Arma, Cosine };

    Kind kind = Kind::Cosine;
    FilterCoeffs filter;           // Kind::Arma
    std::vector<double> cosine;    // Kind::Cosine

    static SpectrumShape arma(FilterCoeffs f);
    static SpectrumShape cosine_series(std::vector<double> coeffs);
    static SpectrumShape white();
};

RatePair sason_rates(const ChannelParams& ch, const SasonParams& p);

/// General-spectra rates; shape slots are (nu11, nu21, nu12, nu22) =
/// (user1 mode1, user2 mode1, user1 mode2, user2 mode2).
RatePair theorem2_rates(const ChannelParams& ch, const SasonParams& p,
                        const std::array<SpectrumShape, 4>& shapes,
                        const QuadratureConfig& quad = {});

RatePair theorem3_rates(const ChannelParams& ch, const ArmaSchemeParams& p,
                        const QuadratureConfig& quad = {});

RatePair theorem4_rates(const ChannelParams& ch, const HkSchemeParams& p,
                        const QuadratureConfig& quad = {});

PentagonBounds theorem5_rates(const ChannelParams& ch, const HkSchemeParams& p,
                              const QuadratureConfig& quad = {},
                              Theorem5Weighting weighting = Theorem5Weighting::TimeSharing);

/// Rectangle corner (theorem 4) and pentagon corners (theorem 5) for one
/// parameter point, provenance-tagged; used by the corollary region.
std::vector<RatePair> hk_combined_points(const ChannelParams& ch, const HkSchemeParams& p,
                                         const QuadratureConfig& quad = {},
                                         Theorem5Weighting weighting = Theorem5Weighting::TimeSharing);

/// Union of the rate-splitting rectangles and pentagons over a list of
/// parameter points, closed under time sharing (convex hull). Throws
/// std::invalid_argument on an empty list.
Frontier corollary_region_points(const ChannelParams& ch, std::span<const HkSchemeParams> points,
                                 const QuadratureConfig& quad = {},
                                 Theorem5Weighting weighting = Theorem5Weighting::TimeSharing);

HkRegionBounds hk_baseline_region(const ChannelParams& ch, const HkBaselineParams& p);

/// Pareto-maximal vertices of the baseline polytope.
std::vector<RatePair> hk_baseline_corner_points(const HkRegionBounds& b);

}  // namespace gicreg
