#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gicreg {

/// Two-user Gaussian interference channel in standard form:
///   Y1 = X1 + sqrt(a12)*X2 + Z1,   Y2 = sqrt(a21)*X1 + X2 + Z2,
/// with unit-variance noises and per-user powers P1, P2. All quantities
/// are linear (not dB).
struct ChannelParams {
    double p1;
    double p2;
    double a12;
    double a21;

    /// Validates and constructs. Throws std::invalid_argument on
    /// non-positive powers, negative gains, or non-finite values.
    static ChannelParams validated(double p1, double p2, double a12, double a21);
};

/// eta(x) = 0.5*log2(1+x), the Gaussian point-to-point rate for SNR x.
/// Throws std::invalid_argument for negative or non-finite x.
double eta(double x);

/// Tag recording which scheme and which parameter point produced a rate
/// pair. `values` line up with scheme_param_names(scheme); `ordinal` is
/// the deterministic generation index used to break exact ties.
struct Provenance {
    std::string scheme;
    std::vector<double> values;
    std::uint64_t ordinal = 0;
};

/// An achievable rate pair in bits per channel use.
struct RatePair {
    double r1 = 0.0;
    double r2 = 0.0;
    Provenance provenance;
};

}  // namespace gicreg
