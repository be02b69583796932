#pragma once

#include <span>
#include <vector>

namespace gicreg {

/// True iff the AR polynomial 1 - sum_l ar[l-1] z^l has all roots strictly
/// outside the unit circle (Schur-Cohn test). An empty list is stable.
bool ar_stable(std::span<const double> ar);

/// |1 - sum_l c[l-1] e^{j l w}|^2.
double one_minus_poly_mod2(std::span<const double> coeffs, double omega);

/// Rational spectral density of a stationary ARMA process,
///   S(w) = gain * |1 - sum kappa_l e^{jlw}|^2 / |1 - sum rho_l e^{jlw}|^2,
/// with gain chosen so that the mean of S over [0,2pi) equals `power`
/// (the per-symbol variance). Coefficient lists may be empty; both empty
/// gives the constant (white) spectrum S = power.
class ArmaSpectrum {
public:
    /// Throws std::invalid_argument on an unstable AR polynomial,
    /// negative power, or non-finite coefficients.
    static ArmaSpectrum make(std::vector<double> ar, std::vector<double> ma, double power);

    double eval(double omega) const;

    /// |1 - sum kappa_l e^{-jlw}| / |1 - sum rho_l e^{-jlw}|, the
    /// unnormalized filter magnitude response.
    double frequency_response_modulus(double omega) const;

    double power() const { return power_; }
    double gain() const { return gain_; }
    const std::vector<double>& ar() const { return ar_; }
    const std::vector<double>& ma() const { return ma_; }
    bool is_white() const { return ar_.empty() && ma_.empty(); }

private:
    ArmaSpectrum() = default;

    std::vector<double> ar_;
    std::vector<double> ma_;
    double power_ = 0.0;
    double gain_ = 0.0;
};

/// Truncated cosine-series density
///   S(w) = power * (1 + 2 * sum_k r_k cos(k w)),
/// valid iff the shape factor is non-negative on a dense grid.
class CosineSeriesSpectrum {
public:
    /// Throws std::invalid_argument if the density dips below -1e-12 on
    /// the 4096-point construction grid, or on negative power.
    static CosineSeriesSpectrum make(std::vector<double> coeffs, double power);

    double eval(double omega) const;

    double power() const { return power_; }
    const std::vector<double>& coeffs() const { return coeffs_; }

private:
    CosineSeriesSpectrum() = default;

    std::vector<double> coeffs_;
    double power_ = 0.0;
};

}  // namespace gicreg
