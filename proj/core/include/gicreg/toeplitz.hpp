#pragma once

#include "gicreg/channel.hpp"
#include "gicreg/quadrature.hpp"
#include "gicreg/spectrum.hpp"

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gicreg {

/// Autocovariance r[0..lags-1] of the stationary Gaussian process with
/// the given spectrum, by numerical inverse transform of the density on
/// a dense frequency grid (power of two, default 2^16). White spectra
/// are returned exactly.
std::vector<double> autocovariance(const ArmaSpectrum& s, int lags, int grid_points = 65536);

/// Covariance matrix of n consecutive samples (symmetric PSD Toeplitz;
/// diagonal equals the spectrum power). Throws for n < 1.
Eigen::MatrixXd arma_covariance(const ArmaSpectrum& s, int n);

/// Finite-boundary covariance from the driving recursion written as
/// A x = sigma*B w (orders up to (1,1) only): gain * A^{-1} B B^T A^{-T}.
/// Edge rows are not stationary; the interior converges to
/// arma_covariance. Used as a cross-check of the stationary build.
Eigen::MatrixXd arma_covariance_recursion(const ArmaSpectrum& s, int n);

/// log det of the symmetric positive definite Toeplitz matrix with the
/// given first column, natural log, by Levinson-Durbin recursion with
/// additive accumulation of the prediction-error logs.
double toeplitz_logdet(std::span<const double> first_column);

/// The three finite-blocklength mutual-information shapes:
///   Cond          I(X1;Y1|X2)/n   (own link, interference removed)
///   Interference  I(X2;Y1)/n      (cross link, own signal as noise)
///   Direct        I(X2;Y2)/n      (own link, cross signal as noise)
enum class OracleTerm { Cond, Interference, Direct };

std::string to_string(OracleTerm term);
std::optional<OracleTerm> oracle_term_from_string(std::string_view name);

/// Exact normalized mutual information in bits/use from the log-det
/// formulas over the blocklength-n Toeplitz covariances.
double finite_n_rate(OracleTerm term, const ChannelParams& ch, const ArmaSpectrum& s1,
                     const ArmaSpectrum& s2, int n);

/// The corresponding Szego limit evaluated through phi.
double spectral_limit_rate(OracleTerm term, const ChannelParams& ch, const ArmaSpectrum& s1,
                           const ArmaSpectrum& s2, const QuadratureConfig& quad = {});

struct OracleReport {
    std::string term;
    int n = 0;
    double finite_rate = 0.0;
    double limit_rate = 0.0;
    double abs_error = 0.0;
};

/// Per-n comparison of the finite rate against the spectral limit.
/// n_list must be non-empty and ascending.
std::vector<OracleReport> convergence_report(const ChannelParams& ch, const ArmaSpectrum& s1,
                                             const ArmaSpectrum& s2, OracleTerm term,
                                             std::span<const int> n_list,
                                             const QuadratureConfig& quad = {});

/// True iff the error at the largest n exceeds the error at the smallest
/// and sits above the quadrature noise floor.
bool non_convergent(std::span<const OracleReport> reports);

}  // namespace gicreg
