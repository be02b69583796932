#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace gicreg {

/// Integration settings for the spectral functionals. The integrands are
/// smooth 2*pi-periodic functions, for which the plain trapezoid rule
/// converges geometrically; the adaptive rule is for spectra with poles
/// close to the unit circle.
struct QuadratureConfig {
    enum class Method { FixedTrapezoid, Adaptive };

    Method method = Method::FixedTrapezoid;
    int points = 4096;    // fixed rule sample count, >= 16
    double tol = 1e-10;   // absolute tolerance of the adaptive rule

    void validate() const {
        if (points < 16) throw std::invalid_argument("quadrature points must be >= 16");
        if (!(tol > 0.0)) throw std::invalid_argument("quadrature tol must be > 0");
    }
};

namespace detail {

/// Shared cos(2*pi*j/n) tables for the fixed rule. Returns an immutable
/// reference valid for the program lifetime.
const std::vector<double>& cos_grid(int n);

inline double check_sample(double v) {
    if (!std::isfinite(v)) throw std::domain_error("phi: non-finite integrand sample");
    if (v < 0.0) {
        if (v < -1e-12) throw std::domain_error("phi: negative integrand sample");
        v = 0.0;
    }
    return v;
}

/// Adaptive Simpson integral of f over [0,2pi] to the given absolute
/// tolerance.
double adaptive_periodic_integral(const std::function<double(double)>& f, double abs_tol);

}  // namespace detail

/// phi[f] = (1/4pi) * integral over [0,2pi) of log2(1+f(w)) dw.
/// f must be >= 0 (samples below -1e-12 are rejected, tiny negatives are
/// clamped) and finite.
template <class F>
double phi(F&& f, const QuadratureConfig& cfg = {}) {
    cfg.validate();
    constexpr double inv_ln2 = 1.4426950408889634074;
    if (cfg.method == QuadratureConfig::Method::FixedTrapezoid) {
        const int n = cfg.points;
        const double step = 2.0 * M_PI / n;
        double acc = 0.0;
        for (int j = 0; j < n; ++j) {
            acc += std::log1p(detail::check_sample(f(step * j)));
        }
        return acc * inv_ln2 / (2.0 * n);
    }
    std::function<double(double)> g = [&f](double w) {
        return std::log1p(detail::check_sample(f(w))) * inv_ln2;
    };
    return detail::adaptive_periodic_integral(g, cfg.tol * 4.0 * M_PI) / (4.0 * M_PI);
}

/// phi over integrand values already tabulated on the uniform n-point
/// grid w_j = 2*pi*j/n (the fixed-trapezoid fast path).
double phi_from_samples(std::span<const double> values);

/// Closed form of phi for a pure first-order AR spectrum of the given
/// per-symbol power, via Cauchy's integral formula. The rho -> 0 limit
/// is eta(power); phi depends on rho only through rho^2. Throws for
/// |rho| >= 1 or invalid power.
double closed_form_ar(double rho, double power);

/// Mean of f over [0,2pi), i.e. (1/2pi) * integral. Used for power
/// normalization of spectra; adaptive to absolute tolerance tol.
double periodic_mean(const std::function<double(double)>& f, double tol = 1e-12);

}  // namespace gicreg
