#include "gicreg/spectrum.hpp"

#include "gicreg/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace gicreg {

namespace {

void require_finite(std::span<const double> v, const char* what) {
    for (double x : v) {
        if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + " must be finite");
    }
}

}  // namespace

bool ar_stable(std::span<const double> ar) {
    if (ar.empty()) return true;
    // Roots of 1 - sum rho_l z^l outside the unit circle iff the reversed
    // polynomial z^p - rho_1 z^{p-1} - ... - rho_p has all roots inside;
    // run the Schur-Cohn step-down on its coefficients.
    std::vector<double> a(ar.size() + 1);
    a[0] = 1.0;
    for (std::size_t l = 0; l < ar.size(); ++l) {
        if (!std::isfinite(ar[l])) return false;
        a[l + 1] = -ar[l];
    }
    std::size_t deg = ar.size();
    while (deg > 0) {
        const double k = a[deg] / a[0];
        if (!(std::abs(k) < 1.0)) return false;
        const double denom = 1.0 - k * k;
        std::vector<double> b(deg);
        for (std::size_t i = 0; i < deg; ++i) {
            b[i] = (a[i] - k * a[deg - i]) / denom;
        }
        a = std::move(b);
        --deg;
    }
    return true;
}

double one_minus_poly_mod2(std::span<const double> coeffs, double omega) {
    double re = 1.0;
    double im = 0.0;
    // Horner on z = e^{jw}: sum c_l z^l = z*(c_1 + z*(c_2 + ...)).
    const double cw = std::cos(omega);
    const double sw = std::sin(omega);
    double hre = 0.0, him = 0.0;
    for (std::size_t l = coeffs.size(); l-- > 0;) {
        const double tre = coeffs[l] + (hre * cw - him * sw);
        const double tim = hre * sw + him * cw;
        hre = tre;
        him = tim;
    }
    // multiply the accumulated polynomial by z once.
    re -= hre * cw - him * sw;
    im -= hre * sw + him * cw;
    return re * re + im * im;
}

ArmaSpectrum ArmaSpectrum::make(std::vector<double> ar, std::vector<double> ma, double power) {
    require_finite(ar, "AR coefficients");
    require_finite(ma, "MA coefficients");
    if (!std::isfinite(power) || power < 0.0) {
        throw std::invalid_argument("spectrum power must be finite and >= 0");
    }
    if (!ar_stable(ar)) {
        throw std::invalid_argument("unstable AR polynomial (root on or inside the unit circle)");
    }

    ArmaSpectrum s;
    s.ar_ = std::move(ar);
    s.ma_ = std::move(ma);
    s.power_ = power;

    // Mean of the unit-gain density; closed form for orders up to (1,1),
    // numeric otherwise.
    double mean;
    if (s.ar_.size() <= 1 && s.ma_.size() <= 1) {
        const double rho = s.ar_.empty() ? 0.0 : s.ar_[0];
        const double kap = s.ma_.empty() ? 0.0 : s.ma_[0];
        mean = (1.0 + kap * kap - 2.0 * kap * rho) / (1.0 - rho * rho);
    } else {
        auto unit = [&s](double w) {
            return one_minus_poly_mod2(s.ma_, w) / one_minus_poly_mod2(s.ar_, w);
        };
        const double rough = 1.0 + std::abs(unit(0.0)) + std::abs(unit(M_PI));
        mean = periodic_mean(unit, 1e-13 * rough);
    }
    s.gain_ = power / mean;
    return s;
}

double ArmaSpectrum::eval(double omega) const {
    if (gain_ == 0.0) return 0.0;
    const double v = gain_ * one_minus_poly_mod2(ma_, omega) / one_minus_poly_mod2(ar_, omega);
    return v < 0.0 ? 0.0 : v;
}

double ArmaSpectrum::frequency_response_modulus(double omega) const {
    return std::sqrt(one_minus_poly_mod2(ma_, omega) / one_minus_poly_mod2(ar_, omega));
}

CosineSeriesSpectrum CosineSeriesSpectrum::make(std::vector<double> coeffs, double power) {
    require_finite(coeffs, "cosine coefficients");
    if (!std::isfinite(power) || power < 0.0) {
        throw std::invalid_argument("spectrum power must be finite and >= 0");
    }
    auto shape = [&coeffs](double w) {
        double v = 1.0;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            v += 2.0 * coeffs[k] * std::cos(static_cast<double>(k + 1) * w);
        }
        return v;
    };
    // Non-negative definiteness checked on a dense grid including both
    // interval endpoints.
    const int grid = 4096;
    double min_v = shape(2.0 * M_PI);
    for (int j = 0; j <= grid; ++j) {
        min_v = std::min(min_v, shape(2.0 * M_PI * j / grid));
    }
    if (min_v < -1e-12) {
        throw std::invalid_argument("cosine series density is negative (min shape value " +
                                    std::to_string(min_v) + ")");
    }

    CosineSeriesSpectrum s;
    s.coeffs_ = std::move(coeffs);
    s.power_ = power;
    return s;
}

double CosineSeriesSpectrum::eval(double omega) const {
    double v = 1.0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        v += 2.0 * coeffs_[k] * std::cos(static_cast<double>(k + 1) * omega);
    }
    v *= power_;
    return v < 0.0 ? 0.0 : v;
}

}  // namespace gicreg
