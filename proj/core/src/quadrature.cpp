#include "gicreg/quadrature.hpp"

#include "gicreg/channel.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace gicreg {

namespace detail {

const std::vector<double>& cos_grid(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<double>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<double> g(static_cast<std::size_t>(n));
        const double step = 2.0 * M_PI / n;
        for (int j = 0; j < n; ++j) g[static_cast<std::size_t>(j)] = std::cos(step * j);
        it = cache.emplace(n, std::move(g)).first;
    }
    return it->second;
}

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa, double b,
                     double fb, double fm, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_step(f, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_periodic_integral(const std::function<double(double)>& f, double abs_tol) {
    // Seed with 16 panels so a periodic integrand cannot fool the first
    // Simpson estimate (the integrands here are symmetric about pi).
    const int panels = 16;
    const double width = 2.0 * M_PI / panels;
    double total = 0.0;
    double fa = f(0.0);
    for (int k = 0; k < panels; ++k) {
        const double a = width * k;
        const double b = a + width;
        const double fb = f(b);
        const double fm = f(0.5 * (a + b));
        const double whole = simpson(a, fa, b, fb, fm);
        total += adaptive_step(f, a, fa, b, fb, fm, whole, abs_tol / panels, 48);
        fa = fb;
    }
    return total;
}

}  // namespace detail

double phi_from_samples(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("phi_from_samples: empty grid");
    constexpr double inv_ln2 = 1.4426950408889634074;
    double acc = 0.0;
    for (double v : values) acc += std::log1p(detail::check_sample(v));
    return acc * inv_ln2 / (2.0 * static_cast<double>(values.size()));
}

double closed_form_ar(double rho, double power) {
    if (!std::isfinite(rho) || std::abs(rho) >= 1.0) {
        throw std::invalid_argument("closed_form_ar requires |rho| < 1");
    }
    if (!std::isfinite(power) || power < 0.0) {
        throw std::invalid_argument("closed_form_ar requires power >= 0");
    }
    const double r = std::abs(rho);
    if (r < 1e-8) return eta(power);
    const double chi = 1.0 + r * r + (1.0 - r * r) * power;
    const double a = chi / (2.0 * r);
    // K = r/zeta with zeta the root of smaller modulus; written as
    // r*(a + sqrt(a^2-1)) to avoid cancellation for large a.
    const double k = r * (a + std::sqrt(a * a - 1.0));
    return 0.5 * std::log2(k);
}

double periodic_mean(const std::function<double(double)>& f, double tol) {
    return detail::adaptive_periodic_integral(f, tol * 2.0 * M_PI) / (2.0 * M_PI);
}

}  // namespace gicreg
