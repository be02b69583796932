#include "gicreg/toeplitz.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace gicreg {

namespace {

// iterative radix-2 FFT, in place
void fft(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * M_PI / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const std::complex<double> u = a[i + j];
                const std::complex<double> v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

bool is_pow2(int x) { return x > 0 && (x & (x - 1)) == 0; }

}  // namespace

std::vector<double> autocovariance(const ArmaSpectrum& s, int lags, int grid_points) {
    if (lags < 1) throw std::invalid_argument("autocovariance needs lags >= 1");
    if (!is_pow2(grid_points) || grid_points < 2 * lags) {
        throw std::invalid_argument("grid_points must be a power of two >= 2*lags");
    }
    std::vector<double> r(static_cast<std::size_t>(lags), 0.0);
    if (s.is_white()) {
        r[0] = s.power();
        return r;
    }
    std::vector<std::complex<double>> samples(static_cast<std::size_t>(grid_points));
    const double step = 2.0 * M_PI / grid_points;
    for (int j = 0; j < grid_points; ++j) {
        samples[static_cast<std::size_t>(j)] = s.eval(step * j);
    }
    fft(samples);
    for (int k = 0; k < lags; ++k) {
        r[static_cast<std::size_t>(k)] = samples[static_cast<std::size_t>(k)].real() / grid_points;
    }
    return r;
}

Eigen::MatrixXd arma_covariance(const ArmaSpectrum& s, int n) {
    if (n < 1) throw std::invalid_argument("covariance blocklength must be >= 1");
    const std::vector<double> r = autocovariance(s, n);
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m(i, j) = r[static_cast<std::size_t>(std::abs(i - j))];
        }
    }
    return m;
}

Eigen::MatrixXd arma_covariance_recursion(const ArmaSpectrum& s, int n) {
    if (n < 1) throw std::invalid_argument("covariance blocklength must be >= 1");
    if (s.ar().size() > 1 || s.ma().size() > 1) {
        throw std::invalid_argument("recursion covariance implemented for orders up to (1,1)");
    }
    const double rho = s.ar().empty() ? 0.0 : s.ar()[0];
    const double kap = s.ma().empty() ? 0.0 : s.ma()[0];
    // columns of M = A^{-1} B via the row recurrence x_i = b_i + rho*x_{i-1}
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = 1.0;
        if (i > 0) m(i, i - 1) = -kap;
    }
    for (int i = 1; i < n; ++i) {
        m.row(i) += rho * m.row(i - 1);
    }
    return s.gain() * (m * m.transpose());
}

double toeplitz_logdet(std::span<const double> t) {
    const std::size_t n = t.size();
    if (n == 0) throw std::invalid_argument("toeplitz_logdet: empty first column");
    if (!(t[0] > 0.0)) throw std::invalid_argument("toeplitz_logdet: matrix not positive definite");
    double e = t[0];
    double ld = std::log(e);
    if (n == 1) return ld;
    std::vector<double> a(n, 0.0);
    std::vector<double> scratch(n, 0.0);
    for (std::size_t k = 1; k < n; ++k) {
        double acc = t[k];
        for (std::size_t j = 1; j < k; ++j) acc -= a[j] * t[k - j];
        const double ref = acc / e;
        for (std::size_t j = 1; j < k; ++j) scratch[j] = a[j] - ref * a[k - j];
        for (std::size_t j = 1; j < k; ++j) a[j] = scratch[j];
        a[k] = ref;
        e *= (1.0 - ref * ref);
        if (!(e > 0.0)) throw std::invalid_argument("toeplitz_logdet: matrix not positive definite");
        ld += std::log(e);
    }
    return ld;
}

std::string to_string(OracleTerm term) {
    switch (term) {
        case OracleTerm::Cond: return "cond";
        case OracleTerm::Interference: return "interference";
        case OracleTerm::Direct: return "direct";
    }
    return "unknown";
}

std::optional<OracleTerm> oracle_term_from_string(std::string_view name) {
    for (OracleTerm t : {OracleTerm::Cond, OracleTerm::Interference, OracleTerm::Direct}) {
        if (to_string(t) == name) return t;
    }
    return std::nullopt;
}

namespace {

constexpr double kLn2 = 0.69314718055994530942;

std::vector<double> combine(double base, std::span<const double> r1, double c1,
                            std::span<const double> r2, double c2) {
    std::vector<double> out(r1.size());
    for (std::size_t k = 0; k < r1.size(); ++k) {
        out[k] = c1 * r1[k] + c2 * r2[k];
    }
    out[0] += base;
    return out;
}

}  // namespace

double finite_n_rate(OracleTerm term, const ChannelParams& ch, const ArmaSpectrum& s1,
                     const ArmaSpectrum& s2, int n) {
    if (n < 1) throw std::invalid_argument("finite_n_rate needs n >= 1");
    const std::vector<double> r1 = autocovariance(s1, n);
    const std::vector<double> r2 = autocovariance(s2, n);
    const double norm = 1.0 / (2.0 * n * kLn2);  // (1/2n) logdet, in bits
    switch (term) {
        case OracleTerm::Cond: {
            // I(X1;Y1|X2) = 0.5 logdet(I + R1)
            return norm * toeplitz_logdet(combine(1.0, r1, 1.0, r2, 0.0));
        }
        case OracleTerm::Interference: {
            // I(X2;Y1) = 0.5 logdet(I + R1 + a12 R2) - 0.5 logdet(I + R1)
            const double full = toeplitz_logdet(combine(1.0, r1, 1.0, r2, ch.a12));
            const double part = toeplitz_logdet(combine(1.0, r1, 1.0, r2, 0.0));
            return norm * (full - part);
        }
        case OracleTerm::Direct: {
            // I(X2;Y2) = 0.5 logdet(I + a21 R1 + R2) - 0.5 logdet(I + a21 R1)
            const double full = toeplitz_logdet(combine(1.0, r1, ch.a21, r2, 1.0));
            const double part = toeplitz_logdet(combine(1.0, r1, ch.a21, r2, 0.0));
            return norm * (full - part);
        }
    }
    throw std::invalid_argument("unknown oracle term");
}

double spectral_limit_rate(OracleTerm term, const ChannelParams& ch, const ArmaSpectrum& s1,
                           const ArmaSpectrum& s2, const QuadratureConfig& quad) {
    switch (term) {
        case OracleTerm::Cond:
            return phi([&](double w) { return s1.eval(w); }, quad);
        case OracleTerm::Interference:
            return phi([&](double w) { return ch.a12 * s2.eval(w) / (1.0 + s1.eval(w)); }, quad);
        case OracleTerm::Direct:
            return phi([&](double w) { return s2.eval(w) / (1.0 + ch.a21 * s1.eval(w)); }, quad);
    }
    throw std::invalid_argument("unknown oracle term");
}

std::vector<OracleReport> convergence_report(const ChannelParams& ch, const ArmaSpectrum& s1,
                                             const ArmaSpectrum& s2, OracleTerm term,
                                             std::span<const int> n_list,
                                             const QuadratureConfig& quad) {
    if (n_list.empty()) throw std::invalid_argument("convergence report needs a non-empty n list");
    for (std::size_t i = 1; i < n_list.size(); ++i) {
        if (n_list[i] <= n_list[i - 1]) {
            throw std::invalid_argument("n list must be strictly ascending");
        }
    }
    const double limit = spectral_limit_rate(term, ch, s1, s2, quad);
    std::vector<OracleReport> reports;
    reports.reserve(n_list.size());
    for (int n : n_list) {
        OracleReport rep;
        rep.term = to_string(term);
        rep.n = n;
        rep.finite_rate = finite_n_rate(term, ch, s1, s2, n);
        rep.limit_rate = limit;
        rep.abs_error = std::abs(rep.finite_rate - rep.limit_rate);
        reports.push_back(std::move(rep));
    }
    return reports;
}

bool non_convergent(std::span<const OracleReport> reports) {
    if (reports.size() < 2) return false;
    // errors at quadrature/roundoff level carry no trend information
    constexpr double kNoiseFloor = 1e-9;
    if (reports.back().abs_error <= kNoiseFloor) return false;
    return reports.back().abs_error > reports.front().abs_error;
}

}  // namespace gicreg
