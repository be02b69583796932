#include "gicreg/schemes.hpp"

#include "gicreg/gaussian_mi.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <variant>

namespace gicreg {

namespace {

void require_unit(double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
        throw std::invalid_argument(std::string(name) + " must lie in [0,1]");
    }
}

void require_open_unit(double v, const char* name) {
    if (!std::isfinite(v) || v <= -1.0 || v >= 1.0) {
        throw std::invalid_argument(std::string(name) + " must lie in (-1,1)");
    }
}

constexpr double kInvLn2 = 1.4426950408889634074;

template <class G>
double phi_grid(int n, G&& g) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
        acc += std::log1p(detail::check_sample(g(j)));
    }
    return acc * kInvLn2 / (2.0 * n);
}

/// Pure AR(1) density as a rational function of x = cos(w).
struct Ar1Density {
    double num = 0.0;  // power * (1 - rho^2)
    double d0 = 1.0;   // 1 + rho^2
    double d1 = 0.0;   // -2 rho

    double at(double x) const { return num / (d0 + d1 * x); }
};

Ar1Density ar1_density(double power, double rho) {
    return Ar1Density{power * (1.0 - rho * rho), 1.0 + rho * rho, -2.0 * rho};
}

void tabulate_ar1(std::vector<double>& out, const Ar1Density& d, const std::vector<double>& cosg) {
    out.resize(cosg.size());
    if (d.num == 0.0) {
        std::fill(out.begin(), out.end(), 0.0);
        return;
    }
    for (std::size_t j = 0; j < cosg.size(); ++j) out[j] = d.at(cosg[j]);
}

using AnySpectrum = std::variant<ArmaSpectrum, CosineSeriesSpectrum>;

AnySpectrum instantiate(const SpectrumShape& shape, double power) {
    if (shape.kind == SpectrumShape::Kind::Arma) {
        return ArmaSpectrum::make(shape.filter.ar, shape.filter.ma, power);
    }
    return CosineSeriesSpectrum::make(shape.cosine, power);
}

double eval_any(const AnySpectrum& s, double w) {
    return std::visit([w](const auto& sp) { return sp.eval(w); }, s);
}

void tabulate_any(std::vector<double>& out, const AnySpectrum& s, int n) {
    out.resize(static_cast<std::size_t>(n));
    if (const auto* arma = std::get_if<ArmaSpectrum>(&s);
        arma && arma->ar().size() <= 1 && arma->ma().size() <= 1) {
        // rational in cos(w); reuse the shared cosine table
        const auto& cosg = detail::cos_grid(n);
        const double rho = arma->ar().empty() ? 0.0 : arma->ar()[0];
        const double kap = arma->ma().empty() ? 0.0 : arma->ma()[0];
        const double g = arma->gain();
        for (int j = 0; j < n; ++j) {
            const double x = cosg[static_cast<std::size_t>(j)];
            const double v = g * (1.0 + kap * kap - 2.0 * kap * x) / (1.0 + rho * rho - 2.0 * rho * x);
            out[static_cast<std::size_t>(j)] = v < 0.0 ? 0.0 : v;
        }
        return;
    }
    const double step = 2.0 * M_PI / n;
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = eval_any(s, step * j);
}

/// Shared mode arithmetic of the Sato/Sason-style theorems. The four
/// spectra are (mode1 user1, mode1 user2, mode2 user1, mode2 user2);
/// entries for a vanished mode are unused.
struct TwoModeSpectra {
    double lambda;
    const AnySpectrum* s11 = nullptr;
    const AnySpectrum* s21 = nullptr;
    const AnySpectrum* s12 = nullptr;
    const AnySpectrum* s22 = nullptr;
};

RatePair two_mode_rates(const ChannelParams& ch, const TwoModeSpectra& m,
                        const QuadratureConfig& quad) {
    const double w1 = m.lambda;
    const double w2 = 1.0 - m.lambda;
    double r1 = 0.0;
    double r2 = 0.0;

    if (quad.method == QuadratureConfig::Method::FixedTrapezoid) {
        const int n = quad.points;
        std::vector<double> v1, v2;
        if (w1 > 0.0) {
            tabulate_any(v1, *m.s11, n);
            tabulate_any(v2, *m.s21, n);
            r1 += w1 * phi_grid(n, [&](int j) { return v1[static_cast<std::size_t>(j)]; });
            const double at_y1 = phi_grid(n, [&](int j) {
                return ch.a12 * v2[static_cast<std::size_t>(j)] / (1.0 + v1[static_cast<std::size_t>(j)]);
            });
            const double at_y2 = phi_grid(n, [&](int j) {
                return v2[static_cast<std::size_t>(j)] / (1.0 + ch.a21 * v1[static_cast<std::size_t>(j)]);
            });
            r2 += w1 * std::min(at_y1, at_y2);
        }
        if (w2 > 0.0) {
            tabulate_any(v1, *m.s12, n);
            tabulate_any(v2, *m.s22, n);
            r2 += w2 * phi_grid(n, [&](int j) { return v2[static_cast<std::size_t>(j)]; });
            const double at_y1 = phi_grid(n, [&](int j) {
                return v1[static_cast<std::size_t>(j)] / (1.0 + ch.a12 * v2[static_cast<std::size_t>(j)]);
            });
            const double at_y2 = phi_grid(n, [&](int j) {
                return ch.a21 * v1[static_cast<std::size_t>(j)] / (1.0 + v2[static_cast<std::size_t>(j)]);
            });
            r1 += w2 * std::min(at_y1, at_y2);
        }
        return RatePair{r1, r2, {}};
    }

    if (w1 > 0.0) {
        const AnySpectrum& s11 = *m.s11;
        const AnySpectrum& s21 = *m.s21;
        r1 += w1 * phi([&](double w) { return eval_any(s11, w); }, quad);
        const double at_y1 =
            phi([&](double w) { return ch.a12 * eval_any(s21, w) / (1.0 + eval_any(s11, w)); }, quad);
        const double at_y2 =
            phi([&](double w) { return eval_any(s21, w) / (1.0 + ch.a21 * eval_any(s11, w)); }, quad);
        r2 += w1 * std::min(at_y1, at_y2);
    }
    if (w2 > 0.0) {
        const AnySpectrum& s12 = *m.s12;
        const AnySpectrum& s22 = *m.s22;
        r2 += w2 * phi([&](double w) { return eval_any(s22, w); }, quad);
        const double at_y1 =
            phi([&](double w) { return eval_any(s12, w) / (1.0 + ch.a12 * eval_any(s22, w)); }, quad);
        const double at_y2 =
            phi([&](double w) { return ch.a21 * eval_any(s12, w) / (1.0 + eval_any(s22, w)); }, quad);
        r1 += w2 * std::min(at_y1, at_y2);
    }
    return RatePair{r1, r2, {}};
}

}  // namespace

void SasonParams::validate() const {
    require_unit(alpha, "alpha");
    require_unit(beta, "beta");
    require_unit(lambda, "lambda");
}

SegmentEnergies split_energy(double fraction, double total_power) {
    require_unit(fraction, "power fraction");
    // double complement so that one of the two subtractions is exact by
    // Sterbenz and mode1 + mode2 reconstructs the power bit for bit
    const double mode2 = total_power - fraction * total_power;
    const double mode1 = total_power - mode2;
    return SegmentEnergies{mode1, mode2};
}

ArmaSchemeParams ArmaSchemeParams::tied(SasonParams base, FilterCoeffs user1, FilterCoeffs user2) {
    ArmaSchemeParams p;
    p.base = base;
    p.user1_seg1 = user1;
    p.user1_seg2 = std::move(user1);
    p.user2_seg1 = user2;
    p.user2_seg2 = std::move(user2);
    return p;
}

void ArmaSchemeParams::validate() const {
    base.validate();
    for (const FilterCoeffs* f : {&user1_seg1, &user2_seg1, &user1_seg2, &user2_seg2}) {
        if (!ar_stable(f->ar)) throw std::invalid_argument("unstable filter in ARMA scheme");
    }
}

void HkSchemeParams::validate() const {
    require_unit(alpha, "alpha");
    require_unit(beta, "beta");
    require_unit(lambda, "lambda");
    require_unit(xi1, "xi1");
    require_unit(xi2, "xi2");
    require_open_unit(rho_x1, "rho_x1");
    require_open_unit(rho_x2, "rho_x2");
    require_open_unit(rho_u1, "rho_u1");
    require_open_unit(rho_v1, "rho_v1");
    require_open_unit(rho_u2, "rho_u2");
    require_open_unit(rho_v2, "rho_v2");
}

void HkBaselineParams::validate() const {
    require_unit(xi1, "xi1");
    require_unit(xi2, "xi2");
}

std::array<RatePair, 2> PentagonBounds::corners() const {
    // largest feasible single-user rates first; the sum bound may undercut
    // the per-user bounds
    const double r1c = std::min(r1_max, r_sum);
    const double r2c = std::min(r2_max, r_sum);
    const double r2_at_r1c = std::max(0.0, std::min(r2_max, r_sum - r1c));
    const double r1_at_r2c = std::max(0.0, std::min(r1_max, r_sum - r2c));
    return {RatePair{r1c, r2_at_r1c, {}}, RatePair{r1_at_r2c, r2c, {}}};
}

SpectrumShape SpectrumShape::arma(FilterCoeffs f) {
    SpectrumShape s;
    s.kind = Kind::Arma;
    s.filter = std::move(f);
    return s;
}

SpectrumShape SpectrumShape::cosine_series(std::vector<double> coeffs) {
    SpectrumShape s;
    s.kind = Kind::Cosine;
    s.cosine = std::move(coeffs);
    return s;
}

SpectrumShape SpectrumShape::white() { return cosine_series({}); }

RatePair sason_rates(const ChannelParams& ch, const SasonParams& p) {
    p.validate();
    const double w1 = p.lambda;
    const double w2 = 1.0 - p.lambda;
    const SegmentEnergies e1 = split_energy(p.alpha, ch.p1);
    const SegmentEnergies e2 = split_energy(p.beta, ch.p2);
    double r1 = 0.0;
    double r2 = 0.0;
    if (w1 > 0.0) {
        const double c11 = e1.mode1 / w1;
        const double c21 = e2.mode1 / w1;
        r1 += w1 * eta(c11);
        r2 += w1 * std::min(eta(ch.a12 * c21 / (1.0 + c11)), eta(c21 / (1.0 + ch.a21 * c11)));
    }
    if (w2 > 0.0) {
        const double c12 = e1.mode2 / w2;
        const double c22 = e2.mode2 / w2;
        r2 += w2 * eta(c22);
        r1 += w2 * std::min(eta(c12 / (1.0 + ch.a12 * c22)), eta(ch.a21 * c12 / (1.0 + c22)));
    }
    return RatePair{r1, r2, {}};
}

RatePair theorem2_rates(const ChannelParams& ch, const SasonParams& p,
                        const std::array<SpectrumShape, 4>& shapes, const QuadratureConfig& quad) {
    p.validate();
    quad.validate();
    const double w1 = p.lambda;
    const double w2 = 1.0 - p.lambda;
    const SegmentEnergies e1 = split_energy(p.alpha, ch.p1);
    const SegmentEnergies e2 = split_energy(p.beta, ch.p2);

    std::optional<AnySpectrum> s11, s21, s12, s22;
    if (w1 > 0.0) {
        s11 = instantiate(shapes[0], e1.mode1 / w1);
        s21 = instantiate(shapes[1], e2.mode1 / w1);
    }
    if (w2 > 0.0) {
        s12 = instantiate(shapes[2], e1.mode2 / w2);
        s22 = instantiate(shapes[3], e2.mode2 / w2);
    }
    TwoModeSpectra m{p.lambda, s11 ? &*s11 : nullptr, s21 ? &*s21 : nullptr,
                     s12 ? &*s12 : nullptr, s22 ? &*s22 : nullptr};
    return two_mode_rates(ch, m, quad);
}

RatePair theorem3_rates(const ChannelParams& ch, const ArmaSchemeParams& p,
                        const QuadratureConfig& quad) {
    p.validate();
    quad.validate();
    const double w1 = p.base.lambda;
    const double w2 = 1.0 - p.base.lambda;
    const SegmentEnergies e1 = split_energy(p.base.alpha, ch.p1);
    const SegmentEnergies e2 = split_energy(p.base.beta, ch.p2);

    std::optional<AnySpectrum> s11, s21, s12, s22;
    if (w1 > 0.0) {
        s11 = ArmaSpectrum::make(p.user1_seg1.ar, p.user1_seg1.ma, e1.mode1 / w1);
        s21 = ArmaSpectrum::make(p.user2_seg1.ar, p.user2_seg1.ma, e2.mode1 / w1);
    }
    if (w2 > 0.0) {
        s12 = ArmaSpectrum::make(p.user1_seg2.ar, p.user1_seg2.ma, e1.mode2 / w2);
        s22 = ArmaSpectrum::make(p.user2_seg2.ar, p.user2_seg2.ma, e2.mode2 / w2);
    }
    TwoModeSpectra m{p.base.lambda, s11 ? &*s11 : nullptr, s21 ? &*s21 : nullptr,
                     s12 ? &*s12 : nullptr, s22 ? &*s22 : nullptr};
    return two_mode_rates(ch, m, quad);
}

namespace {

/// All phi terms entering the rate-splitting theorems, one mode group per
/// time-sharing segment; values of a vanished mode are zero and unused.
struct HkTerms {
    double w1 = 0.0, w2 = 0.0;
    // mode 1: x1 whole, u2/v2 split of user 2
    double a1 = 0, b1 = 0, c1 = 0, d1 = 0, e1 = 0, f1 = 0, g1 = 0;
    // mode 2: x2 whole, u1/v1 split of user 1
    double a2 = 0, b2 = 0, c2 = 0, d2 = 0, e2 = 0, f2 = 0, g2 = 0;
};

struct ModeDensities {
    Ar1Density x;  // whole-message stream of the undivided user
    Ar1Density u;  // private stream of the split user
    Ar1Density v;  // common stream of the split user
};

// cross gains: ax = gain of the split user's signal at the other
// receiver, au = gain of the undivided user's signal at the split user's
// receiver. For mode 1 (x = x1, split user = 2): ax = a12, au = a21.
void compute_mode_terms(const ModeDensities& d, double ax, double au, const QuadratureConfig& quad,
                        double& a, double& b, double& c, double& dd, double& e, double& f,
                        double& g) {
    if (quad.method == QuadratureConfig::Method::FixedTrapezoid) {
        const int n = quad.points;
        const auto& cosg = detail::cos_grid(n);
        static thread_local std::vector<double> gx, gu, gv;
        tabulate_ar1(gx, d.x, cosg);
        tabulate_ar1(gu, d.u, cosg);
        tabulate_ar1(gv, d.v, cosg);
        const bool no_u = d.u.num == 0.0;
        const bool no_v = d.v.num == 0.0;
        auto idx = [](int j) { return static_cast<std::size_t>(j); };
        a = d.x.num == 0.0 ? 0.0
                           : phi_grid(n, [&](int j) { return gx[idx(j)] / (1.0 + ax * gu[idx(j)]); });
        b = (no_u && no_v) ? 0.0
                           : phi_grid(n, [&](int j) {
                                 return (gu[idx(j)] + gv[idx(j)]) / (1.0 + au * gx[idx(j)]);
                             });
        c = no_v ? 0.0 : phi_grid(n, [&](int j) { return gv[idx(j)] / (1.0 + au * gx[idx(j)]); });
        dd = no_u ? 0.0 : phi_grid(n, [&](int j) { return gu[idx(j)] / (1.0 + au * gx[idx(j)]); });
        e = (no_v || ax == 0.0)
                ? 0.0
                : phi_grid(n, [&](int j) {
                      return ax * gv[idx(j)] / (1.0 + gx[idx(j)] + ax * gu[idx(j)]);
                  });
        f = (no_v || ax == 0.0)
                ? 0.0
                : phi_grid(n, [&](int j) { return ax * gv[idx(j)] / (1.0 + ax * gu[idx(j)]); });
        g = phi_grid(n, [&](int j) {
            return (gx[idx(j)] + ax * gv[idx(j)]) / (1.0 + ax * gu[idx(j)]);
        });
        return;
    }
    auto vx = [&d](double w) { return d.x.at(std::cos(w)); };
    auto vu = [&d](double w) { return d.u.at(std::cos(w)); };
    auto vv = [&d](double w) { return d.v.at(std::cos(w)); };
    a = phi([&](double w) { return vx(w) / (1.0 + ax * vu(w)); }, quad);
    b = phi([&](double w) { return (vu(w) + vv(w)) / (1.0 + au * vx(w)); }, quad);
    c = phi([&](double w) { return vv(w) / (1.0 + au * vx(w)); }, quad);
    dd = phi([&](double w) { return vu(w) / (1.0 + au * vx(w)); }, quad);
    e = phi([&](double w) { return ax * vv(w) / (1.0 + vx(w) + ax * vu(w)); }, quad);
    f = phi([&](double w) { return ax * vv(w) / (1.0 + ax * vu(w)); }, quad);
    g = phi([&](double w) { return (vx(w) + ax * vv(w)) / (1.0 + ax * vu(w)); }, quad);
}

HkTerms compute_hk_terms(const ChannelParams& ch, const HkSchemeParams& p,
                         const QuadratureConfig& quad) {
    p.validate();
    quad.validate();
    HkTerms t;
    t.w1 = p.lambda;
    t.w2 = 1.0 - p.lambda;
    const SegmentEnergies e1 = split_energy(p.alpha, ch.p1);
    const SegmentEnergies e2 = split_energy(p.beta, ch.p2);
    if (t.w1 > 0.0) {
        const double cx1 = e1.mode1 / t.w1;
        const double cu2 = p.xi2 * e2.mode1 / t.w1;
        const double cv2 = (1.0 - p.xi2) * e2.mode1 / t.w1;
        ModeDensities d{ar1_density(cx1, p.rho_x1), ar1_density(cu2, p.rho_u2),
                        ar1_density(cv2, p.rho_v2)};
        compute_mode_terms(d, ch.a12, ch.a21, quad, t.a1, t.b1, t.c1, t.d1, t.e1, t.f1, t.g1);
    }
    if (t.w2 > 0.0) {
        const double cx2 = e2.mode2 / t.w2;
        const double cu1 = p.xi1 * e1.mode2 / t.w2;
        const double cv1 = (1.0 - p.xi1) * e1.mode2 / t.w2;
        ModeDensities d{ar1_density(cx2, p.rho_x2), ar1_density(cu1, p.rho_u1),
                        ar1_density(cv1, p.rho_v1)};
        compute_mode_terms(d, ch.a21, ch.a12, quad, t.a2, t.b2, t.c2, t.d2, t.e2, t.f2, t.g2);
    }
    return t;
}

RatePair theorem4_from_terms(const HkTerms& t) {
    double r1 = 0.0, r2 = 0.0;
    if (t.w1 > 0.0) {
        r1 += t.w1 * t.a1;
        r2 += t.w1 * std::min({t.b1, t.c1 + t.d1, t.e1 + t.d1});
    }
    if (t.w2 > 0.0) {
        r2 += t.w2 * t.a2;
        r1 += t.w2 * std::min({t.b2, t.c2 + t.d2, t.e2 + t.d2});
    }
    return RatePair{r1, r2, {}};
}

PentagonBounds theorem5_from_terms(const HkTerms& t, Theorem5Weighting weighting) {
    PentagonBounds b{0.0, 0.0, 0.0};
    const double w_user2_bracket = weighting == Theorem5Weighting::TimeSharing ? t.w1 : t.w2;
    if (t.w1 > 0.0) {
        b.r1_max += t.w1 * t.a1;
        b.r_sum += t.w1 * (t.g1 + t.d1);
        if (w_user2_bracket > 0.0) {
            b.r2_max += w_user2_bracket * std::min({t.b1, t.c1 + t.d1, t.f1 + t.d1});
        }
    }
    if (t.w2 > 0.0) {
        b.r2_max += t.w2 * t.a2;
        b.r_sum += t.w2 * (t.g2 + t.d2);
        b.r1_max += t.w2 * std::min({t.b2, t.c2 + t.d2, t.f2 + t.d2});
    }
    return b;
}

}  // namespace

RatePair theorem4_rates(const ChannelParams& ch, const HkSchemeParams& p,
                        const QuadratureConfig& quad) {
    return theorem4_from_terms(compute_hk_terms(ch, p, quad));
}

PentagonBounds theorem5_rates(const ChannelParams& ch, const HkSchemeParams& p,
                              const QuadratureConfig& quad, Theorem5Weighting weighting) {
    return theorem5_from_terms(compute_hk_terms(ch, p, quad), weighting);
}

std::vector<RatePair> hk_combined_points(const ChannelParams& ch, const HkSchemeParams& p,
                                         const QuadratureConfig& quad,
                                         Theorem5Weighting weighting) {
    const HkTerms t = compute_hk_terms(ch, p, quad);
    const std::vector<double> values{p.alpha,  p.beta,   p.lambda, p.xi1,    p.xi2,   p.rho_x1,
                                     p.rho_x2, p.rho_u1, p.rho_v1, p.rho_u2, p.rho_v2};
    std::vector<RatePair> out;
    RatePair rect = theorem4_from_terms(t);
    rect.provenance = Provenance{"hk-sc", values, 0};
    out.push_back(std::move(rect));
    for (RatePair corner : theorem5_from_terms(t, weighting).corners()) {
        corner.provenance = Provenance{"hk-sim", values, 0};
        out.push_back(std::move(corner));
    }
    return out;
}

Frontier corollary_region_points(const ChannelParams& ch, std::span<const HkSchemeParams> points,
                                 const QuadratureConfig& quad, Theorem5Weighting weighting) {
    if (points.empty()) throw std::invalid_argument("corollary region needs at least one point");
    Frontier f;
    std::uint64_t ordinal = 0;
    for (const HkSchemeParams& p : points) {
        for (RatePair rp : hk_combined_points(ch, p, quad, weighting)) {
            rp.provenance.ordinal = ordinal++;
            f.insert(std::move(rp));
        }
    }
    return convex_hull(f);
}

namespace {

double pos(double x) { return x > 0.0 ? x : 0.0; }

}  // namespace

HkRegionBounds hk_baseline_region(const ChannelParams& ch, const HkBaselineParams& p) {
    p.validate();
    const Eigen::MatrixXd cov = hk_joint_covariance(ch, p.xi1, p.xi2);
    auto mi = [&cov](std::initializer_list<int> targets, int observed,
                     std::initializer_list<int> conditions) {
        return gaussian_mi(cov, std::span<const int>(targets.begin(), targets.size()), observed,
                           std::span<const int>(conditions.begin(), conditions.size()));
    };

    const double iu1 = mi({kU1}, kY1, {kV1, kV2});
    const double iu2 = mi({kU2}, kY2, {kV1, kV2});
    const double s1 = std::min(mi({kV1}, kY1, {kV2}), mi({kV1}, kY2, {kU2, kV2}));
    const double s2 = std::min(mi({kV2}, kY2, {kV1}), mi({kV2}, kY1, {kU1, kV1}));
    const double s12 = std::min({mi({kV1, kV2}, kY1, {}), mi({kV1, kV2}, kY2, {}),
                                 mi({kV1}, kY1, {kV2}) + mi({kV2}, kY2, {kV1}),
                                 mi({kV1}, kY2, {kV2}) + mi({kV2}, kY1, {kV1})});

    HkRegionBounds b;
    b.rho1 = s1 + iu1;
    b.rho2 = s2 + iu2;
    b.rho12 = s12 + iu1 + iu2;
    b.rho10 = 2.0 * s1 + 2.0 * iu1 + iu2 - pos(s1 - mi({kV1}, kY2, {kV2})) +
              std::min({mi({kV2}, kY2, {kV1}), mi({kV2}, kY2, {}) + pos(mi({kV1}, kY2, {kV2}) - s1),
                        mi({kV2}, kY1, {kV1}), mi({kV1, kV2}, kY1, {}) - s1});
    b.rho20 = 2.0 * s2 + iu1 + 2.0 * iu2 - pos(s2 - mi({kV2}, kY1, {kV1})) +
              std::min({mi({kV1}, kY1, {kV2}), mi({kV1}, kY1, {}) + pos(mi({kV2}, kY1, {kV1}) - s2),
                        mi({kV1}, kY2, {kV2}), mi({kV2, kV1}, kY2, {}) - s2});
    return b;
}

std::vector<RatePair> hk_baseline_corner_points(const HkRegionBounds& b) {
    // 2D vertex enumeration over the five rate constraints plus the axes.
    struct Line {
        double a1, a2, c;
    };
    const Line lines[] = {
        {1.0, 0.0, b.rho1},  {0.0, 1.0, b.rho2},  {1.0, 1.0, b.rho12},
        {2.0, 1.0, b.rho10}, {1.0, 2.0, b.rho20}, {1.0, 0.0, 0.0},  // R1 = 0
        {0.0, 1.0, 0.0},                                            // R2 = 0
    };
    const double scale = std::max({1.0, b.rho1, b.rho2, b.rho12, b.rho10, b.rho20});
    const double tol = 1e-12 * scale;
    auto feasible = [&](double r1, double r2) {
        if (r1 < -tol || r2 < -tol) return false;
        return r1 <= b.rho1 + tol && r2 <= b.rho2 + tol && r1 + r2 <= b.rho12 + tol &&
               2.0 * r1 + r2 <= b.rho10 + tol && r1 + 2.0 * r2 <= b.rho20 + tol;
    };

    std::vector<RatePair> vertices;
    const int n = static_cast<int>(std::size(lines));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double det = lines[i].a1 * lines[j].a2 - lines[j].a1 * lines[i].a2;
            if (std::abs(det) < 1e-14) continue;
            const double r1 = (lines[i].c * lines[j].a2 - lines[j].c * lines[i].a2) / det;
            const double r2 = (lines[i].a1 * lines[j].c - lines[j].a1 * lines[i].c) / det;
            if (!feasible(r1, r2)) continue;
            vertices.push_back(RatePair{pos(r1), pos(r2), {}});
        }
    }
    // Pareto-maximal vertices only.
    std::vector<RatePair> out;
    for (const RatePair& v : vertices) {
        bool dominated = false;
        for (const RatePair& w : vertices) {
            if (w.r1 >= v.r1 + tol && w.r2 >= v.r2 - tol) dominated = true;
            if (w.r2 >= v.r2 + tol && w.r1 >= v.r1 - tol) dominated = true;
            if (dominated) break;
        }
        if (!dominated) out.push_back(v);
    }
    return out;
}

}  // namespace gicreg
