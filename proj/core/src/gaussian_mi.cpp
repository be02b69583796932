#include "gicreg/gaussian_mi.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace gicreg {

Eigen::MatrixXd hk_joint_covariance(const ChannelParams& ch, double xi1, double xi2) {
    if (xi1 < 0.0 || xi1 > 1.0 || xi2 < 0.0 || xi2 > 1.0) {
        throw std::invalid_argument("xi1, xi2 must lie in [0,1]");
    }
    const double vu1 = xi1 * ch.p1;
    const double vv1 = (1.0 - xi1) * ch.p1;
    const double vu2 = xi2 * ch.p2;
    const double vv2 = (1.0 - xi2) * ch.p2;
    const double g12 = std::sqrt(ch.a12);
    const double g21 = std::sqrt(ch.a21);

    // Y1 = U1 + V1 + g12*(U2 + V2) + Z1, Y2 = g21*(U1 + V1) + U2 + V2 + Z2.
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(6, 6);
    c(kU1, kU1) = vu1;
    c(kV1, kV1) = vv1;
    c(kU2, kU2) = vu2;
    c(kV2, kV2) = vv2;

    c(kY1, kU1) = vu1;
    c(kY1, kV1) = vv1;
    c(kY1, kU2) = g12 * vu2;
    c(kY1, kV2) = g12 * vv2;
    c(kY2, kU1) = g21 * vu1;
    c(kY2, kV1) = g21 * vv1;
    c(kY2, kU2) = vu2;
    c(kY2, kV2) = vv2;

    c(kY1, kY1) = vu1 + vv1 + ch.a12 * (vu2 + vv2) + 1.0;
    c(kY2, kY2) = ch.a21 * (vu1 + vv1) + vu2 + vv2 + 1.0;
    c(kY2, kY1) = g21 * (vu1 + vv1) + g12 * (vu2 + vv2);

    c = c.selfadjointView<Eigen::Lower>();
    return c;
}

namespace {

// Residual variance of variable `target` after conditioning on `given`,
// via eigen-decomposition pseudo-inverse of the conditioning block.
double conditional_variance(const Eigen::MatrixXd& cov, int target, const std::vector<int>& given) {
    const double base = cov(target, target);
    if (given.empty()) return base;
    const auto n = static_cast<Eigen::Index>(given.size());
    Eigen::MatrixXd s(n, n);
    Eigen::VectorXd r(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        r(i) = cov(given[static_cast<std::size_t>(i)], target);
        for (Eigen::Index j = 0; j < n; ++j) {
            s(i, j) = cov(given[static_cast<std::size_t>(i)], given[static_cast<std::size_t>(j)]);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
    const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    const double cutoff = 1e-13 * scale;
    double reduction = 0.0;
    const Eigen::VectorXd proj = es.eigenvectors().transpose() * r;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (es.eigenvalues()(i) > cutoff) {
            reduction += proj(i) * proj(i) / es.eigenvalues()(i);
        }
    }
    const double v = base - reduction;
    return v > 0.0 ? v : 0.0;
}

void check_psd(const Eigen::MatrixXd& cov) {
    if (cov.rows() != cov.cols()) throw std::invalid_argument("covariance must be square");
    if (!cov.isApprox(cov.transpose(), 1e-10)) {
        throw std::invalid_argument("covariance must be symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov, Eigen::EigenvaluesOnly);
    const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    if (es.eigenvalues().minCoeff() < -1e-9 * scale) {
        throw std::invalid_argument("covariance is not positive semidefinite");
    }
}

}  // namespace

double gaussian_mi(const Eigen::MatrixXd& cov, std::span<const int> targets, int observed,
                   std::span<const int> conditions) {
    check_psd(cov);
    if (observed < 0 || observed >= cov.rows()) {
        throw std::invalid_argument("observed index out of range");
    }
    std::vector<int> cond(conditions.begin(), conditions.end());
    const double v_given_cond = conditional_variance(cov, observed, cond);
    std::vector<int> both = cond;
    both.insert(both.end(), targets.begin(), targets.end());
    const double v_given_all = conditional_variance(cov, observed, both);
    if (v_given_all <= 0.0) {
        throw std::invalid_argument("observed variable is degenerate given targets");
    }
    const double mi = 0.5 * std::log2(v_given_cond / v_given_all);
    return mi > 0.0 ? mi : 0.0;
}

}  // namespace gicreg
