#pragma once

#include "gicreg/channel.hpp"

#include <Eigen/Dense>

#include <span>

namespace gicreg {

/// Variable order of the rate-splitting joint covariance.
enum HkVar : int { kU1 = 0, kV1 = 1, kU2 = 2, kV2 = 3, kY1 = 4, kY2 = 5 };

/// Joint covariance of (U1, V1, U2, V2, Y1, Y2) for the Gaussian HK
/// choice X1 = U1 + V1, X2 = U2 + V2 with U1 ~ N(0, xi1*P1),
/// V1 ~ N(0, (1-xi1)*P1) and the dual split for user 2, over the
/// standard-form channel.
Eigen::MatrixXd hk_joint_covariance(const ChannelParams& ch, double xi1, double xi2);

/// I(targets; observed | conditions) in bits for a jointly Gaussian
/// vector with the given covariance; `observed` must be a single index
/// with strictly positive conditional variance (channel outputs always
/// qualify). Singular condition/target blocks (zero-variance variables)
/// are handled through a pseudo-inverse. Throws std::invalid_argument if
/// the covariance is not symmetric positive semidefinite.
double gaussian_mi(const Eigen::MatrixXd& cov, std::span<const int> targets, int observed,
                   std::span<const int> conditions);

}  // namespace gicreg
