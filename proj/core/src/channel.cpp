#include "gicreg/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace gicreg {

ChannelParams ChannelParams::validated(double p1, double p2, double a12, double a21) {
    if (!std::isfinite(p1) || !std::isfinite(p2) || !std::isfinite(a12) || !std::isfinite(a21)) {
        throw std::invalid_argument("channel parameters must be finite");
    }
    if (p1 <= 0.0 || p2 <= 0.0) {
        throw std::invalid_argument("powers p1, p2 must be positive");
    }
    if (a12 < 0.0 || a21 < 0.0) {
        throw std::invalid_argument("cross gains a12, a21 must be non-negative");
    }
    return ChannelParams{p1, p2, a12, a21};
}

double eta(double x) {
    if (!std::isfinite(x) || x < 0.0) {
        throw std::invalid_argument("eta requires finite x >= 0");
    }
    // log1p keeps full precision for small x.
    return 0.5 * std::log1p(x) / std::log(2.0);
}

}  // namespace gicreg
