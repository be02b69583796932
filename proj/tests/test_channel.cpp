#include "gicreg/channel.hpp"

#include <doctest.h>

#include <limits>
#include <stdexcept>

#include <cmath>
#include <random>

using namespace gicreg;

TEST_CASE("channel validation accepts the standard-form examples") {
    const ChannelParams zic = ChannelParams::validated(6, 1, 2, 0);
    CHECK(zic.p1 == 6.0);
    CHECK(zic.a12 == 2.0);
    CHECK_NOTHROW(ChannelParams::validated(1, 1, 0, 0));  // interference-free
}

TEST_CASE("channel validation rejects bad parameters") {
    CHECK_THROWS_AS(ChannelParams::validated(0, 1, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(ChannelParams::validated(1, -1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(ChannelParams::validated(1, 1, -0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(ChannelParams::validated(1, 1, 0, -2), std::invalid_argument);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(ChannelParams::validated(inf, 1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(ChannelParams::validated(1, 1, std::nan(""), 0), std::invalid_argument);
}

TEST_CASE("eta fixed points") {
    CHECK(eta(0.0) == 0.0);
    CHECK(eta(1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(eta(3.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(eta(-1e-9), std::invalid_argument);
    CHECK_THROWS_AS(eta(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("eta is strictly increasing and concave") {
    double prev = eta(0.0);
    double prev_slope = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 400; ++k) {
        const double x = 0.05 * k;
        const double v = eta(x);
        CHECK(v > prev);
        const double slope = (v - prev) / 0.05;
        CHECK(slope < prev_slope);
        prev = v;
        prev_slope = slope;
    }
}

TEST_CASE("eta chain-rule identity") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 50.0);
    for (int i = 0; i < 500; ++i) {
        const double x = u(rng);
        const double y = u(rng);
        CHECK(eta(x) + eta(y / (1.0 + x)) == doctest::Approx(eta(x + y)).epsilon(1e-12));
    }
}
