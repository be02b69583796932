#include "gicreg/toeplitz.hpp"

#include "gicreg/channel.hpp"
#include "gicreg/quadrature.hpp"
#include "gicreg/spectrum.hpp"

#include <doctest.h>

#include <limits>
#include <stdexcept>

#include <cmath>
#include <random>

using namespace gicreg;

namespace {

QuadratureConfig adaptive() {
    QuadratureConfig q;
    q.method = QuadratureConfig::Method::Adaptive;
    return q;
}

}  // namespace

TEST_CASE("white covariance is the scaled identity") {
    const ArmaSpectrum s = ArmaSpectrum::make({}, {}, 2.5);
    const Eigen::MatrixXd m = arma_covariance(s, 3);
    CHECK(m.isApprox(2.5 * Eigen::MatrixXd::Identity(3, 3)));
    CHECK_THROWS_AS(arma_covariance(s, 0), std::invalid_argument);
}

TEST_CASE("AR(1) covariance has geometric correlations") {
    const double rho = 0.6, p = 3.0;
    const ArmaSpectrum s = ArmaSpectrum::make({rho}, {}, p);
    const Eigen::MatrixXd m = arma_covariance(s, 2);
    CHECK(m(0, 0) == doctest::Approx(p).epsilon(1e-9));
    CHECK(m(0, 1) == doctest::Approx(rho * p).epsilon(1e-9));
    const Eigen::MatrixXd m8 = arma_covariance(s, 8);
    for (int k = 0; k < 8; ++k) {
        CHECK(m8(0, k) == doctest::Approx(p * std::pow(rho, k)).epsilon(1e-8));
    }
}

TEST_CASE("stationary and recursion covariances agree in the interior") {
    const ArmaSpectrum s = ArmaSpectrum::make({0.7}, {0.3}, 2.0);
    const int n = 192;
    const Eigen::MatrixXd stat = arma_covariance(s, n);
    const Eigen::MatrixXd rec = arma_covariance_recursion(s, n);
    // compare a centered block, away from the non-stationary edge rows
    const int lo = 80, len = 32;
    const Eigen::MatrixXd a = stat.block(lo, lo, len, len);
    const Eigen::MatrixXd b = rec.block(lo, lo, len, len);
    CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-8);
    CHECK_THROWS_AS(arma_covariance_recursion(ArmaSpectrum::make({0.1, 0.2}, {}, 1.0), 8),
                    std::invalid_argument);
}

TEST_CASE("covariances are positive semidefinite") {
    std::mt19937_64 rng(79);
    std::uniform_real_distribution<double> uc(-0.9, 0.9);
    std::uniform_real_distribution<double> up(0.3, 10.0);
    for (int i = 0; i < 10; ++i) {
        const ArmaSpectrum s = ArmaSpectrum::make({uc(rng)}, {uc(rng)}, up(rng));
        const Eigen::MatrixXd m = arma_covariance(s, 128);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
        CHECK(es.eigenvalues().minCoeff() >= -1e-10);
    }
}

TEST_CASE("Levinson log-det matches a dense factorization") {
    std::mt19937_64 rng(83);
    std::uniform_real_distribution<double> uc(-0.9, 0.9);
    std::uniform_real_distribution<double> up(0.3, 8.0);
    for (int i = 0; i < 10; ++i) {
        const ArmaSpectrum s = ArmaSpectrum::make({uc(rng)}, {uc(rng)}, up(rng));
        const int n = 256;
        std::vector<double> col = autocovariance(s, n);
        col[0] += 1.0;  // I + R
        const double fast = toeplitz_logdet(col);
        Eigen::MatrixXd m = arma_covariance(s, n);
        m += Eigen::MatrixXd::Identity(n, n);
        const double dense = 2.0 * Eigen::LLT<Eigen::MatrixXd>(m).matrixL().toDenseMatrix()
                                       .diagonal().array().log().sum();
        CHECK(fast == doctest::Approx(dense).epsilon(1e-10));
    }
    CHECK_THROWS_AS(toeplitz_logdet(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(toeplitz_logdet(std::vector<double>{-1.0}), std::invalid_argument);
    CHECK_THROWS_AS(toeplitz_logdet(std::vector<double>{1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("finite rates for white inputs are exact at every n") {
    const ChannelParams ch = ChannelParams::validated(4, 2, 0.7, 0.5);
    const ArmaSpectrum s1 = ArmaSpectrum::make({}, {}, ch.p1);
    const ArmaSpectrum s2 = ArmaSpectrum::make({}, {}, ch.p2);
    for (int n : {1, 7, 64, 301}) {
        CHECK(finite_n_rate(OracleTerm::Cond, ch, s1, s2, n) ==
              doctest::Approx(eta(ch.p1)).epsilon(1e-14));
        CHECK(finite_n_rate(OracleTerm::Interference, ch, s1, s2, n) ==
              doctest::Approx(eta(ch.a12 * ch.p2 / (1.0 + ch.p1))).epsilon(1e-13));
        CHECK(finite_n_rate(OracleTerm::Direct, ch, s1, s2, n) ==
              doctest::Approx(eta(ch.p2 / (1.0 + ch.a21 * ch.p1))).epsilon(1e-13));
    }
}

TEST_CASE("a single sample carries no memory") {
    const ChannelParams ch = ChannelParams::validated(6, 1, 2, 0);
    const ArmaSpectrum s1 = ArmaSpectrum::make({0.8}, {}, ch.p1);
    const ArmaSpectrum s2 = ArmaSpectrum::make({-0.4}, {}, ch.p2);
    CHECK(finite_n_rate(OracleTerm::Cond, ch, s1, s2, 1) ==
          doctest::Approx(eta(ch.p1)).epsilon(1e-10));
}

TEST_CASE("finite AR rate approaches the closed form") {
    const ChannelParams ch = ChannelParams::validated(6, 1, 2, 0);
    const ArmaSpectrum s1 = ArmaSpectrum::make({0.9}, {}, 6.0);
    const ArmaSpectrum s2 = ArmaSpectrum::make({}, {}, 1.0);
    const double finite = finite_n_rate(OracleTerm::Cond, ch, s1, s2, 1024);
    CHECK(std::abs(finite - closed_form_ar(0.9, 6.0)) <= 2e-2);
}

TEST_CASE("convergence report trends") {
    const ChannelParams ch = ChannelParams::validated(6, 1, 2, 0.3);
    const ArmaSpectrum white1 = ArmaSpectrum::make({}, {}, ch.p1);
    const ArmaSpectrum white2 = ArmaSpectrum::make({}, {}, ch.p2);
    const std::vector<int> ns = {128, 512, 2048};

    for (OracleTerm term : {OracleTerm::Cond, OracleTerm::Interference, OracleTerm::Direct}) {
        const auto reports = convergence_report(ch, white1, white2, term, ns, adaptive());
        for (const OracleReport& r : reports) CHECK(r.abs_error <= 1e-11);
        CHECK_FALSE(non_convergent(reports));
    }

    const ArmaSpectrum slow1 = ArmaSpectrum::make({0.9}, {}, ch.p1);
    const ArmaSpectrum slow2 = ArmaSpectrum::make({-0.5}, {}, ch.p2);
    const auto reports = convergence_report(ch, slow1, slow2, OracleTerm::Cond, ns, adaptive());
    CHECK(reports[0].abs_error > reports[1].abs_error);
    CHECK(reports[1].abs_error > reports[2].abs_error);
    CHECK_FALSE(non_convergent(reports));

    const auto interf =
        convergence_report(ch, ArmaSpectrum::make({0.5}, {}, ch.p1),
                           ArmaSpectrum::make({-0.5}, {}, ch.p2), OracleTerm::Interference,
                           std::vector<int>{1024}, adaptive());
    CHECK(interf[0].abs_error <= 2e-2);

    CHECK_THROWS_AS(convergence_report(ch, white1, white2, OracleTerm::Cond, std::vector<int>{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        convergence_report(ch, white1, white2, OracleTerm::Cond, std::vector<int>{64, 64}),
        std::invalid_argument);
}

TEST_CASE("oracle term names round trip") {
    for (OracleTerm t : {OracleTerm::Cond, OracleTerm::Interference, OracleTerm::Direct}) {
        CHECK(oracle_term_from_string(to_string(t)) == t);
    }
    CHECK_FALSE(oracle_term_from_string("bogus").has_value());
}
