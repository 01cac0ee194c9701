#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "fcorr/coefficients.hpp"
#include "fcorr/fixtures.hpp"
#include "fcorr/mc_oracle.hpp"
#include "helpers.hpp"

using fcorr::McOptions;
using fcorr::ValuationClass;

TEST_CASE("sampling maximum brackets the spectral value from below") {
    const auto cm0 = fcorr::find_fixture("CM0")->matrix();
    McOptions opts;
    opts.accepted_samples = 100000;
    opts.seed = 9;
    const auto est = fcorr::mc_estimate(cm0, ValuationClass::Sup, opts);
    const double exact = fcorr::sup_correlation(cm0).value;
    CHECK(est.value <= exact + 1e-9);
    CHECK(est.value >= exact - 0.03);
    CHECK(est.accepted == opts.accepted_samples);
    CHECK(est.acceptance_rate == doctest::Approx(1.0));
    CHECK_FALSE(est.exhausted);
}

TEST_CASE("near-perfect dependence is found quickly") {
    const auto diag = testutil::diagonal_matrix(2, 2);
    McOptions opts;
    opts.accepted_samples = 10000;
    const auto est = fcorr::mc_estimate(diag, ValuationClass::II, opts);
    CHECK(est.value <= 1.0 + 1e-9);
    CHECK(est.value >= 1.0 - 0.02);
}

TEST_CASE("antitone estimate lower-bounds the search value") {
    const auto cm0 = fcorr::find_fixture("CM0")->matrix();
    McOptions opts;
    opts.accepted_samples = 100000;
    const auto est = fcorr::mc_estimate(cm0, ValuationClass::Anti, opts);
    const double exact = fcorr::anti_correlation(cm0).value;  // ~0.6124
    CHECK(est.value <= exact + 1e-9);
    CHECK(est.value >= exact - 0.05);
}

TEST_CASE("estimates are prefix maxima in the accepted count") {
    const auto m = testutil::random_matrix(3, 3);
    McOptions opts;
    opts.seed = 31;
    double prev = -2.0;
    for (long long n : {200, 1000, 5000, 20000}) {
        opts.accepted_samples = n;
        const auto est = fcorr::mc_estimate(m, ValuationClass::II, opts);
        CHECK(est.value >= prev);
        prev = est.value;
    }
}

TEST_CASE("acceptance rate matches the exchangeability prediction") {
    const auto m = testutil::random_matrix(4, 3, 0.0);
    McOptions opts;
    opts.accepted_samples = 10000;
    opts.seed = 77;
    const auto est = fcorr::mc_estimate(m, ValuationClass::II, opts);
    const double p = 1.0 / 36.0;  // (1/3!)^2 for d = 3
    const double se = std::sqrt(p * (1 - p) / static_cast<double>(est.draws));
    CHECK(std::abs(est.acceptance_rate - p) <= 3 * se);
}

TEST_CASE("the draw cap is honored and reported") {
    // acceptance for II at d = 4 is (1/4!)^2, far below 1000/2000
    const auto m = testutil::random_matrix(5, 4, 0.0);
    McOptions opts;
    opts.accepted_samples = 1000;
    opts.max_draws = 2000;
    const auto est = fcorr::mc_estimate(m, ValuationClass::II, opts);
    CHECK(est.exhausted);
    CHECK(est.draws == 2000);
    CHECK(est.accepted < opts.accepted_samples);
}

TEST_CASE("same seed, same estimate") {
    const auto m = testutil::random_matrix(6, 3);
    McOptions opts;
    opts.accepted_samples = 20000;
    opts.seed = 123;
    const auto a = fcorr::mc_estimate(m, ValuationClass::CO, opts);
    const auto b = fcorr::mc_estimate(m, ValuationClass::CO, opts);
    CHECK(a.value == b.value);
    CHECK(a.draws == b.draws);
}

TEST_CASE("compound classes and bad budgets are rejected") {
    const auto m = testutil::random_matrix(7, 3);
    CHECK_THROWS_AS(fcorr::mc_estimate(m, ValuationClass::Mon, {}), std::invalid_argument);
    CHECK_THROWS_AS(fcorr::mc_estimate(m, ValuationClass::CoAnti, {}), std::invalid_argument);
    McOptions bad;
    bad.accepted_samples = 100;
    bad.max_draws = 10;
    CHECK_THROWS_AS(fcorr::mc_estimate(m, ValuationClass::II, bad), std::invalid_argument);
    const auto lonely = fcorr::ConfusionMatrix::from_cells({{0.5, 0.5}, {0, 0}});
    CHECK_THROWS_AS(fcorr::mc_estimate(lonely, ValuationClass::II, {}), std::domain_error);
}
