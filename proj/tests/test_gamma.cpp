#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "subdiff/gamma.hpp"

using namespace subdiff;

TEST_CASE("gamma matches the C library across (0, 172)") {
    // stop just short of the double overflow point of tgamma (~171.62)
    for (double x = 0.02; x < 171.6; x += 0.173) {
        double want = std::tgamma(x);
        double got = gamma_fn(x);
        CHECK(std::fabs(got - want) / want < 1e-13);
    }
}

TEST_CASE("gamma exact landmarks") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-15));
    CHECK(gamma_fn(11.0) == doctest::Approx(3628800.0).epsilon(1e-15));
    // 170! stays inside double range
    double fact = 1.0;
    for (int k = 2; k <= 170; ++k) fact *= k;
    CHECK(gamma_fn(171.0) == doctest::Approx(fact).epsilon(1e-13));
}

TEST_CASE("reciprocal gamma vanishes at the poles") {
    CHECK(rgamma(0.0) == 0.0);
    CHECK(rgamma(-1.0) == 0.0);
    CHECK(rgamma(-7.0) == 0.0);
    CHECK(rgamma(-0.5) == doctest::Approx(-1.0 / (2.0 * std::sqrt(M_PI))).epsilon(1e-14));
    CHECK(rgamma(0.25) == doctest::Approx(1.0 / std::tgamma(0.25)).epsilon(1e-14));
}

TEST_CASE("reflection identity") {
    for (double x : {0.1, 0.37, -0.6, -2.3, -5.75, 0.499}) {
        long double lhs = gamma_ld((long double)x) * gamma_ld(1.0L - (long double)x)
                          * sinpi_ld((long double)x);
        CHECK((double)lhs == doctest::Approx(M_PI).epsilon(1e-13));
    }
}

TEST_CASE("sinpi reduction") {
    CHECK((double)sinpi_ld(0.5L) == doctest::Approx(1.0).epsilon(1e-18));
    CHECK((double)sinpi_ld(1.0L) == 0.0);
    CHECK((double)sinpi_ld(-4.0L) == 0.0);
    CHECK((double)sinpi_ld(-2.5L) == doctest::Approx(-1.0).epsilon(1e-18));
    CHECK((double)sinpi_ld(100.25L) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("lgamma agrees with the C library on the log scale") {
    for (double x : {0.3, 1.7, 12.0, 90.5, 400.0, 1500.0}) {
        double want = std::lgamma(x);
        CHECK(std::fabs((double)lgamma_ld((long double)x) - want) < 1e-12 * std::max(1.0, std::fabs(want)));
    }
}
