#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "subdiff/mittag_leffler.hpp"
#include "test_support.hpp"

using namespace subdiff;
using testsupport::abs_or_rel_err;
using testsupport::rel_err;

TEST_CASE("classical identities") {
    // E_{1,1} = exp
    CHECK(rel_err(ml({1.0, 1.0}, 1.0), std::exp(1.0)) < 1e-12);
    CHECK(rel_err(ml({1.0, 1.0}, -30.0), std::exp(-30.0)) < 1e-10);
    CHECK(rel_err(ml({1.0, 1.0}, 5.0), std::exp(5.0)) < 1e-12);
    // E_{2,1}(-z^2) = cos z
    CHECK(abs_or_rel_err(ml({2.0, 1.0}, -1.0), std::cos(1.0)) < 1e-12);
    CHECK(abs_or_rel_err(ml({2.0, 1.0}, -100.0), std::cos(10.0)) < 1e-11);
    // E_{1/2,1}(-1) = e erfc(1)
    CHECK(abs_or_rel_err(ml({0.5, 1.0}, -1.0), std::exp(1.0) * std::erfc(1.0)) < 1e-10);
    // E_{1/2,1}(z) = e^{z^2} erfc(-z), positive side
    CHECK(rel_err(ml({0.5, 1.0}, 5.0), std::exp(25.0) * (2.0 - std::erfc(5.0))) < 1e-10);
    // E_{1,2}(z) = (e^z - 1)/z
    CHECK(rel_err(ml({1.0, 2.0}, -3.0), (std::exp(-3.0) - 1.0) / -3.0) < 1e-11);
    // E_{2,2}(-z^2) = sin(z)/z
    CHECK(rel_err(ml({2.0, 2.0}, -4.0), std::sin(2.0) / 2.0) < 1e-11);
}

TEST_CASE("exp match across the certified window") {
    for (double z = -30.0; z <= 5.0; z += 0.37) {
        CHECK(rel_err(ml({1.0, 1.0}, z), std::exp(z)) < 1e-10);
    }
}

TEST_CASE("series oracle agreement at moderate arguments") {
    for (double alpha : {0.3, 0.55, 0.75, 0.9, 1.0, 1.4, 2.0}) {
        for (double beta : {0.5, 1.0, 1.75}) {
            for (double z : {-4.0, -1.5, -0.1, 0.25, 2.0}) {
                double want = (double)testsupport::ml_series_oracle(alpha, beta, z);
                CHECK(abs_or_rel_err(ml({alpha, beta}, z), want) < 1e-11);
            }
        }
    }
}

TEST_CASE("derivative examples and identity") {
    CHECK(rel_err(ml_deriv(1.0, 0.0), 1.0) < 1e-12);
    // first series term 1/Gamma(1+alpha)
    CHECK(rel_err(ml_deriv(0.75, 0.0), 1.0880652521310173) < 1e-10);
    // term-by-term identity E'_{a,1} = E_{a,a}/a against the direct oracle
    double direct = (double)testsupport::ml_deriv_series_oracle(0.75, -2.0);
    CHECK(rel_err(ml_deriv(0.75, -2.0), direct) < 1e-11);
    CHECK(rel_err(direct, 0.11248476299421409) < 1e-12);
    CHECK(ml_deriv(0.75, -2.0) == ml({0.75, 0.75}, -2.0) / 0.75);
}

TEST_CASE("derivative matches central differences at second order") {
    const double alpha = 0.8, z = -1.5;
    double d = ml_deriv(alpha, z);
    auto fd = [&](double h) {
        return (ml({alpha, 1.0}, z + h) - ml({alpha, 1.0}, z - h)) / (2.0 * h);
    };
    double e1 = std::fabs(fd(1e-2) - d);
    double e2 = std::fabs(fd(5e-3) - d);
    CHECK(e1 < 1e-4);
    CHECK(e2 < e1 / 3.0);  // ~4x per halving for an O(h^2) stencil
}

TEST_CASE("complete monotonicity consequences on the negative axis") {
    for (double alpha : {0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95}) {
        double prev = 1.0;  // E(0)
        double sup = 1.0;
        for (int i = 0; i < 80; ++i) {
            double z = -std::pow(10.0, -6.0 + 12.0 * i / 79.0);
            double v = ml({alpha, 1.0}, z);
            CHECK(v > 0.0);
            CHECK(v <= prev * (1.0 + 1e-11));
            CHECK(v <= 1.0);
            sup = std::max(sup, (1.0 - z) * v);
            prev = v;
        }
        CHECK(std::isfinite(sup));
        CHECK(sup < 2.0);  // empirical constant of the (1+|z|) bound
        // derivative sign on the negative axis
        for (double z : {-0.3, -3.0, -300.0}) CHECK(ml_deriv(alpha, z) >= 0.0);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ml({0.0, 1.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ml({2.5, 1.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ml({-0.5, 1.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ml({1.0, 0.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ml({1.0, -2.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ml({1.0, 1.0}, std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(ml_deriv(1.5, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(ml_deriv(0.0, -1.0), std::invalid_argument);
}

TEST_CASE("loss of accuracy is signalled, not silently returned") {
    // alpha > 1 has no asymptotic branch; far beyond the high-precision
    // window the evaluator must refuse
    CHECK_THROWS_AS(ml({1.5, 1.0}, -1e9), certification_error);
}

TEST_CASE("deep negative axis stays accurate for beta = alpha") {
    // asymptotic branch with a vanishing leading term
    for (double alpha : {0.6, 0.75, 0.9}) {
        double z = -2.0e5;
        double got = ml({alpha, alpha}, z);
        // leading term is -z^{-2}/Gamma(-alpha)
        double lead = -1.0 / (z * z) / std::tgamma(-alpha);
        CHECK(rel_err(got, lead) < 1e-2);
        CHECK(got > 0.0);
    }
}

TEST_CASE("value at zero is 1/Gamma(beta)") {
    CHECK(ml({0.7, 1.0}, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ml({0.7, 2.5}, 0.0) == doctest::Approx(1.0 / std::tgamma(2.5)).epsilon(1e-13));
}
