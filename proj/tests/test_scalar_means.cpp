#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "cvxmeans/scalar_means.hpp"

using cvxmeans::PValue;
using cvxmeans::iteration_rate;
using cvxmeans::mean_quotient;
using cvxmeans::power_mean;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

// Independent oracle: direct long-double evaluation of ((a^p + b^p)/2)^(1/p).
// Valid while a^p and b^p stay inside long-double range, which holds for the
// grids below.
long double mean_oracle(long double p, long double a, long double b) {
    if (p == 0.0L) return sqrtl(a * b);
    long double ap = powl(a, p), bp = powl(b, p);
    return powl((ap + bp) / 2.0L, 1.0L / p);
}

double rel_err(double got, long double want) {
    return static_cast<double>(fabsl(static_cast<long double>(got) - want) / fabsl(want));
}

}  // namespace

TEST_CASE("power_mean matches hand values for the five classical means") {
    CHECK(power_mean(PValue::neg_inf(), 3.0, 5.0) == 3.0);
    CHECK(power_mean(-1.0, 3.0, 5.0) == Catch::Approx(2.0 * 15.0 / 8.0).epsilon(1e-15));
    CHECK(power_mean(0.0, 4.0, 9.0) == Catch::Approx(6.0).epsilon(1e-15));
    CHECK(power_mean(1.0, 3.0, 5.0) == Catch::Approx(4.0).epsilon(1e-15));
    CHECK(power_mean(2.0, 3.0, 4.0) == Catch::Approx(std::sqrt(12.5)).epsilon(1e-15));
    CHECK(power_mean(PValue::pos_inf(), 3.0, 5.0) == 5.0);
}

TEST_CASE("harmonic mean of 2 and 2/3 is exactly 1") {
    // 2 * 2 * (2/3) / (2 + 2/3) = (8/3) / (8/3).
    CHECK(power_mean(-1.0, 2.0, 2.0 / 3.0) == Catch::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("power_mean agrees with the long-double oracle on a dense grid") {
    std::vector<double> ps = {-32.0, -7.5, -2.0, -1.0, -0.5, -1e-3, -1e-6,
                              1e-6,  1e-3, 0.5,  1.0,  2.0,  7.5,   32.0, 220.0};
    std::vector<double> vals = {1e-6, 3e-4, 0.02, 0.5, 1.0, 1.5, 17.0, 4096.0, 9.9e5};
    double worst = 0.0;
    for (double p : ps)
        for (double a : vals)
            for (double b : vals) {
                double got = power_mean(p, a, b);
                double err = rel_err(got, mean_oracle(p, a, b));
                worst = std::max(worst, err);
            }
    CHECK(worst < 1e-13);
}

TEST_CASE("power_mean survives |p| beyond 700 in log space") {
    // a^p overflows double here; the mean itself is close to max(a,b).
    double m = power_mean(900.0, 2.0, 3.0);
    CHECK(m > 3.0 * std::exp2(-1.0 / 900.0) - 1e-12);
    CHECK(m <= 3.0);
    double lo = power_mean(-900.0, 2.0, 3.0);
    CHECK(lo >= 2.0);
    CHECK(lo < 2.0 * std::exp2(1.0 / 900.0) + 1e-12);
    // Tiny |p| stays accurate too (geometric-mean limit).
    CHECK(power_mean(1e-12, 4.0, 9.0) == Catch::Approx(6.0).epsilon(1e-10));
}

TEST_CASE("power_mean identities hold on seeded random samples") {
    std::mt19937_64 rng(20260822u);
    std::uniform_real_distribution<double> logv(std::log(1e-6), std::log(1e6));
    std::uniform_real_distribution<double> logp(std::log(1e-6), std::log(700.0));
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<PValue> specials = {PValue::neg_inf(), -1.0, 0.0, 1.0, PValue::pos_inf()};
    for (int it = 0; it < 20000; ++it) {
        double a = std::exp(logv(rng)), b = std::exp(logv(rng));
        PValue p = 0.0;
        double sel = unit(rng);
        if (sel < 0.15) {
            p = specials[static_cast<size_t>(unit(rng) * specials.size()) % specials.size()];
        } else {
            double mag = std::exp(logp(rng));
            p = (unit(rng) < 0.5) ? PValue(mag) : PValue(-mag);
        }

        double m = power_mean(p, a, b);
        // Between min and max.
        REQUIRE(m >= std::min(a, b) * (1.0 - 1e-12));
        REQUIRE(m <= std::max(a, b) * (1.0 + 1e-12));
        // Symmetry.
        REQUIRE(power_mean(p, b, a) == m);
        // Homogeneity.
        double g = std::exp(logv(rng));
        REQUIRE(rel_err(power_mean(p, g * a, g * b), static_cast<long double>(g) * m) < 1e-12);
        // Reciprocal duality m_p(a,b) = 1 / m_{-p}(1/a, 1/b).
        REQUIRE(rel_err(1.0 / power_mean(-p, 1.0 / a, 1.0 / b), m) < 1e-12);
        // Monotone in p, equal only for a == b.
        if (p.finite()) {
            double above = power_mean(PValue(p.value() + 0.25), a, b);
            REQUIRE(above >= m * (1.0 - 1e-12));
            if (std::abs(std::log(a / b)) > 0.1) REQUIRE(above > m * (1.0 + 1e-9));
        }
        REQUIRE(power_mean(p, a, a) == a);
    }
}

TEST_CASE("power_mean rejects bad input") {
    CHECK_THROWS_AS(power_mean(1.0, -1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(power_mean(1.0, 0.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(power_mean(std::numeric_limits<double>::quiet_NaN(), 1.0, 2.0),
                    std::domain_error);
    CHECK_THROWS_AS(power_mean(1.0, std::numeric_limits<double>::quiet_NaN(), 2.0),
                    std::domain_error);
}

TEST_CASE("power_mean infinity conventions") {
    CHECK(power_mean(2.0, kInf, kInf) == kInf);
    CHECK(power_mean(0.0, 3.0, kInf) == kInf);
    CHECK(power_mean(2.0, 3.0, kInf) == kInf);
    CHECK(power_mean(PValue::pos_inf(), 3.0, kInf) == kInf);
    CHECK(power_mean(PValue::neg_inf(), 3.0, kInf) == 3.0);
    // Finite negative p: limit is 2^(1/|p|) * a.
    CHECK(power_mean(-1.0, 3.0, kInf) == Catch::Approx(6.0).epsilon(1e-15));
    CHECK(power_mean(-2.0, 5.0, kInf) == Catch::Approx(5.0 * std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("mean_quotient example and symmetry identities") {
    // m_1(4,1)/m_0(4,1) = 2.5 / 2.
    CHECK(mean_quotient(0.0, 1.0, 4.0) == Catch::Approx(1.25).epsilon(1e-15));

    std::mt19937_64 rng(7u);
    std::uniform_real_distribution<double> loga(std::log(1e-4), std::log(1e4));
    std::vector<PValue> ps = {PValue::neg_inf(), -3.0, -1.0, -0.25, 0.0, 0.5, 1.0, 2.0,
                              PValue::pos_inf()};
    for (int it = 0; it < 2000; ++it) {
        double alpha = std::exp(loga(rng));
        PValue p = ps[it % ps.size()], q = ps[(it * 7 + 3) % ps.size()];
        double f = mean_quotient(p, q, alpha);
        // phi(alpha) = phi(1/alpha).
        CHECK(std::abs(mean_quotient(p, q, 1.0 / alpha) - f) <= 1e-12 * std::abs(f));
        // phi_{-q,-p} = phi_{p,q}.
        CHECK(std::abs(mean_quotient(-q, -p, alpha) - f) <= 1e-12 * std::abs(f));
        CHECK(mean_quotient(p, p, alpha) == Catch::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("mean_quotient is increasing on [1,inf) exactly when p <= q") {
    std::vector<PValue> ps = {PValue::neg_inf(), -2.0, -1.0, 0.0, 0.5, 1.0, 3.0,
                              PValue::pos_inf()};
    std::vector<double> alphas;
    for (int k = 0; k <= 40; ++k) alphas.push_back(1.0 + 0.35 * k);
    for (PValue p : ps)
        for (PValue q : ps) {
            if (p == q) continue;
            bool increasing = true, decreasing = true;
            for (size_t k = 0; k + 1 < alphas.size(); ++k) {
                double d = mean_quotient(p, q, alphas[k + 1]) - mean_quotient(p, q, alphas[k]);
                if (d < -1e-13) increasing = false;
                if (d > 1e-13) decreasing = false;
            }
            if (p < q) {
                CHECK(increasing);
                CHECK_FALSE(decreasing);
            } else {
                CHECK(decreasing);
                CHECK_FALSE(increasing);
            }
        }
}

TEST_CASE("iteration_rate pinned examples and shape") {
    CHECK(iteration_rate(0.0, 16.0, 2) == Catch::Approx(2.0).epsilon(1e-15));
    CHECK(iteration_rate(1.0, 3.0, 1) == Catch::Approx(2.0).epsilon(1e-15));
    CHECK(iteration_rate(-1.0, 3.0, 1) == Catch::Approx(2.0).epsilon(1e-15));  // uses |p|
    CHECK(iteration_rate(0.5, 7.0, 0) == Catch::Approx(7.0).epsilon(1e-15));
    CHECK(iteration_rate(2.0, 1.0, 5) == 1.0);

    for (double p : {-2.0, -0.5, 0.0, 0.75, 1.0, 3.0, 1e4}) {
        double prev = iteration_rate(p, 5.0, 0);
        CHECK(prev == Catch::Approx(5.0).epsilon(1e-12));
        for (int i = 1; i <= 60; ++i) {
            double cur = iteration_rate(p, 5.0, i);
            CHECK(cur <= prev);
            if (prev > 1.0 + 1e-12) CHECK(cur < prev);  // strict until double saturation
            CHECK(cur >= 1.0);
            prev = cur;
        }
        if (std::abs(p) <= 3.0) {
            CHECK(prev == Catch::Approx(1.0).margin(1e-4));
        } else if (p == 1e4) {
            // Huge |p|: decay is r0max * 2^(-i/|p|) until r0max^|p| stops dominating 2^i.
            CHECK(prev == Catch::Approx(5.0 * std::exp2(-60.0 / 1e4)).epsilon(1e-12));
        }
    }

    // Successive (rate - 1) ratios tend to 1/2.
    for (double p : {0.0, 0.5, 1.0}) {
        for (int i = 20; i < 40; ++i) {
            double r0 = iteration_rate(p, 3.0, i) - 1.0;
            double r1 = iteration_rate(p, 3.0, i + 1) - 1.0;
            CHECK(r1 / r0 == Catch::Approx(0.5).margin(0.05));
        }
    }

    CHECK_THROWS_AS(iteration_rate(PValue::pos_inf(), 2.0, 1), std::domain_error);
    CHECK_THROWS_AS(iteration_rate(1.0, 0.5, 1), std::domain_error);
    CHECK_THROWS_AS(iteration_rate(1.0, 2.0, -1), std::domain_error);
}
