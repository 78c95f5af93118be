// SPDX-License-Identifier: Apache-2.0
//
// ssris - element-count feasibility solver for self-sustainable RIS
// Copyright (C) 2026 The ssris authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <ssris/outage.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace ssris;
using doctest::Approx;

namespace {

double rel(double v, double ref) { return std::abs(v - ref) / std::abs(ref); }

} // namespace

TEST_CASE("Q function reference values")
{
    // 50-digit references.
    CHECK(rel(q_function(3.0), 1.349898031630094527e-3) <= 1e-14);
    CHECK(rel(q_function(-1.0), 0.8413447460685429) <= 1e-15);
    CHECK(rel(q_function(8.0), 6.220960574271784e-16) <= 1e-13);
    CHECK(rel(q_function(10.0), 7.619853024160526e-24) <= 1e-13);
    CHECK(rel(q_function(20.0), 2.753624118606234e-89) <= 1e-12);
    CHECK(q_function(0.0) == 0.5);
}

TEST_CASE("Q function symmetry and inverse")
{
    for (double x = -8.0; x <= 8.0; x += 0.25)
        CHECK(q_function(x) + q_function(-x) == Approx(1.0).epsilon(1e-15));
    CHECK(rel(q_function_inverse(1e-3), 3.0902323061678135415) <= 1e-14);
    CHECK(rel(q_function_inverse(0.3), 0.52440051270804078404) <= 1e-14);
    for (double p : {1e-300, 1e-12, 0.01, 0.5, 0.9, 1.0 - 1e-9})
        CHECK(rel(q_function(q_function_inverse(p)), p) <= 1e-12);
    CHECK_THROWS_AS(q_function_inverse(0.0), std::domain_error);
    CHECK_THROWS_AS(q_function_inverse(1.0), std::domain_error);
}

TEST_CASE("truncation constant")
{
    const double c1 = OutageModel::for_elements(1).c_norm;
    CHECK(rel(c1, 1.0286693115537891503) <= 1e-14);
    CHECK(rel(OutageModel::for_elements(10).c_norm - 1.0, 7.2593141314105401634e-10) <= 1e-5);
    CHECK(rel(OutageModel::for_elements(16).c_norm, 1.0000000000000099) <= 1e-15);
    for (double m : {1.0, 10.0, 100.0, 10000.0}) {
        const auto model = OutageModel::for_elements(m);
        CAPTURE(m);
        CHECK(model.c_norm >= 1.0);
        CHECK(model.c_norm * q_function(-model.mu_y / model.sigma_y) == Approx(1.0).epsilon(1e-15));
        CHECK(model.mu_y == Approx(m * std::sqrt(std::numbers::pi) / 2.0));
        CHECK(model.sigma_y * model.sigma_y == Approx(m * (4.0 - std::numbers::pi) / 4.0));
    }
    CHECK_THROWS_AS(OutageModel::for_elements(0.0), std::invalid_argument);
    CHECK_THROWS_AS(OutageModel::for_elements(-3.0), std::invalid_argument);
}

TEST_CASE("truncated Gaussian CDF reference values")
{
    const auto m10 = OutageModel::for_elements(10);
    CHECK(rel(truncated_gaussian_cdf(1.0, m10), 3.9303692899970859709e-8) <= 1e-9);
    CHECK(rel(truncated_gaussian_cdf(3.0, m10), 0.000031438244185936681737) <= 1e-12);
    CHECK(rel(truncated_gaussian_cdf(6.0, m10), 0.025358800540976433777) <= 1e-13);
    CHECK(rel(truncated_gaussian_cdf(8.862269254527579, m10), 0.49999999963703397454) <= 1e-13);
    CHECK(rel(truncated_gaussian_cdf(12.0, m10), 0.98389918844595966499) <= 1e-14);
    const auto m1 = OutageModel::for_elements(1);
    CHECK(rel(truncated_gaussian_cdf(0.5, m1), 0.17934444977331361208) <= 1e-13);
    const auto m16 = OutageModel::for_elements(16);
    CHECK(truncated_gaussian_cdf(m16.mu_y, m16) == Approx(0.49999999999999506).epsilon(1e-15));
}

TEST_CASE("CDF is a distribution function on y >= 0")
{
    for (double m : {1.0, 3.5, 10.0, 100.0, 2000.0}) {
        const auto model = OutageModel::for_elements(m);
        CHECK(truncated_gaussian_cdf(0.0, model) == 0.0);
        CHECK(truncated_gaussian_cdf(-1.0, model) == 0.0);
        CHECK(truncated_gaussian_cdf(1e-300, model) >= 0.0);
        double prev = 0.0;
        for (double y = model.mu_y / 50.0; y < 3.0 * model.mu_y; y += model.mu_y / 50.0) {
            const double f = truncated_gaussian_cdf(y, model);
            CHECK(f >= prev);
            CHECK(f <= 1.0);
            prev = f;
        }
        CHECK(truncated_gaussian_cdf(model.mu_y + 40.0 * model.sigma_y, model) == 1.0);
    }
}

TEST_CASE("quantile inverts the CDF")
{
    for (double m : {1.0, 10.0, 100.0, 5000.0}) {
        const auto model = OutageModel::for_elements(m);
        for (double p : {1e-9, 1e-4, 0.01, 0.1, 0.5, 0.9}) {
            const double y = truncated_gaussian_quantile(p, model);
            CAPTURE(m);
            CAPTURE(p);
            // At small M the truncated mass Q(mu/sigma) is subtracted in the
            // lower tail, which bounds the attainable relative accuracy.
            const double cond = 1e-15 * q_function(model.mu_y / model.sigma_y) / p;
            CHECK(rel(truncated_gaussian_cdf(y, model), p) <= 1e-9 + cond);
        }
        CHECK(truncated_gaussian_quantile(0.0, model) == 0.0);
    }
    CHECK_THROWS_AS(truncated_gaussian_quantile(1.0, OutageModel::for_elements(4)), std::domain_error);
}

TEST_CASE("outage probability and its inverse threshold")
{
    const double gamma0 = 1e-3;
    const auto model = OutageModel::for_elements(32);
    for (double p : {0.01, 0.1, 0.5}) {
        const double g = snr_for_outage(p, model, gamma0, 16);
        CHECK(rel(outage_probability(g, model, gamma0, 16), p) <= 1e-10);
    }
    CHECK(outage_probability(0.0, model, gamma0, 16) == 0.0);
    CHECK_THROWS_AS(outage_probability(-1.0, model, gamma0, 16), std::invalid_argument);
    CHECK_THROWS_AS(outage_probability(1.0, model, 0.0, 16), std::invalid_argument);
    CHECK_THROWS_AS(outage_probability(1.0, model, gamma0, 0), std::invalid_argument);
}

TEST_CASE("rearranged constraint agrees with the outage probability")
{
    // f2 - f1 = (eps - P_out) / C, so the signs agree everywhere.
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> lm(0.0, std::log(3000.0)), le(std::log(1e-6), std::log(0.5)),
        lg(std::log(1e-3), std::log(1e3));
    const double gamma0 = 1e-4;
    const int n = 64;
    for (int i = 0; i < 500; ++i) {
        const double m = std::exp(lm(rng));
        const double eps = std::exp(le(rng));
        const double gamma = std::exp(lg(rng));
        const auto model = OutageModel::for_elements(m);
        const double pout = outage_probability(gamma, model, gamma0, n);
        const double diff = f2(m, gamma, gamma0, n) - f1(m, eps);
        CHECK(diff == Approx((eps - pout) / model.c_norm).epsilon(1e-9).scale(1e-12));
        if (std::abs(eps - pout) > 1e-12)
            CHECK((diff >= 0.0) == (pout <= eps));
    }
}

TEST_CASE("rate thresholds")
{
    CHECK(rel(snr_threshold_es(10e6, 50e6), 0.14869835499703500) <= 1e-15);
    CHECK(snr_threshold_es(0.0, 50e6) == 0.0);
    CHECK(snr_threshold_ts(10e6, 50e6, 0.0) == snr_threshold_es(10e6, 50e6));
    CHECK(rel(snr_threshold_ts(10e6, 50e6, 0.5), snr_threshold_es(20e6, 50e6)) <= 1e-15);
    double prev = 0.0;
    for (double tau = 0.0; tau < 0.99; tau += 0.05) {
        const double g = snr_threshold_ts(10e6, 50e6, tau);
        CHECK(g > prev);
        prev = g;
    }
    CHECK_THROWS_AS(snr_threshold_ts(10e6, 50e6, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(snr_threshold_ts(10e6, 50e6, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(snr_threshold_es(-1.0, 50e6), std::invalid_argument);
}

TEST_CASE("epsilon range")
{
    CHECK_NOTHROW(check_epsilon(kMinEpsilon));
    CHECK_NOTHROW(check_epsilon(kMaxEpsilon));
    CHECK_THROWS_AS(check_epsilon(0.0), std::invalid_argument);
    CHECK_THROWS_AS(check_epsilon(0.6), std::invalid_argument);
    CHECK_THROWS_AS(check_epsilon(std::nan("")), std::invalid_argument);
    OutageSpec spec{1.0, 0.01, 1e6};
    CHECK_NOTHROW(spec.validate());
    spec.epsilon = 1.0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}
