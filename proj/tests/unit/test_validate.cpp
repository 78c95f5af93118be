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

#include <ssris/random.hpp>
#include <ssris/validate.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

using namespace ssris;
using doctest::Approx;

TEST_CASE("Philox4x32-10 known-answer vectors")
{
    using C = Philox4x32::Counter;
    CHECK(Philox4x32::generate({0, 0, 0, 0}, {0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32::generate({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff})
          == C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32::generate({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0})
          == C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("uniforms stay strictly inside (0, 1)")
{
    CHECK(uniform_open01(0) > 0.0);
    CHECK(uniform_open01(~0ULL) < 1.0);
    CHECK(uniform_open01(1ULL << 63) == Approx(0.5));
}

TEST_CASE("streams are reproducible, seekable and distinct")
{
    RandomStream a(42, 3), b(42, 3), other_stream(42, 4), other_seed(43, 3);
    const auto first = a.next_uniform_pair();
    CHECK(first == b.next_uniform_pair());
    CHECK(first != other_stream.next_uniform_pair());
    CHECK(first != other_seed.next_uniform_pair());
    for (int i = 0; i < 10; ++i)
        a.next_uniform_pair();
    const auto eleventh = a.next_uniform_pair();
    b.skip_to(11);
    CHECK(b.next_uniform_pair() == eleventh);

    std::set<double> seen;
    RandomStream s(1, 0);
    for (int i = 0; i < 10000; ++i) {
        const auto [u, v] = s.next_uniform_pair();
        seen.insert(u);
        seen.insert(v);
    }
    CHECK(seen.size() == 20000);
}

TEST_CASE("fading draws have Rayleigh envelope moments")
{
    RandomStream stream(9, 0);
    const auto g = sample_fading(200'000, stream);
    const double n = static_cast<double>(g.size());
    const double mean_abs = g.cwiseAbs().sum() / n;
    const double mean_pow = g.squaredNorm() / n;
    const double var_abs = mean_pow - mean_abs * mean_abs;
    const double mean_re = g.real().sum() / n;
    // 5 sigma bands for 2e5 draws.
    CHECK(std::abs(mean_abs - std::sqrt(std::numbers::pi) / 2.0) <= 5.0 * std::sqrt(0.2146 / n));
    CHECK(std::abs(var_abs - (4.0 - std::numbers::pi) / 4.0) <= 0.005);
    CHECK(std::abs(mean_pow - 1.0) <= 5.0 / std::sqrt(n));
    CHECK(std::abs(mean_re) <= 5.0 * std::sqrt(0.5 / n));
}

TEST_CASE("envelope sums do not depend on the stream count")
{
    McConfig one{20'000, 123, 1};
    McConfig four{20'000, 123, 4};
    McConfig odd{20'000, 123, 7};
    const auto a = sample_envelope_sums(16, one);
    CHECK(a == sample_envelope_sums(16, four));
    CHECK(a == sample_envelope_sums(16, odd));
    McConfig other{20'000, 124, 1};
    CHECK(a != sample_envelope_sums(16, other));
}

TEST_CASE("KS distance to the truncated Gaussian shrinks with M")
{
    const McConfig cfg{200'000, 2024, 1};
    double prev = 1.0;
    for (Eigen::Index m : {10, 32, 100, 316}) {
        const double d = ks_distance(sample_envelope_sums(m, cfg), OutageModel::for_elements(static_cast<double>(m)));
        CAPTURE(m);
        CHECK(d < prev);
        // The skew of the Rayleigh sum keeps M = 10 just above 1e-2.
        if (m >= 32)
            CHECK(d <= 1e-2);
        prev = d;
    }
}

TEST_CASE("empirical outage tracks the analytic value within sampling error at moderate M")
{
    const SystemParams p;
    const auto geom = default_geometry();
    const auto dc = derive_constants(p, geom);
    const McConfig cfg{100'000, 5, 1};
    const auto model = OutageModel::for_elements(100);
    std::vector<double> gammas;
    for (double level : {0.05, 0.2, 0.5})
        gammas.push_back(snr_for_outage(level, model, dc.gamma0, p.num_bs_antennas));
    const auto reports = empirical_outage_curve(p, geom, 100, gammas, cfg, true);
    REQUIRE(reports.size() == 3);
    for (const auto& r : reports) {
        CHECK(r.abs_gap <= 1e-2);
        CHECK(r.binomial_stderr > 0.0);
        CHECK(r.binomial_stderr <= 0.5 / std::sqrt(100'000.0));
        CHECK(r.ks_distance.has_value());
        CHECK(r.num_samples == 100'000);
    }
    CHECK(reports[0].empirical_outage < reports[1].empirical_outage);
    CHECK(empirical_outage(p, geom, 100, gammas[1], cfg).empirical_outage == reports[1].empirical_outage);
    CHECK(empirical_outage(p, geom, 100, 0.0, cfg).empirical_outage == 0.0);
}

TEST_CASE("closed-form link identities")
{
    const SystemParams p;
    const auto geom = default_geometry();
    const auto los = verify_los_identities(p, geom, 8, 32, 25);
    CHECK(los.passed());
    CHECK(los.max_snr_rel_err <= 1e-9);
    CHECK(los.max_power_rel_err <= 1e-9);
    CHECK(los.max_collinearity_err <= 1e-9);
    const auto nlos = verify_nlos_identities(p, geom, 8, 32, 25);
    CHECK(nlos.passed());
    CHECK(nlos.trials == 25);
}

TEST_CASE("Monte Carlo configuration is validated")
{
    CHECK_THROWS_AS((McConfig{0, 1, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((McConfig{10, 1, 0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS(sample_envelope_sums(0, McConfig{10, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(ks_distance({}, OutageModel::for_elements(4)), std::invalid_argument);
}
