/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <doctest.h>

#include <cmath>

#include "skg/noise.hpp"
#include "skg/presets.hpp"

using namespace skg;

namespace {
const GeneratorMatrix kG500{0.57, 0.19, 0.19, 0.05};
}

TEST_CASE("perturbed matrix at a forced amplitude") {
    // mu = +0.1: off-diagonals gain 0.1, diagonals shed 2*mu*t/(t1+t4)
    const GeneratorMatrix t = noisy_matrix(kG500, 0.1);
    CHECK(t.t1 == doctest::Approx(0.38612903225806449).epsilon(1e-12));
    CHECK(t.t2 == doctest::Approx(0.29).epsilon(1e-12));
    CHECK(t.t3 == doctest::Approx(0.29).epsilon(1e-12));
    CHECK(t.t4 == doctest::Approx(0.033870967741935481).epsilon(1e-12));
    CHECK(t.sum() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("zero amplitude reproduces the base matrix bit for bit") {
    const auto mats = noisy_matrices(kG500, 16, 0.0, 12345);
    REQUIRE(mats.size() == 16);
    for (const auto& t : mats) {
        CHECK(t.t1 == kG500.t1);
        CHECK(t.t2 == kG500.t2);
        CHECK(t.t3 == kG500.t3);
        CHECK(t.t4 == kG500.t4);
    }
}

TEST_CASE("perturbed matrices stay stochastic and positive") {
    const double b = 0.18; // just under the 0.19 bound
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        for (const auto& t : noisy_matrices(kG500, 20, b, seed)) {
            CHECK(std::abs(t.sum() - 1.0) <= 1e-12);
            CHECK(t.t1 > 0.0);
            CHECK(t.t2 > 0.0);
            CHECK(t.t3 > 0.0);
            CHECK(t.t4 > 0.0);
        }
    }
    CHECK_THROWS_AS(noisy_matrices(kG500, 16, 0.19, 1), NoiseTooLarge);
    CHECK_THROWS_AS(noisy_matrices(kG500, 16, 0.25, 1), NoiseTooLarge);
}

TEST_CASE("perturbation is unbiased: the entrywise mean is the base matrix") {
    // 10^5 independent draws; the amplitude is uniform in [-b, b], so each
    // entry's standard error follows from var(mu) = b^2/3.
    const int draws = 100000;
    const double b = 0.1;
    const auto mats = noisy_matrices(kG500, draws, b, 777);
    double s1 = 0, s2 = 0, s3 = 0, s4 = 0;
    for (const auto& t : mats) {
        s1 += t.t1; s2 += t.t2; s3 += t.t3; s4 += t.t4;
    }
    const double inv = 1.0 / draws;
    const double se_mu = b / std::sqrt(3.0 * draws);
    const double diag_scale1 = 2.0 * kG500.t1 / (kG500.t1 + kG500.t4);
    const double diag_scale4 = 2.0 * kG500.t4 / (kG500.t1 + kG500.t4);
    CHECK(std::abs(s1 * inv - kG500.t1) <= 3.0 * se_mu * diag_scale1);
    CHECK(std::abs(s2 * inv - kG500.t2) <= 3.0 * se_mu);
    CHECK(std::abs(s3 * inv - kG500.t3) <= 3.0 * se_mu);
    CHECK(std::abs(s4 * inv - kG500.t4) <= 3.0 * se_mu * diag_scale4);
}

TEST_CASE("vertex bias is 1 without noise and the pure product at the poles") {
    const int levels = 16;
    const auto base_mats = noisy_matrices(kG500, levels, 0.0, 3);
    CHECK(vertex_bias(base_mats, kG500, 0xBEEF, levels) == doctest::Approx(1.0).epsilon(1e-14));

    const auto mats = noisy_matrices(kG500, levels, 0.1, 3);
    const double sigma = kG500.t1 + kG500.t2 - 0.5;
    double zero_product = 1.0, ones_product = 1.0;
    for (const auto& t : mats) {
        const double sigma_i = t.t1 + t.t2 - 0.5;
        zero_product *= (0.5 + sigma_i) / (0.5 + sigma);
        ones_product *= (0.5 - sigma_i) / (0.5 - sigma);
    }
    CHECK(vertex_bias(mats, kG500, 0, levels) ==
          doctest::Approx(zero_product).epsilon(1e-14));
    CHECK(vertex_bias(mats, kG500, (std::uint64_t{1} << levels) - 1, levels) ==
          doctest::Approx(ones_product).epsilon(1e-14));
}

TEST_CASE("log bias of the all-zeros vertex is centred") {
    // amplitude c/sqrt(levels) with c = 0.4: per-level log-bias means are
    // O(c^2/levels), so the average log bias over many noise draws stays
    // within 0.1 of zero.
    const int levels = 16;
    const double b = 0.4 / std::sqrt(16.0);
    double total = 0.0;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) {
        const auto mats = noisy_matrices(kG500, levels, b, 50000 + i);
        total += std::log(vertex_bias(mats, kG500, 0, levels));
    }
    CHECK(std::abs(total / draws) <= 0.1);
}

TEST_CASE("biased rate scales lambda") {
    SkgParams p;
    p.matrix = kG500;
    p.levels = 16;
    p.insertions = std::uint64_t{16} << 16;
    const auto dp = derive_params(p);
    CHECK(biased_rate(dp, 2.0) == doctest::Approx(2.0 * dp.lambda));
}
