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

#include "skg/params.hpp"
#include "skg/presets.hpp"

using namespace skg;

namespace {

SkgParams base(const GeneratorMatrix& t, int levels, std::uint64_t m) {
    SkgParams p;
    p.matrix = t;
    p.levels = levels;
    p.insertions = m;
    p.seed = 1;
    return p;
}

} // namespace

TEST_CASE("matrix validation") {
    CHECK_NOTHROW(GeneratorMatrix{0.57, 0.19, 0.19, 0.05}.validate());
    CHECK_THROWS_AS((GeneratorMatrix{0.6, 0.2, 0.2, 0.05}.validate()), InvalidMatrix);
    CHECK_THROWS_AS((GeneratorMatrix{0.6, 0.4, 0.0, 0.0}.validate()), InvalidMatrix);
    CHECK_THROWS_AS((GeneratorMatrix{0.7, 0.4, 0.2, -0.3}.validate()), InvalidMatrix);
}

TEST_CASE("matrix predicates") {
    const GeneratorMatrix g500{0.57, 0.19, 0.19, 0.05};
    CHECK(g500.is_symmetric());
    CHECK(g500.theory_admissible());
    CHECK(g500.noise_bound() == doctest::Approx(0.19));

    const GeneratorMatrix web = preset("webnotredame").matrix;
    CHECK_FALSE(web.is_symmetric());

    const GeneratorMatrix uniform{0.25, 0.25, 0.25, 0.25};
    CHECK_FALSE(uniform.theory_admissible()); // t1 not strictly largest

    const GeneratorMatrix low_row{0.4, 0.05, 0.05, 0.5};
    CHECK_FALSE(low_row.theory_admissible()); // t1+t2 < 1/2 and t1 not largest

    const GeneratorMatrix transposed = web.transposed();
    CHECK(transposed.t2 == web.t3);
    CHECK(transposed.t3 == web.t2);
}

TEST_CASE("noise spec validation") {
    const GeneratorMatrix g500{0.57, 0.19, 0.19, 0.05};
    CHECK_NOTHROW((NoiseSpec{NoiseMode::None, 0.0}.validate(g500)));
    CHECK_THROWS_AS((NoiseSpec{NoiseMode::None, 0.1}.validate(g500)), InvalidNoiseSpec);
    CHECK_NOTHROW((NoiseSpec{NoiseMode::PerLevel, 0.18999}.validate(g500)));
    CHECK_THROWS_AS((NoiseSpec{NoiseMode::PerLevel, 0.19}.validate(g500)), NoiseTooLarge);
    CHECK_THROWS_AS((NoiseSpec{NoiseMode::PerEdge, 0.25}.validate(g500)), NoiseTooLarge);
    CHECK_THROWS_AS((NoiseSpec{NoiseMode::PerLevel, -0.1}.validate(g500)), InvalidNoiseSpec);
}

TEST_CASE("derived parameters for the preset matrices") {
    const auto dp500 = derive_params(base(preset("graph500").matrix, 16, std::uint64_t{16} << 16));
    CHECK(dp500.sigma == doctest::Approx(0.26).epsilon(1e-12));
    CHECK(dp500.tau == doctest::Approx((1.0 + 0.52) / (1.0 - 0.52)).epsilon(1e-12));
    CHECK(dp500.delta == 16.0);
    CHECK(dp500.n == 65536);
    CHECK(dp500.theory_admissible);

    const auto dpca = derive_params(base(preset("cahepph").matrix, 14, 237010));
    CHECK(dpca.sigma == doctest::Approx(0.11).epsilon(1e-12));

    const auto dpweb = derive_params(base(preset("webnotredame").matrix, 18, 1497134));
    CHECK(dpweb.sigma == doctest::Approx(0.18).epsilon(1e-12));
}

TEST_CASE("uniform matrix gives the degenerate grid") {
    const auto dp = derive_params(base({0.25, 0.25, 0.25, 0.25}, 10, 10240));
    CHECK(dp.sigma == 0.0);
    CHECK(dp.tau == 1.0);
    CHECK(dp.lambda == doctest::Approx(10.0).epsilon(1e-14)); // lambda = delta
    CHECK(dp.delta == 10.0);
}

TEST_CASE("lambda is assembled in log space") {
    // levels=42: (1-4 sigma^2)^21 alone is ~1.3e-3, fine either way; the
    // log-space value must match the direct product to 1e-12.
    const auto dp = derive_params(base(preset("graph500").matrix, 42, std::uint64_t{16} << 42));
    const double direct = 16.0 * std::pow(1.0 - 4 * 0.26 * 0.26, 21.0);
    CHECK(dp.lambda == doctest::Approx(direct).epsilon(1e-12));
    CHECK(dp.log_lambda == doctest::Approx(std::log(direct)).epsilon(1e-12));
}

TEST_CASE("odd level counts are accepted by derive_params") {
    const auto dp = derive_params(base(preset("graph500").matrix, 15, std::uint64_t{16} << 15));
    const double direct = 16.0 * std::pow(1.0 - 4 * 0.26 * 0.26, 7.5);
    CHECK(dp.lambda == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("sigma out of range") {
    CHECK_THROWS_AS(derive_params(base({0.2, 0.2, 0.3, 0.3}, 8, 256)), SigmaOutOfRange);
    // t1+t2 = 1 would need t3+t4 = 0, so sigma >= 1/2 cannot occur with a
    // valid matrix; the negative side is the reachable error.
}

TEST_CASE("params validation") {
    CHECK_THROWS_AS(base(preset("graph500").matrix, 0, 1).validate(), LevelsOutOfRange);
    CHECK_THROWS_AS(base(preset("graph500").matrix, 63, 1).validate(), LevelsOutOfRange);
    auto p = base(preset("graph500").matrix, 8, 0);
    CHECK_THROWS_AS(p.validate(), Error);
    p.insertions = 10;
    CHECK_NOTHROW(p.validate());
    CHECK(p.vertex_count() == 256);
}

TEST_CASE("unknown preset") {
    CHECK_THROWS_AS(preset("krongraph"), UnknownPreset);
    CHECK(preset("graph500").insertions_for(20) == (std::uint64_t{16} << 20));
    CHECK(preset("cahepph").insertions_for(14) == 237010);
}
