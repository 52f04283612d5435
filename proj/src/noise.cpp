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
#include "skg/noise.hpp"

#include <cmath>

#include "skg/philox.hpp"

namespace skg {

GeneratorMatrix noisy_matrix(const GeneratorMatrix& base, double mu) {
    const double diag = base.t1 + base.t4;
    return {base.t1 - 2.0 * mu * base.t1 / diag, base.t2 + mu, base.t3 + mu,
            base.t4 - 2.0 * mu * base.t4 / diag};
}

std::vector<GeneratorMatrix> noisy_matrices(const GeneratorMatrix& base, int levels,
                                            double b, std::uint64_t seed) {
    NoiseSpec spec{b == 0.0 ? NoiseMode::None : NoiseMode::PerLevel, b};
    spec.validate(base);
    std::vector<GeneratorMatrix> mats;
    mats.reserve(levels);
    for (int i = 0; i < levels; ++i) {
        const double u = unit_variate(seed, VariateStream::LevelNoise, 0,
                                      static_cast<std::uint32_t>(i), 0);
        mats.push_back(noisy_matrix(base, (2.0 * u - 1.0) * b));
    }
    return mats;
}

double vertex_bias(std::span<const GeneratorMatrix> level_matrices,
                   const GeneratorMatrix& base, std::uint64_t v, int levels) {
    const double sigma = base.t1 + base.t2 - 0.5;
    const double zero_base = 0.5 + sigma;
    const double one_base = 0.5 - sigma;
    double rho = 1.0;
    for (int i = 0; i < levels; ++i) {
        const GeneratorMatrix& ti = level_matrices[i];
        const double sigma_i = ti.t1 + ti.t2 - 0.5;
        const bool bit = (v >> (levels - 1 - i)) & 1u; // bit 0 = most significant
        rho *= bit ? (0.5 - sigma_i) / one_base : (0.5 + sigma_i) / zero_base;
    }
    return rho;
}

} // namespace skg
