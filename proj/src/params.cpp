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
#include "skg/params.hpp"

#include <algorithm>
#include <cmath>

namespace skg {

namespace {
constexpr double kSumTol = 1e-12;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}
} // namespace

void GeneratorMatrix::validate() const {
    if (std::abs(sum() - 1.0) > kSumTol) {
        throw InvalidMatrix("entries must sum to 1, got " + fmt(sum()));
    }
    if (std::min({t1, t2, t3, t4}) <= 0.0) {
        throw InvalidMatrix("all entries must be strictly positive");
    }
}

bool GeneratorMatrix::is_symmetric(double tol) const {
    return std::abs(t2 - t3) <= tol;
}

bool GeneratorMatrix::theory_admissible() const {
    return t1 > t2 && t1 > t3 && t1 > t4 && std::min(t1 + t2, t1 + t3) > 0.5;
}

double GeneratorMatrix::noise_bound() const {
    return std::min({(t1 + t4) / 2.0, t2, t3});
}

const char* to_string(NoiseMode mode) {
    switch (mode) {
        case NoiseMode::None: return "none";
        case NoiseMode::PerLevel: return "per-level";
        case NoiseMode::PerEdge: return "per-edge";
    }
    return "none";
}

NoiseMode noise_mode_from_string(const std::string& s) {
    if (s == "none") return NoiseMode::None;
    if (s == "per-level") return NoiseMode::PerLevel;
    if (s == "per-edge") return NoiseMode::PerEdge;
    throw InvalidNoiseSpec("unknown noise mode '" + s + "'");
}

void NoiseSpec::validate(const GeneratorMatrix& matrix) const {
    if (amplitude < 0.0) {
        throw InvalidNoiseSpec("amplitude must be >= 0");
    }
    if (mode == NoiseMode::None) {
        if (amplitude != 0.0) {
            throw InvalidNoiseSpec("mode=none requires amplitude 0");
        }
        return;
    }
    const double bound = matrix.noise_bound();
    if (amplitude >= bound) {
        throw NoiseTooLarge("amplitude " + fmt(amplitude) +
                            " must be < min((t1+t4)/2, t2, t3) = " + fmt(bound));
    }
}

void SkgParams::validate() const {
    matrix.validate();
    if (levels < 1 || levels > kMaxLevels) {
        throw LevelsOutOfRange("levels must be in [1, " + std::to_string(kMaxLevels) +
                               "], got " + std::to_string(levels));
    }
    if (insertions == 0) {
        throw Error("InvalidInsertions", "insertion count must be positive");
    }
    noise.validate(matrix);
}

DerivedParams derive_params(const SkgParams& p) {
    p.matrix.validate();
    if (p.levels < 1 || p.levels > kMaxLevels) {
        throw LevelsOutOfRange("levels must be in [1, " + std::to_string(kMaxLevels) + "]");
    }

    DerivedParams dp;
    dp.matrix = p.matrix;
    dp.n = p.vertex_count();
    dp.delta = static_cast<double>(p.insertions) / static_cast<double>(dp.n);

    double sigma = p.matrix.t1 + p.matrix.t2 - 0.5;
    if (sigma < 0.0 && sigma > -kSumTol) sigma = 0.0; // rounding guard
    if (sigma < 0.0 || sigma >= 0.5) {
        throw SigmaOutOfRange("sigma = t1+t2-0.5 must lie in [0, 1/2), got " + fmt(sigma));
    }
    dp.sigma = sigma;
    dp.tau = (1.0 + 2.0 * sigma) / (1.0 - 2.0 * sigma);
    dp.log_tau = std::log(dp.tau);
    // lambda = delta*(1-4 sigma^2)^(levels/2), assembled in log space so large
    // level counts cannot underflow the power before the product is taken.
    dp.log_lambda = std::log(dp.delta) + 0.5 * p.levels * std::log1p(-4.0 * sigma * sigma);
    dp.lambda = std::exp(dp.log_lambda);
    dp.theory_admissible = p.matrix.theory_admissible();
    return dp;
}

} // namespace skg
