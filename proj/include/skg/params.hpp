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
#pragma once

#include <cstdint>
#include <string>

#include "skg/error.hpp"

namespace skg {

/// Vertex ids are 64-bit; the id space is 2^levels.
inline constexpr int kMaxLevels = 62;

/// 2x2 recursive quadrant matrix. Entries are the probabilities of the four
/// quadrants (top-left, top-right, bottom-left, bottom-right); they must be
/// strictly positive and sum to 1.
struct GeneratorMatrix {
    double t1 = 0.25;
    double t2 = 0.25;
    double t3 = 0.25;
    double t4 = 0.25;

    double sum() const { return t1 + t2 + t3 + t4; }

    void validate() const;

    bool is_symmetric(double tol = 1e-12) const;

    /// True when t1 is the strictly largest entry and both row/column sums
    /// through t1 exceed 1/2. The closed-form degree machinery assumes this;
    /// callers are expected to check the flag rather than rely on it silently.
    bool theory_admissible() const;

    /// Largest admissible noise amplitude (exclusive): below this every
    /// perturbed entry stays strictly positive.
    double noise_bound() const;

    GeneratorMatrix transposed() const { return {t1, t3, t2, t4}; }
};

enum class NoiseMode { None, PerLevel, PerEdge };

const char* to_string(NoiseMode mode);
NoiseMode noise_mode_from_string(const std::string& s);

struct NoiseSpec {
    NoiseMode mode = NoiseMode::None;
    double amplitude = 0.0;

    void validate(const GeneratorMatrix& matrix) const;
};

/// Full generation recipe. Identical params (plus chunk size) reproduce the
/// same edge list bit for bit.
struct SkgParams {
    GeneratorMatrix matrix;
    int levels = 1;
    std::uint64_t insertions = 0;
    std::uint64_t seed = 0;
    NoiseSpec noise;

    std::uint64_t vertex_count() const { return std::uint64_t{1} << levels; }

    void validate() const;
};

/// Quantities derived from (matrix, levels, insertions). sigma is the skew
/// t1+t2-1/2; tau = (1+2*sigma)/(1-2*sigma) is the per-slice rate ratio and
/// lambda = delta*(1-4*sigma^2)^(levels/2) the base rate. log_tau/log_lambda
/// are carried so downstream sums can stay in log space.
struct DerivedParams {
    GeneratorMatrix matrix;
    std::uint64_t n = 0;
    double delta = 0.0;
    double sigma = 0.0;
    double tau = 1.0;
    double lambda = 0.0;
    double log_tau = 0.0;
    double log_lambda = 0.0;
    bool theory_admissible = false;
};

/// Computes DerivedParams. Accepts odd level counts (lambda uses the real
/// exponent levels/2); slice-indexed operations downstream reject odd levels
/// themselves. Throws SigmaOutOfRange unless sigma is in [0, 1/2).
DerivedParams derive_params(const SkgParams& p);

} // namespace skg
