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
#include <span>
#include <vector>

#include "skg/params.hpp"

namespace skg {

/// One perturbed matrix: the off-diagonal entries move by +mu, the diagonal
/// ones by -2*mu*t/(t1+t4), so the perturbed entries still sum to 1 and the
/// expectation over mu ~ U[-b, b] is the base matrix.
GeneratorMatrix noisy_matrix(const GeneratorMatrix& base, double mu);

/// Per-level amplitudes mu_i ~ U[-b, b] drawn from the level-noise stream of
/// `seed`; one matrix per level, shared by every insertion of the graph.
/// Throws NoiseTooLarge when b >= min((t1+t4)/2, t2, t3).
std::vector<GeneratorMatrix> noisy_matrices(const GeneratorMatrix& base, int levels,
                                            double b, std::uint64_t seed);

/// Multiplicative bias of vertex v under the given level matrices: the product
/// over levels of (1/2+sigma_i)/(1/2+sigma) for zero bits and
/// (1/2-sigma_i)/(1/2-sigma) for one bits, bit 0 of the id being the most
/// significant. Equals 1 for every vertex when the level matrices all match
/// the base.
double vertex_bias(std::span<const GeneratorMatrix> level_matrices,
                   const GeneratorMatrix& base, std::uint64_t v, int levels);

/// Per-vertex rate lambda * rho.
inline double biased_rate(const DerivedParams& dp, double rho) {
    return dp.lambda * rho;
}

} // namespace skg
