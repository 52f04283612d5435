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
#include <vector>

#include "skg/params.hpp"

namespace skg {

// Closed-form predictions for the recursive quadrant model. Vertices whose
// ids contain exactly levels/2 + r zero bits form slice r; every vertex in a
// slice shares the same out-degree distribution. All heavy sums run in log
// space with a hard underflow floor (see logspace.hpp).

/// Number of vertices in slice r, i.e. C(levels, levels/2 + r).
/// Requires even levels and r in [-levels/2, levels/2].
std::uint64_t slice_size(int levels, int r);

/// ln slice_size via log-gamma; usable past the 64-bit range. `r` may be
/// half-integral as long as levels/2 + r is a whole number.
double log_slice_size(int levels, double r);

/// Probability that one insertion produces an out-edge at a fixed vertex of
/// slice r: (1/2+sigma)^(levels/2+r) * (1/2-sigma)^(levels/2-r).
double slice_out_probability(const DerivedParams& dp, int levels, int r);
double log_slice_out_probability(const DerivedParams& dp, int levels, double r);

/// Probability that one insertion touches a slice-r vertex as source or
/// target, for symmetric matrices: 2*p_r. The self-loop overlap term is
/// dropped; it is smaller by a factor <= max(t1/(t1+t2), t4/(t3+t4))^levels.
double slice_incident_probability(const DerivedParams& dp, int levels, int r);

/// Position of degree d on the log-tau grid anchored at lambda.
struct DegreeIndex {
    std::uint64_t d = 0;
    double theta = 0.0;       ///< ln(d/lambda)/ln(tau)
    std::int64_t nearest = 0; ///< nearest integer to theta, halves round up
    double nearest_gap = 0.0; ///< |theta - nearest|, in [0, 0.5]
    std::int64_t r_floor = 0; ///< floor(theta)
    double delta_frac = 0.0;  ///< theta - r_floor, in [0, 1)
};

/// Throws TauIsOne when tau == 1 (sigma == 0); use the uniform/Poisson path
/// instead in that case.
DegreeIndex degree_index(const DerivedParams& dp, std::uint64_t d);

/// A value plus an out-of-regime marker. Values are always computed; the flag
/// reports that the inputs left the range where the closed form is trusted.
struct FlaggedValue {
    double value = 0.0;
    bool out_of_regime = false;
};

/// Exact Binomial(m, p_r) probability mass at d.
double slice_degree_probability_exact(const DerivedParams& dp, int levels,
                                      std::uint64_t m, int r, std::uint64_t d);

/// Poisson-form approximation (lambda^d/d!) * tau^(r d) / exp(lambda tau^r).
/// Flagged out-of-regime when p_r > 1/sqrt(m) or d > sqrt(n).
FlaggedValue slice_degree_probability_approx(const DerivedParams& dp, int r,
                                             std::uint64_t d);

/// Expected number of vertices of out-degree d: the full slice sum with the
/// exact binomial pmf. This is the reference curve the estimates are judged
/// against.
double expected_degree_count_exact(const DerivedParams& dp, int levels,
                                   std::uint64_t m, std::uint64_t d);

/// Two-term estimate around the floor/ceiling slices of theta_d. Flagged when
/// d is outside [(e ln 2)*levels, sqrt(n)].
FlaggedValue expected_degree_count_lemma(const DerivedParams& dp, int levels,
                                         std::uint64_t d);

/// One-term upper-bound envelope at the nearest slice of theta_d. Same flag
/// range as the two-term estimate.
FlaggedValue expected_degree_count_theorem(const DerivedParams& dp, int levels,
                                           std::uint64_t d);

/// Expected number of isolated vertices, sum over slices of
/// C(levels, z) * exp(-2 lambda tau^r) with r = z - levels/2. Requires a
/// symmetric matrix; odd level counts are handled with half-integral r.
double isolated_expectation(const DerivedParams& dp, int levels);

/// Same expectation without the exponential shortcut: per slice
/// (1 - 2 p_r)^m, evaluated through log1p. Serves as the oracle for the
/// formula above; the two agree to o(1) in the level count.
double isolated_expectation_exact(const DerivedParams& dp, int levels,
                                  std::uint64_t m);

/// Expected number of distinct cells hit by m insertions: the sum over
/// quadrant-count compositions (a,b,c,d) of levels of
/// multinomial(levels; a,b,c,d) * (1 - (1 - t1^a t2^b t3^c t4^d)^m).
/// O(levels^3) terms. repeat fraction = 1 - result/m.
double expected_distinct_edges(const GeneratorMatrix& matrix, int levels,
                               std::uint64_t m);

/// One row of the per-degree prediction curves.
struct DegreeCurvePoint {
    std::uint64_t d = 0;
    double exact = 0.0;
    double lemma = 0.0;
    double theorem_bound = 0.0;
    bool out_of_regime = false;
};

/// Bundle of the analytic predictions for one parameter set. Isolated-vertex
/// fields are NaN when the matrix is asymmetric (the formula needs t2 == t3).
struct PredictionReport {
    double isolated_expectation = 0.0;
    double isolated_fraction = 0.0;
    double distinct_edge_expectation = 0.0;
    double repeat_fraction = 0.0;
    double nonisolated_avg_degree = 0.0;
    std::vector<DegreeCurvePoint> degree_curves;
};

/// Builds the full report; degree curves cover [dmin, dmax] (pass dmin > dmax
/// to skip them). The non-isolated average degree uses the distinct-edge
/// expectation, distinct/(n - isolated).
PredictionReport make_prediction_report(const GeneratorMatrix& matrix, int levels,
                                        std::uint64_t m, std::uint64_t dmin,
                                        std::uint64_t dmax);

} // namespace skg
