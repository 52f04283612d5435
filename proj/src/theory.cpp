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
#include "skg/theory.hpp"

#include <cmath>

#include "skg/logspace.hpp"

namespace skg {

namespace {

void require_even(int levels) {
    if (levels % 2 != 0) {
        throw OddLevels("operation needs an even level count, got " +
                        std::to_string(levels));
    }
}

void require_slice(int levels, int r) {
    if (r < -levels / 2 || r > levels / 2) {
        throw SliceOutOfRange("slice " + std::to_string(r) + " outside [-" +
                              std::to_string(levels / 2) + ", " +
                              std::to_string(levels / 2) + "]");
    }
}

void require_symmetric(const GeneratorMatrix& t) {
    if (!t.is_symmetric()) {
        throw AsymmetricMatrix("t2 and t3 differ beyond 1e-12");
    }
}

double lower_degree_edge(int levels) {
    return std::exp(1.0) * std::log(2.0) * levels; // (e ln 2) * levels
}

} // namespace

std::uint64_t slice_size(int levels, int r) {
    require_even(levels);
    require_slice(levels, r);
    return binomial_u64(static_cast<unsigned>(levels),
                        static_cast<unsigned>(levels / 2 + r));
}

double log_slice_size(int levels, double r) {
    const double k = levels / 2.0 + r;
    const std::int64_t ki = std::llround(k);
    if (std::abs(k - static_cast<double>(ki)) > 1e-9) {
        throw SliceOutOfRange("levels/2 + r must be integral");
    }
    return log_binomial(static_cast<std::uint64_t>(levels), ki);
}

double log_slice_out_probability(const DerivedParams& dp, int levels, double r) {
    const double half = levels / 2.0;
    if (r < -half || r > half) {
        throw SliceOutOfRange("slice " + std::to_string(r) + " outside range");
    }
    return (half + r) * std::log(0.5 + dp.sigma) +
           (half - r) * std::log(0.5 - dp.sigma);
}

double slice_out_probability(const DerivedParams& dp, int levels, int r) {
    require_even(levels);
    return exp_floor(log_slice_out_probability(dp, levels, r));
}

double slice_incident_probability(const DerivedParams& dp, int levels, int r) {
    require_symmetric(dp.matrix);
    require_even(levels);
    require_slice(levels, r);
    return 2.0 * slice_out_probability(dp, levels, r);
}

DegreeIndex degree_index(const DerivedParams& dp, std::uint64_t d) {
    if (d == 0) throw Error("InvalidDegree", "degree must be >= 1");
    if (dp.tau <= 1.0) {
        throw TauIsOne("tau == 1 leaves the degree grid undefined (sigma == 0)");
    }
    DegreeIndex idx;
    idx.d = d;
    idx.theta = (std::log(static_cast<double>(d)) - dp.log_lambda) / dp.log_tau;
    // Half-integral theta rounds up: floor(theta + 1/2).
    idx.nearest = static_cast<std::int64_t>(std::floor(idx.theta + 0.5));
    idx.nearest_gap = std::abs(idx.theta - static_cast<double>(idx.nearest));
    idx.r_floor = static_cast<std::int64_t>(std::floor(idx.theta));
    idx.delta_frac = idx.theta - static_cast<double>(idx.r_floor);
    return idx;
}

double slice_degree_probability_exact(const DerivedParams& dp, int levels,
                                      std::uint64_t m, int r, std::uint64_t d) {
    require_even(levels);
    require_slice(levels, r);
    if (d > m) return 0.0;
    const double log_p = log_slice_out_probability(dp, levels, r);
    const double p = exp_floor(log_p);
    const double md = static_cast<double>(m);
    const double dd = static_cast<double>(d);
    double log_pmf = log_binomial(m, static_cast<std::int64_t>(d)) + dd * log_p +
                     (md - dd) * std::log1p(-p);
    return exp_floor(log_pmf);
}

FlaggedValue slice_degree_probability_approx(const DerivedParams& dp, int r,
                                             std::uint64_t d) {
    FlaggedValue out;
    const double dd = static_cast<double>(d);
    const double m = dp.delta * static_cast<double>(dp.n);
    // lambda * tau^r == m * p_r, so p_r is available without the level count.
    const double log_rate = dp.log_lambda + r * dp.log_tau;
    const double p_r = exp_floor(log_rate) / m;
    out.out_of_regime = p_r > 1.0 / std::sqrt(m) ||
                        dd > std::sqrt(static_cast<double>(dp.n));
    const double rate = exp_floor(log_rate);
    const double log_val =
        dd * dp.log_lambda + r * dd * dp.log_tau - std::lgamma(dd + 1.0) - rate;
    out.value = exp_floor(log_val);
    return out;
}

double expected_degree_count_exact(const DerivedParams& dp, int levels,
                                   std::uint64_t m, std::uint64_t d) {
    require_even(levels);
    if (d > m) return 0.0;
    const double md = static_cast<double>(m);
    const double dd = static_cast<double>(d);
    const double log_choose_md = log_binomial(m, static_cast<std::int64_t>(d));
    LogSumExp acc;
    for (int r = -levels / 2; r <= levels / 2; ++r) {
        const double log_p = log_slice_out_probability(dp, levels, r);
        const double p = exp_floor(log_p);
        const double log_pmf = log_choose_md + dd * log_p + (md - dd) * std::log1p(-p);
        acc.add_log(log_slice_size(levels, r) + log_pmf);
    }
    return acc.value();
}

namespace {

/// Shared two-sided evaluation: sum of exp(-d*gap^2*ln^2(tau)/2 + ln C) over
/// the given (gap, slice) pairs, scaled by `scale_log`.
double grid_terms(const DerivedParams& dp, int levels, double d, double scale_log,
                  std::initializer_list<std::pair<double, std::int64_t>> terms) {
    LogSumExp acc;
    for (const auto& [gap, slice] : terms) {
        const std::int64_t k = levels / 2 + slice;
        if (k < 0 || k > levels) continue;
        const double log_c = log_binomial(static_cast<std::uint64_t>(levels), k);
        acc.add_log(-d * gap * gap * dp.log_tau * dp.log_tau / 2.0 + log_c + scale_log);
    }
    return acc.value();
}

} // namespace

FlaggedValue expected_degree_count_lemma(const DerivedParams& dp, int levels,
                                         std::uint64_t d) {
    require_even(levels);
    FlaggedValue out;
    const double dd = static_cast<double>(d);
    out.out_of_regime = dd < lower_degree_edge(levels) ||
                        dd > std::sqrt(static_cast<double>(dp.n));
    const DegreeIndex idx = degree_index(dp, d);
    if (idx.r_floor >= levels / 2) {
        out.value = 0.0; // negligible branch: theta beyond the top slice
        return out;
    }
    const double scale = -0.5 * std::log(2.0 * M_PI * dd);
    out.value = grid_terms(dp, levels, dd, scale,
                           {{idx.delta_frac, idx.r_floor},
                            {1.0 - idx.delta_frac, idx.r_floor + 1}});
    return out;
}

FlaggedValue expected_degree_count_theorem(const DerivedParams& dp, int levels,
                                           std::uint64_t d) {
    require_even(levels);
    FlaggedValue out;
    const double dd = static_cast<double>(d);
    out.out_of_regime = dd < lower_degree_edge(levels) ||
                        dd > std::sqrt(static_cast<double>(dp.n));
    const DegreeIndex idx = degree_index(dp, d);
    if (idx.nearest >= levels / 2) {
        out.value = 0.0;
        return out;
    }
    const double scale = -0.5 * std::log(dd);
    out.value = grid_terms(dp, levels, dd, scale, {{idx.nearest_gap, idx.nearest}});
    return out;
}

double isolated_expectation(const DerivedParams& dp, int levels) {
    require_symmetric(dp.matrix);
    // Summed over zero-counts z so that odd level counts work too; the slice
    // offset r = z - levels/2 is then half-integral.
    double total = 0.0;
    const double log_cutoff = std::log(700.0);
    for (int z = 0; z <= levels; ++z) {
        const double r = z - levels / 2.0;
        const double log_rate = std::log(2.0) + dp.log_lambda + r * dp.log_tau;
        if (log_rate > log_cutoff) continue; // 2 lambda tau^r > 700: exact 0
        const double rate = std::exp(log_rate);
        total += exp_floor(log_binomial(static_cast<std::uint64_t>(levels), z) - rate);
    }
    return total;
}

double isolated_expectation_exact(const DerivedParams& dp, int levels,
                                  std::uint64_t m) {
    require_symmetric(dp.matrix);
    double total = 0.0;
    const double md = static_cast<double>(m);
    for (int z = 0; z <= levels; ++z) {
        const double r = z - levels / 2.0;
        const double q = 2.0 * exp_floor(log_slice_out_probability(dp, levels, r));
        if (q >= 1.0) continue; // only possible at tiny level counts
        total += exp_floor(log_binomial(static_cast<std::uint64_t>(levels), z) +
                           md * std::log1p(-q));
    }
    return total;
}

double expected_distinct_edges(const GeneratorMatrix& matrix, int levels,
                               std::uint64_t m) {
    matrix.validate();
    const double lt1 = std::log(matrix.t1);
    const double lt2 = std::log(matrix.t2);
    const double lt3 = std::log(matrix.t3);
    const double lt4 = std::log(matrix.t4);
    const double md = static_cast<double>(m);

    std::vector<double> lf(levels + 1);
    for (int i = 0; i <= levels; ++i) lf[i] = std::lgamma(i + 1.0);

    long double total = 0.0L;
    for (int a = 0; a <= levels; ++a) {
        for (int b = 0; b <= levels - a; ++b) {
            for (int c = 0; c <= levels - a - b; ++c) {
                const int d = levels - a - b - c;
                const double log_mult = lf[levels] - lf[a] - lf[b] - lf[c] - lf[d];
                const double log_p = a * lt1 + b * lt2 + c * lt3 + d * lt4;
                // 1 - (1-p)^m through log1p/expm1: no cancellation even for
                // cell probabilities far below 1e-300 (log_p stays finite).
                const double p = exp_floor(log_p);
                double hit;
                if (p > 0.0) {
                    hit = -std::expm1(md * std::log1p(-p));
                } else {
                    hit = exp_floor(std::log(md) + log_p); // m*p with p underflowed
                }
                total += static_cast<long double>(std::exp(log_mult) * hit);
            }
        }
    }
    return static_cast<double>(total);
}

PredictionReport make_prediction_report(const GeneratorMatrix& matrix, int levels,
                                        std::uint64_t m, std::uint64_t dmin,
                                        std::uint64_t dmax) {
    SkgParams p;
    p.matrix = matrix;
    p.levels = levels;
    p.insertions = m;
    const DerivedParams dp = derive_params(p);

    PredictionReport rep;
    rep.distinct_edge_expectation = expected_distinct_edges(matrix, levels, m);
    rep.repeat_fraction = 1.0 - rep.distinct_edge_expectation / static_cast<double>(m);
    if (matrix.is_symmetric()) {
        rep.isolated_expectation = isolated_expectation(dp, levels);
        rep.isolated_fraction = rep.isolated_expectation / static_cast<double>(dp.n);
        rep.nonisolated_avg_degree =
            rep.distinct_edge_expectation /
            (static_cast<double>(dp.n) - rep.isolated_expectation);
    } else {
        rep.isolated_expectation = std::nan("");
        rep.isolated_fraction = std::nan("");
        rep.nonisolated_avg_degree = std::nan("");
    }

    for (std::uint64_t d = dmin; d <= dmax && dmin <= dmax; ++d) {
        DegreeCurvePoint pt;
        pt.d = d;
        pt.exact = expected_degree_count_exact(dp, levels, m, d);
        if (dp.tau > 1.0) {
            const FlaggedValue lem = expected_degree_count_lemma(dp, levels, d);
            const FlaggedValue thm = expected_degree_count_theorem(dp, levels, d);
            pt.lemma = lem.value;
            pt.theorem_bound = thm.value;
            pt.out_of_regime = lem.out_of_regime;
        } else {
            // uniform case: the grid estimates degenerate; report the exact
            // Poisson-like curve in all columns
            pt.lemma = pt.exact;
            pt.theorem_bound = pt.exact;
        }
        rep.degree_curves.push_back(pt);
    }
    return rep;
}

} // namespace skg
