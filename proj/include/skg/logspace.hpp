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

#include <cmath>
#include <cstdint>
#include <limits>

#include "skg/error.hpp"

namespace skg {

/// exp() with a hard underflow floor: arguments below -700 return exactly 0.
/// Everything downstream (slice sums, isolated-vertex terms) relies on this
/// so that doubly-exponentially small terms vanish instead of denormalizing.
inline double exp_floor(double x) {
    return x < -700.0 ? 0.0 : std::exp(x);
}

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// ln C(n, k) via log-gamma; -inf when k is outside [0, n].
inline double log_binomial(std::uint64_t n, std::int64_t k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return kNegInf;
    return std::lgamma(static_cast<double>(n) + 1.0) -
           std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

/// Exact C(n, k) in 64 bits. Valid through n = 66; larger n must use
/// log_binomial.
inline std::uint64_t binomial_u64(unsigned n, unsigned k) {
    if (n > 66) throw LevelsOutOfRange("exact binomial limited to n <= 66, got n=" + std::to_string(n));
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 c = 1;
    for (unsigned i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
    }
    return static_cast<std::uint64_t>(c);
}

/// Streaming log-sum-exp accumulator: add terms as logs, read the sum in
/// linear or log space without overflow on intermediate maxima.
class LogSumExp {
public:
    void add_log(double log_term) {
        if (log_term == kNegInf) return;
        if (log_term > max_) {
            sum_ = sum_ * exp_floor(max_ - log_term) + 1.0;
            max_ = log_term;
        } else {
            sum_ += exp_floor(log_term - max_);
        }
    }

    double log_value() const {
        if (sum_ == 0.0) return kNegInf;
        return max_ + std::log(sum_);
    }

    double value() const { return sum_ == 0.0 ? 0.0 : exp_floor(log_value()); }

private:
    double max_ = kNegInf;
    double sum_ = 0.0;
};

} // namespace skg
