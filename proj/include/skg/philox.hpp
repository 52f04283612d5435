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

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011). Every
// variate is addressed by (seed, stream, chunk, index, level), so generation
// is reproducible for any worker count and any scheduling order.

#include <array>
#include <cstdint>

namespace skg {

struct Philox4x32 {
    static constexpr std::uint32_t kM0 = 0xD2511F53u;
    static constexpr std::uint32_t kM1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kW0 = 0x9E3779B9u;
    static constexpr std::uint32_t kW1 = 0xBB67AE85u;

    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                              std::array<std::uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * ctr[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                   static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                   static_cast<std::uint32_t>(p0)};
            key[0] += kW0;
            key[1] += kW1;
        }
        return ctr;
    }
};

/// Independent variate streams. Keeping the per-graph noise stream separate
/// from the quadrant stream means switching noise off never shifts the edge
/// stream.
enum class VariateStream : std::uint32_t {
    Quadrant = 0,
    LevelNoise = 1,
    EdgeNoise = 2,
};

inline std::uint64_t variate_bits(std::uint64_t seed, VariateStream stream,
                                  std::uint32_t chunk, std::uint32_t index,
                                  std::uint32_t level) {
    const auto out = Philox4x32::block(
        {index, chunk, level, static_cast<std::uint32_t>(stream)},
        {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)});
    return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

/// Uniform double in [0, 1) with 53 random bits.
inline double unit_variate(std::uint64_t seed, VariateStream stream,
                           std::uint32_t chunk, std::uint32_t index,
                           std::uint32_t level) {
    return static_cast<double>(variate_bits(seed, stream, chunk, index, level) >> 11) *
           0x1.0p-53;
}

} // namespace skg
