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

#include <string>
#include <vector>

#include "skg/params.hpp"

namespace skg {

/// Named parameter sets used throughout the benchmark literature.
struct Preset {
    std::string name;
    GeneratorMatrix matrix;
    int default_levels = 0;
    /// If > 0, the insertion count scales as `scaled_delta * 2^levels`;
    /// otherwise `fixed_insertions` applies regardless of the level count.
    std::uint64_t scaled_delta = 0;
    std::uint64_t fixed_insertions = 0;

    std::uint64_t insertions_for(int levels) const {
        return scaled_delta > 0 ? scaled_delta << levels : fixed_insertions;
    }
};

/// graph500, cahepph, webnotredame. Throws UnknownPreset otherwise.
const Preset& preset(const std::string& name);

const std::vector<Preset>& all_presets();

} // namespace skg
