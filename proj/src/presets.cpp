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
#include "skg/presets.hpp"

namespace skg {

const std::vector<Preset>& all_presets() {
    static const std::vector<Preset> presets = {
        // Graph500 benchmark setting: 16 insertions per vertex at any scale.
        {"graph500", {0.57, 0.19, 0.19, 0.05}, 26, 16, 0},
        // Co-authorship network fit.
        {"cahepph", {0.42, 0.19, 0.19, 0.20}, 14, 0, 237010},
        // Web graph fit (level count rounded up to even).
        {"webnotredame", {0.48, 0.20, 0.21, 0.11}, 18, 0, 1497134},
    };
    return presets;
}

const Preset& preset(const std::string& name) {
    for (const Preset& p : all_presets()) {
        if (p.name == name) return p;
    }
    throw UnknownPreset("no preset named '" + name +
                        "' (known: graph500, cahepph, webnotredame)");
}

} // namespace skg
