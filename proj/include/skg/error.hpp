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

#include <stdexcept>
#include <string>
#include <utility>

namespace skg {

/// Base for all library errors. `token()` is a stable machine-parseable
/// identifier; `what()` is `<token>: <detail>`.
class Error : public std::runtime_error {
public:
    Error(std::string token, const std::string& detail)
        : std::runtime_error(token + ": " + detail), token_(std::move(token)) {}

    const std::string& token() const noexcept { return token_; }

private:
    std::string token_;
};

#define SKG_DEFINE_ERROR(Name)                                            \
    struct Name : Error {                                                 \
        explicit Name(const std::string& detail) : Error(#Name, detail) {} \
    }

SKG_DEFINE_ERROR(InvalidMatrix);
SKG_DEFINE_ERROR(InvalidNoiseSpec);
SKG_DEFINE_ERROR(SigmaOutOfRange);
SKG_DEFINE_ERROR(OddLevels);
SKG_DEFINE_ERROR(LevelsOutOfRange);
SKG_DEFINE_ERROR(SliceOutOfRange);
SKG_DEFINE_ERROR(AsymmetricMatrix);
SKG_DEFINE_ERROR(TauIsOne);
SKG_DEFINE_ERROR(NoiseTooLarge);
SKG_DEFINE_ERROR(VertexOutOfRange);
SKG_DEFINE_ERROR(SelfLoopPresent);
SKG_DEFINE_ERROR(MalformedFile);
SKG_DEFINE_ERROR(UnwritablePath);
SKG_DEFINE_ERROR(UnknownPreset);
SKG_DEFINE_ERROR(InvalidChunkPlan);

#undef SKG_DEFINE_ERROR

} // namespace skg
