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

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "skg/generate.hpp"

namespace skg {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr char kBinaryMagic[4] = {'S', 'K', 'G', '1'};

enum class EdgeFileFormat { Tsv, Binary };

/// TSV: one "src<TAB>tgt\n" line per edge, decimal, 0-indexed.
void write_edges_tsv(std::ostream& out, std::span<const Edge> edges);
/// Binary: magic "SKG1", then little-endian u64 pairs.
void write_edges_binary(std::ostream& out, std::span<const Edge> edges);

void write_edge_file(const std::string& path, std::span<const Edge> edges,
                     EdgeFileFormat format);

/// Reads either format (sniffed from the magic). Lines starting with '#' are
/// ignored in TSV input. Throws MalformedFile on anything else unparsable.
std::vector<Edge> read_edge_file(const std::string& path);

/// Flat key=value metadata written next to an edge file; carries everything
/// needed to regenerate it bit for bit.
struct Sidecar {
    std::map<std::string, std::string> entries;

    static Sidecar for_edge_list(const EdgeListMeta& meta, const GeneratorMatrix& t,
                                 EdgeFileFormat format);

    const std::string& at(const std::string& key) const;
    std::optional<std::string> get(const std::string& key) const;

    /// Reconstructs generation parameters (matrix, levels, insertions, seed,
    /// noise) from the recorded keys.
    SkgParams params() const;
    std::uint64_t chunk_size() const;
    bool simple() const;
};

std::string sidecar_path(const std::string& edge_path);
void write_sidecar(const std::string& path, const Sidecar& sc);
Sidecar read_sidecar(const std::string& path);

} // namespace skg
