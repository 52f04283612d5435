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
#include <map>
#include <span>
#include <vector>

#include "skg/generate.hpp"

namespace skg {

enum class Orientation { Out, In, Undirected };

const char* to_string(Orientation o);
Orientation orientation_from_string(const std::string& s);

/// degree -> number of vertices, with degree 0 included so the counts always
/// sum to n. Undirected orientation counts both endpoints (a self-loop adds
/// 2, the usual multigraph convention).
struct DegreeHistogram {
    Orientation orientation = Orientation::Out;
    std::uint64_t n = 0;
    std::map<std::uint64_t, std::uint64_t> counts;

    std::uint64_t count(std::uint64_t d) const {
        auto it = counts.find(d);
        return it == counts.end() ? 0 : it->second;
    }
};

DegreeHistogram degree_histogram(std::span<const Edge> edges, std::uint64_t n,
                                 Orientation orientation);

/// Entrywise mean of per-instance histograms (all over the same n and
/// orientation).
std::map<std::uint64_t, double> mean_histogram(std::span<const DegreeHistogram> hists);

/// Vertices of [0, n) that appear in no edge, in either role. A self-loop
/// makes its vertex non-isolated.
std::uint64_t isolated_count(std::span<const Edge> edges, std::uint64_t n);

enum class CoreKind { Undirected, OutCore };

/// Peeling result: per-vertex core numbers, the size of each k-core, and the
/// largest k with a nonempty core. sizes[k] counts vertices with core number
/// >= k, which is exactly the k-core's vertex set.
struct CoreProfile {
    CoreKind kind = CoreKind::Undirected;
    std::vector<std::uint32_t> core_number;
    std::map<std::uint32_t, std::uint64_t> sizes;
    std::uint32_t max_core = 0;
};

/// Repeatedly removes a minimum-degree vertex (ties by vertex id). Undirected
/// kind expects simple undirected input as (src < tgt) pairs and rejects
/// self-loops; OutCore peels by current out-degree on a directed graph, where
/// removing a vertex also removes its in-edges (lowering the sources'
/// out-degrees).
CoreProfile core_decomposition(std::span<const Edge> edges, std::uint64_t n,
                               CoreKind kind);

/// Counts deep dips of a degree histogram inside the window
/// [2*levels, sqrt(2^levels)]: positive-count degrees lying at least a factor
/// 2 below some larger count on each side of them within the window. Smooth
/// or monotone tails score 0; the quadrant model's characteristic troughs
/// contribute one dip per degree trapped in them.
int oscillation_score(const std::map<std::uint64_t, double>& counts, int levels);
int oscillation_score(const DegreeHistogram& hist, int levels);

} // namespace skg
