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

struct Edge {
    std::uint64_t src = 0;
    std::uint64_t tgt = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class GraphForm { DirectedMulti, DirectedSimple, Undirected };

const char* to_string(GraphForm form);

struct EdgeListMeta {
    int levels = 0;
    std::uint64_t insertions = 0;
    std::uint64_t seed = 0;
    NoiseSpec noise;
    std::uint64_t chunk_size = 0;
    GraphForm form = GraphForm::DirectedMulti;

    std::uint64_t vertex_count() const { return std::uint64_t{1} << levels; }
};

struct EdgeList {
    std::vector<Edge> edges;
    EdgeListMeta meta;
};

/// Work split for parallel generation. The chunk size is part of the
/// reproducibility contract: each variate is addressed by
/// (seed, chunk, in-chunk index, level), so the same (params, chunk_size)
/// yield the same edges for any thread count.
struct ChunkPlan {
    std::uint64_t chunk_size = 1u << 16;
    unsigned threads = 1;

    void validate() const;
    std::uint64_t chunk_count(std::uint64_t insertions) const;
};

/// Cumulative quadrant thresholds of a matrix; both the hot loop and
/// insert_edge() select through this so the arithmetic is identical.
struct QuadrantThresholds {
    double c1, c2, c3;

    static QuadrantThresholds of(const GeneratorMatrix& t) {
        return {t.t1, t.t1 + t.t2, t.t1 + t.t2 + t.t3};
    }

    /// Quadrant index 0..3 for a uniform variate in [0,1).
    int pick(double u) const { return u < c1 ? 0 : u < c2 ? 1 : u < c3 ? 2 : 3; }
};

/// One recursive insertion: per level draw a variate, pick a quadrant, and
/// shift the quadrant's (row, column) bit into (src, tgt); level 0 lands in
/// the most significant bit. `variate(level)` must return doubles in [0,1).
template <typename VariateFn>
Edge insert_edge(std::span<const GeneratorMatrix> level_matrices, VariateFn&& variate) {
    Edge e;
    for (std::size_t lv = 0; lv < level_matrices.size(); ++lv) {
        const int q = QuadrantThresholds::of(level_matrices[lv]).pick(variate(lv));
        e.src = (e.src << 1) | static_cast<std::uint64_t>(q >> 1);
        e.tgt = (e.tgt << 1) | static_cast<std::uint64_t>(q & 1);
    }
    return e;
}

/// Generates the multigraph: exactly p.insertions edges. Per-level noise
/// draws the level matrices once per graph from the seed's noise stream;
/// per-edge noise redraws the perturbation at every level of every insertion.
EdgeList generate(const SkgParams& p, const ChunkPlan& plan);

/// Collapses duplicate (src, tgt) pairs; self-loops are kept. Output is
/// sorted by (src, tgt), the canonical order.
EdgeList deduplicate(const EdgeList& list);

/// Directed -> undirected by dropping edge direction: (u,v) and (v,u) merge,
/// self-loops are dropped. Undirected edges are stored as pairs with
/// src < tgt, sorted.
EdgeList undirect(const EdgeList& list);

/// Directed -> undirected by keeping the upper triangle only: pairs with
/// u < v survive (mirroring is implicit in the undirected form), everything
/// else including self-loops is dropped.
EdgeList symmetrize_upper(const EdgeList& list);

} // namespace skg
