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
#include "skg/generate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "skg/noise.hpp"
#include "skg/philox.hpp"

namespace skg {

const char* to_string(GraphForm form) {
    switch (form) {
        case GraphForm::DirectedMulti: return "directed-multi";
        case GraphForm::DirectedSimple: return "directed-simple";
        case GraphForm::Undirected: return "undirected";
    }
    return "directed-multi";
}

void ChunkPlan::validate() const {
    if (chunk_size == 0 || chunk_size > 0xFFFFFFFFull) {
        throw InvalidChunkPlan("chunk size must be in [1, 2^32)");
    }
    if (threads == 0) {
        throw InvalidChunkPlan("worker count must be >= 1");
    }
}

std::uint64_t ChunkPlan::chunk_count(std::uint64_t insertions) const {
    return (insertions + chunk_size - 1) / chunk_size;
}

namespace {

/// Fills edges [chunk*chunk_size, end) of `out`.
void run_chunk(const SkgParams& p, const ChunkPlan& plan, std::uint64_t chunk,
               std::span<const QuadrantThresholds> level_thresholds,
               std::vector<Edge>& out) {
    const std::uint32_t chunk32 = static_cast<std::uint32_t>(chunk);
    const std::uint64_t begin = chunk * plan.chunk_size;
    const std::uint64_t end = std::min(begin + plan.chunk_size, p.insertions);
    const int levels = p.levels;
    const bool per_edge = p.noise.mode == NoiseMode::PerEdge;
    const double b = p.noise.amplitude;

    for (std::uint64_t e = begin; e < end; ++e) {
        const std::uint32_t idx = static_cast<std::uint32_t>(e - begin);
        std::uint64_t src = 0;
        std::uint64_t tgt = 0;
        for (int lv = 0; lv < levels; ++lv) {
            QuadrantThresholds th = level_thresholds[lv];
            if (per_edge) {
                const double un = unit_variate(p.seed, VariateStream::EdgeNoise,
                                               chunk32, idx, lv);
                th = QuadrantThresholds::of(
                    noisy_matrix(p.matrix, (2.0 * un - 1.0) * b));
            }
            const double u =
                unit_variate(p.seed, VariateStream::Quadrant, chunk32, idx, lv);
            const int q = th.pick(u);
            src = (src << 1) | static_cast<std::uint64_t>(q >> 1);
            tgt = (tgt << 1) | static_cast<std::uint64_t>(q & 1);
        }
        out[e] = {src, tgt};
    }
}

} // namespace

EdgeList generate(const SkgParams& p, const ChunkPlan& plan) {
    p.validate();
    plan.validate();
    const std::uint64_t chunks = plan.chunk_count(p.insertions);
    if (chunks > 0xFFFFFFFFull) {
        throw InvalidChunkPlan("chunk count does not fit the address space");
    }

    // Level matrices are fixed for the whole graph except in per-edge mode.
    std::vector<GeneratorMatrix> level_mats;
    if (p.noise.mode == NoiseMode::PerLevel) {
        level_mats = noisy_matrices(p.matrix, p.levels, p.noise.amplitude, p.seed);
    } else {
        level_mats.assign(p.levels, p.matrix);
    }
    std::vector<QuadrantThresholds> thresholds;
    thresholds.reserve(level_mats.size());
    for (const auto& m : level_mats) thresholds.push_back(QuadrantThresholds::of(m));

    EdgeList list;
    list.edges.resize(p.insertions);
    list.meta = {p.levels, p.insertions, p.seed,     p.noise,
                 plan.chunk_size, GraphForm::DirectedMulti};

    if (plan.threads <= 1 || chunks <= 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) {
            run_chunk(p, plan, c, thresholds, list.edges);
        }
        return list;
    }

    std::atomic<std::uint64_t> next_chunk{0};
    auto worker = [&] {
        for (;;) {
            const std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= chunks) return;
            run_chunk(p, plan, c, thresholds, list.edges);
        }
    };
    std::vector<std::thread> pool;
    const unsigned nthreads = static_cast<unsigned>(
        std::min<std::uint64_t>(plan.threads, chunks));
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return list;
}

EdgeList deduplicate(const EdgeList& list) {
    EdgeList out;
    out.meta = list.meta;
    out.edges = list.edges;
    std::sort(out.edges.begin(), out.edges.end());
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()),
                    out.edges.end());
    if (out.meta.form == GraphForm::DirectedMulti) {
        out.meta.form = GraphForm::DirectedSimple;
    }
    return out;
}

EdgeList undirect(const EdgeList& list) {
    EdgeList out;
    out.meta = list.meta;
    out.meta.form = GraphForm::Undirected;
    out.edges.reserve(list.edges.size());
    for (const Edge& e : list.edges) {
        if (e.src == e.tgt) continue;
        out.edges.push_back({std::min(e.src, e.tgt), std::max(e.src, e.tgt)});
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()),
                    out.edges.end());
    return out;
}

EdgeList symmetrize_upper(const EdgeList& list) {
    EdgeList out;
    out.meta = list.meta;
    out.meta.form = GraphForm::Undirected;
    out.edges.reserve(list.edges.size() / 2);
    for (const Edge& e : list.edges) {
        if (e.src < e.tgt) out.edges.push_back(e);
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()),
                    out.edges.end());
    return out;
}

} // namespace skg
