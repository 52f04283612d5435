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
#include "skg/analyze.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "skg/error.hpp"

namespace skg {

const char* to_string(Orientation o) {
    switch (o) {
        case Orientation::Out: return "out";
        case Orientation::In: return "in";
        case Orientation::Undirected: return "undirected";
    }
    return "out";
}

Orientation orientation_from_string(const std::string& s) {
    if (s == "out") return Orientation::Out;
    if (s == "in") return Orientation::In;
    if (s == "undirected") return Orientation::Undirected;
    throw Error("InvalidOrientation", "unknown orientation '" + s + "'");
}

namespace {

// Analysis holds per-vertex state; cap the vertex count at desk scale.
constexpr std::uint64_t kMaxAnalysisVertices = std::uint64_t{1} << 28;

void check_range(std::span<const Edge> edges, std::uint64_t n) {
    if (n > kMaxAnalysisVertices) {
        throw Error("AnalysisTooLarge", "vertex count " + std::to_string(n) +
                                            " exceeds the in-memory analysis cap");
    }
    for (const Edge& e : edges) {
        if (e.src >= n || e.tgt >= n) {
            throw VertexOutOfRange("edge (" + std::to_string(e.src) + ", " +
                                   std::to_string(e.tgt) + ") exceeds n = " +
                                   std::to_string(n));
        }
    }
}

} // namespace

DegreeHistogram degree_histogram(std::span<const Edge> edges, std::uint64_t n,
                                 Orientation orientation) {
    check_range(edges, n);
    std::vector<std::uint32_t> deg(n, 0);
    for (const Edge& e : edges) {
        switch (orientation) {
            case Orientation::Out: ++deg[e.src]; break;
            case Orientation::In: ++deg[e.tgt]; break;
            case Orientation::Undirected:
                ++deg[e.src];
                ++deg[e.tgt];
                break;
        }
    }
    DegreeHistogram h;
    h.orientation = orientation;
    h.n = n;
    for (std::uint64_t v = 0; v < n; ++v) ++h.counts[deg[v]];
    return h;
}

std::map<std::uint64_t, double> mean_histogram(std::span<const DegreeHistogram> hists) {
    std::map<std::uint64_t, double> mean;
    if (hists.empty()) return mean;
    for (const DegreeHistogram& h : hists) {
        for (const auto& [d, c] : h.counts) mean[d] += static_cast<double>(c);
    }
    for (auto& [d, c] : mean) c /= static_cast<double>(hists.size());
    return mean;
}

std::uint64_t isolated_count(std::span<const Edge> edges, std::uint64_t n) {
    check_range(edges, n);
    std::vector<bool> touched(n, false);
    for (const Edge& e : edges) {
        touched[e.src] = true;
        touched[e.tgt] = true;
    }
    std::uint64_t isolated = 0;
    for (std::uint64_t v = 0; v < n; ++v) {
        if (!touched[v]) ++isolated;
    }
    return isolated;
}

namespace {

struct Csr {
    std::vector<std::uint64_t> offset;
    std::vector<std::uint32_t> adj;
};

/// reverse=false: adjacency by source; reverse=true: by target.
Csr build_csr(std::span<const Edge> edges, std::uint64_t n, bool reverse) {
    Csr csr;
    csr.offset.assign(n + 1, 0);
    for (const Edge& e : edges) ++csr.offset[(reverse ? e.tgt : e.src) + 1];
    for (std::uint64_t v = 0; v < n; ++v) csr.offset[v + 1] += csr.offset[v];
    csr.adj.resize(edges.size());
    std::vector<std::uint64_t> cursor(csr.offset.begin(), csr.offset.end() - 1);
    for (const Edge& e : edges) {
        const std::uint64_t from = reverse ? e.tgt : e.src;
        const std::uint64_t to = reverse ? e.src : e.tgt;
        csr.adj[cursor[from]++] = static_cast<std::uint32_t>(to);
    }
    return csr;
}

/// Min-removal peeling over (current degree, id) with lazy heap entries.
/// `neighbours(v)` enumerates the vertices whose tracked degree drops when v
/// leaves the graph.
template <typename NeighbourFn>
CoreProfile peel(std::uint64_t n, std::vector<std::uint32_t> deg, CoreKind kind,
                 NeighbourFn&& neighbours) {
    using Entry = std::pair<std::uint32_t, std::uint32_t>; // (degree, vertex)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (std::uint64_t v = 0; v < n; ++v) {
        heap.emplace(deg[v], static_cast<std::uint32_t>(v));
    }

    CoreProfile profile;
    profile.kind = kind;
    profile.core_number.assign(n, 0);
    std::vector<bool> removed(n, false);
    std::uint32_t k = 0;
    while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (removed[v] || d != deg[v]) continue; // stale entry
        removed[v] = true;
        k = std::max(k, d);
        profile.core_number[v] = k;
        neighbours(v, [&](std::uint32_t u) {
            if (!removed[u]) {
                heap.emplace(--deg[u], u);
            }
        });
    }
    profile.max_core = k;

    std::vector<std::uint64_t> at_core(k + 1, 0);
    for (std::uint64_t v = 0; v < n; ++v) ++at_core[profile.core_number[v]];
    std::uint64_t running = 0;
    for (std::uint32_t c = k + 1; c-- > 0;) {
        running += at_core[c];
        profile.sizes[c] = running;
    }
    return profile;
}

} // namespace

CoreProfile core_decomposition(std::span<const Edge> edges, std::uint64_t n,
                               CoreKind kind) {
    check_range(edges, n);
    if (kind == CoreKind::Undirected) {
        for (const Edge& e : edges) {
            if (e.src == e.tgt) {
                throw SelfLoopPresent("undirected cores need self-loop-free input");
            }
        }
        // Adjacency in both directions from the (src < tgt) pair list.
        std::vector<Edge> both(edges.begin(), edges.end());
        both.reserve(edges.size() * 2);
        for (const Edge& e : edges) both.push_back({e.tgt, e.src});
        Csr csr = build_csr(both, n, false);
        std::vector<std::uint32_t> deg(n, 0);
        for (std::uint64_t v = 0; v < n; ++v) {
            deg[v] = static_cast<std::uint32_t>(csr.offset[v + 1] - csr.offset[v]);
        }
        return peel(n, std::move(deg), kind, [&](std::uint32_t v, auto&& visit) {
            for (std::uint64_t i = csr.offset[v]; i < csr.offset[v + 1]; ++i) {
                visit(csr.adj[i]);
            }
        });
    }

    // Out-core: peel by out-degree; removing v erases its in-edges, which
    // lowers the out-degree of their sources.
    Csr in_adj = build_csr(edges, n, true);
    std::vector<std::uint32_t> outdeg(n, 0);
    for (const Edge& e : edges) ++outdeg[e.src];
    return peel(n, std::move(outdeg), kind, [&](std::uint32_t v, auto&& visit) {
        for (std::uint64_t i = in_adj.offset[v]; i < in_adj.offset[v + 1]; ++i) {
            if (in_adj.adj[i] != v) visit(in_adj.adj[i]);
        }
    });
}

int oscillation_score(const std::map<std::uint64_t, double>& counts, int levels) {
    const double lo = 2.0 * levels;
    const double hi = std::sqrt(std::pow(2.0, levels));
    std::vector<double> c;
    for (const auto& [d, cnt] : counts) {
        const double dd = static_cast<double>(d);
        if (cnt > 0.0 && dd >= lo && dd <= hi) c.push_back(cnt);
    }
    const std::size_t n = c.size();
    if (n < 3) return 0;
    // Running maxima from each side; an entry dipping a factor 2 below both
    // is inside a trough. Monotone tails never score.
    std::vector<double> left(n, 0.0), right(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) left[i] = std::max(left[i - 1], c[i - 1]);
    for (std::size_t i = n - 1; i-- > 0;) right[i] = std::max(right[i + 1], c[i + 1]);
    int dips = 0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (left[i] >= 2.0 * c[i] && right[i] >= 2.0 * c[i]) ++dips;
    }
    return dips;
}

int oscillation_score(const DegreeHistogram& hist, int levels) {
    std::map<std::uint64_t, double> counts;
    for (const auto& [d, c] : hist.counts) counts[d] = static_cast<double>(c);
    return oscillation_score(counts, levels);
}

} // namespace skg
