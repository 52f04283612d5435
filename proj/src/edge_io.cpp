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
#include "skg/edge_io.hpp"

#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>

namespace skg {

void write_edges_tsv(std::ostream& out, std::span<const Edge> edges) {
    char buf[48];
    for (const Edge& e : edges) {
        const int len = std::snprintf(buf, sizeof(buf), "%llu\t%llu\n",
                                      static_cast<unsigned long long>(e.src),
                                      static_cast<unsigned long long>(e.tgt));
        out.write(buf, len);
    }
}

void write_edges_binary(std::ostream& out, std::span<const Edge> edges) {
    out.write(kBinaryMagic, sizeof(kBinaryMagic));
    for (const Edge& e : edges) {
        unsigned char rec[16];
        for (int i = 0; i < 8; ++i) {
            rec[i] = static_cast<unsigned char>(e.src >> (8 * i));
            rec[8 + i] = static_cast<unsigned char>(e.tgt >> (8 * i));
        }
        out.write(reinterpret_cast<const char*>(rec), sizeof(rec));
    }
}

void write_edge_file(const std::string& path, std::span<const Edge> edges,
                     EdgeFileFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UnwritablePath("cannot open '" + path + "' for writing");
    if (format == EdgeFileFormat::Tsv) {
        write_edges_tsv(out, edges);
    } else {
        write_edges_binary(out, edges);
    }
    out.flush();
    if (!out) throw UnwritablePath("write to '" + path + "' failed");
}

namespace {

std::vector<Edge> parse_tsv(std::istream& in, const std::string& path) {
    std::vector<Edge> edges;
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const char* first = line.data();
        const char* last = line.data() + line.size();
        Edge e;
        auto r1 = std::from_chars(first, last, e.src);
        if (r1.ec != std::errc{} || r1.ptr == last || *r1.ptr != '\t') {
            throw MalformedFile(path + ":" + std::to_string(lineno) +
                                ": expected 'src<TAB>tgt'");
        }
        auto r2 = std::from_chars(r1.ptr + 1, last, e.tgt);
        if (r2.ec != std::errc{} || r2.ptr != last) {
            throw MalformedFile(path + ":" + std::to_string(lineno) +
                                ": expected 'src<TAB>tgt'");
        }
        edges.push_back(e);
    }
    return edges;
}

std::vector<Edge> parse_binary(std::istream& in, const std::string& path) {
    std::vector<Edge> edges;
    char rec[16];
    for (;;) {
        in.read(rec, sizeof(rec));
        const std::streamsize got = in.gcount();
        if (got == 0) break;
        if (got != sizeof(rec)) {
            throw MalformedFile(path + ": truncated binary record");
        }
        Edge e{0, 0};
        for (int i = 0; i < 8; ++i) {
            e.src |= static_cast<std::uint64_t>(static_cast<unsigned char>(rec[i])) << (8 * i);
            e.tgt |= static_cast<std::uint64_t>(static_cast<unsigned char>(rec[8 + i])) << (8 * i);
        }
        edges.push_back(e);
    }
    return edges;
}

} // namespace

std::vector<Edge> read_edge_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedFile("cannot open '" + path + "'");
    char magic[4];
    in.read(magic, sizeof(magic));
    if (in.gcount() == 4 && std::memcmp(magic, kBinaryMagic, 4) == 0) {
        return parse_binary(in, path);
    }
    in.clear();
    in.seekg(0);
    return parse_tsv(in, path);
}

Sidecar Sidecar::for_edge_list(const EdgeListMeta& meta, const GeneratorMatrix& t,
                               EdgeFileFormat format) {
    auto num = [](double x) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", x);
        return std::string(buf);
    };
    Sidecar sc;
    sc.entries["tool"] = "skg";
    sc.entries["version"] = kToolVersion;
    sc.entries["format"] = format == EdgeFileFormat::Tsv ? "tsv" : "bin";
    sc.entries["t1"] = num(t.t1);
    sc.entries["t2"] = num(t.t2);
    sc.entries["t3"] = num(t.t3);
    sc.entries["t4"] = num(t.t4);
    sc.entries["levels"] = std::to_string(meta.levels);
    sc.entries["nodes"] = std::to_string(meta.vertex_count());
    sc.entries["insertions"] = std::to_string(meta.insertions);
    sc.entries["seed"] = std::to_string(meta.seed);
    sc.entries["noise_mode"] = to_string(meta.noise.mode);
    sc.entries["noise_b"] = num(meta.noise.amplitude);
    sc.entries["chunk_size"] = std::to_string(meta.chunk_size);
    sc.entries["graph_form"] = to_string(meta.form);
    return sc;
}

const std::string& Sidecar::at(const std::string& key) const {
    auto it = entries.find(key);
    if (it == entries.end()) {
        throw MalformedFile("sidecar missing key '" + key + "'");
    }
    return it->second;
}

std::optional<std::string> Sidecar::get(const std::string& key) const {
    auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    return it->second;
}

SkgParams Sidecar::params() const {
    SkgParams p;
    p.matrix = {std::stod(at("t1")), std::stod(at("t2")), std::stod(at("t3")),
                std::stod(at("t4"))};
    p.levels = std::stoi(at("levels"));
    p.insertions = std::stoull(at("insertions"));
    p.seed = std::stoull(at("seed"));
    p.noise.mode = noise_mode_from_string(at("noise_mode"));
    p.noise.amplitude = std::stod(at("noise_b"));
    return p;
}

std::uint64_t Sidecar::chunk_size() const { return std::stoull(at("chunk_size")); }

bool Sidecar::simple() const {
    return get("graph_form").value_or("directed-multi") != "directed-multi";
}

std::string sidecar_path(const std::string& edge_path) { return edge_path + ".meta"; }

void write_sidecar(const std::string& path, const Sidecar& sc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UnwritablePath("cannot open '" + path + "' for writing");
    for (const auto& [k, v] : sc.entries) {
        out << k << '=' << v << '\n';
    }
    out.flush();
    if (!out) throw UnwritablePath("write to '" + path + "' failed");
}

Sidecar read_sidecar(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedFile("cannot open sidecar '" + path + "'");
    Sidecar sc;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw MalformedFile(path + ": sidecar lines must be key=value");
        }
        sc.entries[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return sc;
}

} // namespace skg
