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

// Command-line laboratory for recursive-quadrant (R-MAT/Kronecker) graphs:
//   generate   deterministic parallel edge generation, optional noise
//   predict    closed-form expectations (degree curves, isolated, repeats)
//   analyze    measurements on an edge file (histograms, cores, dips)
//   compare    generated instances vs the predicted degree curves

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "skg/analyze.hpp"
#include "skg/edge_io.hpp"
#include "skg/generate.hpp"
#include "skg/noise.hpp"
#include "skg/presets.hpp"
#include "skg/theory.hpp"

namespace {

using namespace skg;

struct ModelArgs {
    std::string preset_name;
    std::vector<double> matrix_entries;
    int levels = -1;
    std::uint64_t edges = 0;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--preset", preset_name, "parameter preset: graph500, cahepph, webnotredame");
        cmd.add_option("--matrix", matrix_entries, "matrix entries t1,t2,t3,t4")
            ->delimiter(',')
            ->expected(4);
        cmd.add_option("--levels", levels, "recursion levels (n = 2^levels)");
        cmd.add_option("--edges", edges, "number of edge insertions");
    }

    struct Resolved {
        GeneratorMatrix matrix;
        int levels;
        std::uint64_t insertions;
    };

    Resolved resolve() const {
        Resolved r;
        if (!preset_name.empty() && !matrix_entries.empty()) {
            throw Error("InvalidArguments", "--preset and --matrix are exclusive");
        }
        if (!preset_name.empty()) {
            const Preset& p = preset(preset_name);
            r.matrix = p.matrix;
            r.levels = levels > 0 ? levels : p.default_levels;
            r.insertions = edges > 0 ? edges : p.insertions_for(r.levels);
        } else {
            if (matrix_entries.size() != 4) {
                throw Error("InvalidArguments", "--preset or --matrix required");
            }
            r.matrix = {matrix_entries[0], matrix_entries[1], matrix_entries[2],
                        matrix_entries[3]};
            if (levels <= 0) throw Error("InvalidArguments", "--levels required");
            if (edges == 0) throw Error("InvalidArguments", "--edges required");
            r.levels = levels;
            r.insertions = edges;
        }
        r.matrix.validate();
        return r;
    }
};

/// Report sink: path or "-" for stdout.
class Out {
public:
    explicit Out(const std::string& path) {
        if (path != "-") {
            file_.open(path, std::ios::binary);
            if (!file_) throw UnwritablePath("cannot open '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

SkgParams make_params(const ModelArgs::Resolved& r, std::uint64_t seed, double b,
                      const std::string& mode_name) {
    SkgParams p;
    p.matrix = r.matrix;
    p.levels = r.levels;
    p.insertions = r.insertions;
    p.seed = seed;
    if (!mode_name.empty()) {
        p.noise.mode = noise_mode_from_string(mode_name);
    } else {
        p.noise.mode = b > 0.0 ? NoiseMode::PerLevel : NoiseMode::None;
    }
    p.noise.amplitude = b;
    return p;
}

int cmd_generate(const ModelArgs& margs, std::uint64_t seed, double noise_b,
                 const std::string& noise_mode, bool simple,
                 const std::string& format_name, const std::string& out_path,
                 unsigned threads, std::uint64_t chunk_size) {
    const auto r = margs.resolve();
    const SkgParams p = make_params(r, seed, noise_b, noise_mode);
    ChunkPlan plan{chunk_size, threads};

    EdgeList list = generate(p, plan);
    if (simple) list = deduplicate(list);

    const EdgeFileFormat format =
        format_name == "bin" ? EdgeFileFormat::Binary : EdgeFileFormat::Tsv;
    write_edge_file(out_path, list.edges, format);
    write_sidecar(sidecar_path(out_path),
                  Sidecar::for_edge_list(list.meta, p.matrix, format));
    std::cerr << "wrote " << list.edges.size() << " edges to " << out_path << "\n";
    return 0;
}

int cmd_predict(const ModelArgs& margs, const std::string& report,
                const std::string& method, std::uint64_t dmin, std::uint64_t dmax,
                const std::string& out_path) {
    const auto r = margs.resolve();
    SkgParams p;
    p.matrix = r.matrix;
    p.levels = r.levels;
    p.insertions = r.insertions;
    const DerivedParams dp = derive_params(p);
    Out out(out_path);
    std::ostream& os = out.stream();

    if (report == "degree-dist") {
        if (dmax == 0) dmax = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(dp.n)));
        if (!dp.theory_admissible) {
            std::cerr << "warning: matrix outside the trusted regime for degree "
                         "estimates (t1 must dominate, with t1+t2 and t1+t3 > 1/2)\n";
        }
        os << "#d\texpected_count\tout_of_regime\n";
        for (std::uint64_t d = dmin; d <= dmax; ++d) {
            FlaggedValue v;
            if (method == "exact") {
                v.value = expected_degree_count_exact(dp, r.levels, r.insertions, d);
            } else if (method == "lemma") {
                v = expected_degree_count_lemma(dp, r.levels, d);
            } else {
                v = expected_degree_count_theorem(dp, r.levels, d);
            }
            os << d << '\t' << num(v.value) << '\t' << (v.out_of_regime ? 1 : 0) << '\n';
        }
        return 0;
    }
    if (report == "isolated") {
        const double iso = isolated_expectation(dp, r.levels);
        const double dist = expected_distinct_edges(r.matrix, r.levels, r.insertions);
        os << "#n\tisolated_expectation\tisolated_fraction\tavg_nonisolated_degree\n";
        os << dp.n << '\t' << num(iso) << '\t'
           << num(iso / static_cast<double>(dp.n)) << '\t'
           << num(dist / (static_cast<double>(dp.n) - iso)) << '\n';
        return 0;
    }
    if (report == "repeats") {
        const double dist = expected_distinct_edges(r.matrix, r.levels, r.insertions);
        os << "#insertions\tdistinct_expectation\trepeat_fraction\n";
        os << r.insertions << '\t' << num(dist) << '\t'
           << num(1.0 - dist / static_cast<double>(r.insertions)) << '\n';
        return 0;
    }
    // summary
    const PredictionReport rep =
        make_prediction_report(r.matrix, r.levels, r.insertions, 1, 0);
    os << "#n\tdelta\tsigma\ttau\tlambda\tisolated_expectation\tisolated_fraction"
          "\tdistinct_expectation\trepeat_fraction\tavg_nonisolated_degree\n";
    os << dp.n << '\t' << num(dp.delta) << '\t' << num(dp.sigma) << '\t'
       << num(dp.tau) << '\t' << num(dp.lambda) << '\t'
       << num(rep.isolated_expectation) << '\t' << num(rep.isolated_fraction) << '\t'
       << num(rep.distinct_edge_expectation) << '\t' << num(rep.repeat_fraction)
       << '\t' << num(rep.nonisolated_avg_degree) << '\n';
    return 0;
}

int cmd_analyze(const std::string& file, std::uint64_t nodes, int levels,
                const std::string& report, const std::string& orientation_name,
                const std::string& core_kind, bool multigraph,
                const std::string& out_path) {
    EdgeList list;
    list.edges = read_edge_file(file);
    list.meta.form = GraphForm::DirectedMulti;

    // Vertex count and level count come from the sidecar unless given.
    if (nodes == 0 || levels <= 0) {
        const std::string meta = sidecar_path(file);
        if (std::filesystem::exists(meta)) {
            const Sidecar sc = read_sidecar(meta);
            if (levels <= 0) levels = std::stoi(sc.at("levels"));
            if (nodes == 0) nodes = std::stoull(sc.at("nodes"));
        }
    }
    if (nodes == 0) {
        throw Error("InvalidArguments", "--nodes required (no sidecar found)");
    }

    Out out(out_path);
    std::ostream& os = out.stream();

    if (report == "isolated") {
        const std::uint64_t iso = isolated_count(list.edges, nodes);
        os << "#n\tisolated\tfraction\n";
        os << nodes << '\t' << iso << '\t'
           << num(static_cast<double>(iso) / static_cast<double>(nodes)) << '\n';
        return 0;
    }
    if (report == "degree-dist" || report == "oscillation") {
        EdgeList work = multigraph ? list : deduplicate(list);
        const DegreeHistogram h = degree_histogram(
            work.edges, nodes, orientation_from_string(orientation_name));
        if (report == "degree-dist") {
            os << "#degree\tvertex_count\n";
            for (const auto& [d, c] : h.counts) os << d << '\t' << c << '\n';
        } else {
            if (levels <= 0) {
                throw Error("InvalidArguments", "--levels required for oscillation");
            }
            os << "#levels\tdmin\tdmax\tscore\n";
            os << levels << '\t' << 2 * levels << '\t'
               << static_cast<std::uint64_t>(std::sqrt(std::pow(2.0, levels))) << '\t'
               << oscillation_score(h, levels) << '\n';
        }
        return 0;
    }
    // kcore
    const CoreKind kind = core_kind == "out" ? CoreKind::OutCore : CoreKind::Undirected;
    const EdgeList prepared =
        kind == CoreKind::Undirected ? undirect(list) : deduplicate(list);
    const CoreProfile prof = core_decomposition(prepared.edges, nodes, kind);
    os << "#k\tcore_size\n";
    for (std::uint32_t k = 1; k <= prof.max_core; ++k) {
        os << k << '\t' << prof.sizes.at(k) << '\n';
    }
    os << "max_core\t" << prof.max_core << '\n';
    return 0;
}

int cmd_compare(const ModelArgs& margs, std::uint64_t seed, unsigned instances,
                double noise_b, const std::string& noise_mode, bool multigraph,
                std::uint64_t dmin, std::uint64_t dmax, unsigned threads,
                const std::string& out_path) {
    const auto r = margs.resolve();
    const DerivedParams dp = derive_params(
        make_params(r, seed, 0.0, ""));
    if (dmax == 0) dmax = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(dp.n)));

    std::vector<DegreeHistogram> hists;
    hists.reserve(instances);
    for (unsigned i = 0; i < instances; ++i) {
        SkgParams p = make_params(r, seed + i, noise_b, noise_mode);
        EdgeList list = generate(p, ChunkPlan{std::uint64_t{1} << 16, threads});
        if (!multigraph) list = deduplicate(list);
        hists.push_back(degree_histogram(list.edges, dp.n, Orientation::Out));
    }
    const auto empirical = mean_histogram(hists);

    const PredictionReport rep =
        make_prediction_report(r.matrix, r.levels, r.insertions, dmin, dmax);

    Out out(out_path);
    std::ostream& os = out.stream();
    os << "#d\tempirical_mean\texact\tlemma\ttheorem\n";
    double max_rel_lemma = 0.0, max_rel_exact = 0.0;
    std::uint64_t graded = 0;
    const double d_low = std::exp(1.0) * std::log(2.0) * r.levels;
    for (const DegreeCurvePoint& pt : rep.degree_curves) {
        const auto it = empirical.find(pt.d);
        const double emp = it == empirical.end() ? 0.0 : it->second;
        os << pt.d << '\t' << num(emp) << '\t' << num(pt.exact) << '\t'
           << num(pt.lemma) << '\t' << num(pt.theorem_bound) << '\n';
        if (emp >= 100.0 && static_cast<double>(pt.d) >= d_low) {
            ++graded;
            max_rel_lemma = std::max(max_rel_lemma, std::abs(pt.lemma / emp - 1.0));
            max_rel_exact = std::max(max_rel_exact, std::abs(pt.exact / emp - 1.0));
        }
    }
    std::cerr << "compared " << graded << " degrees with mean count >= 100 in ["
              << num(d_low) << ", " << dmax << "]: max relative error "
              << num(max_rel_lemma) << " (lemma), " << num(max_rel_exact)
              << " (exact)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"recursive-quadrant graph laboratory"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "generate an edge list");
    ModelArgs gen_args;
    gen_args.add_to(*gen);
    std::uint64_t gen_seed = 1;
    double gen_noise = 0.0;
    std::string gen_noise_mode;
    bool gen_simple = false;
    bool gen_multigraph = false;
    std::string gen_format = "tsv";
    std::string gen_out;
    unsigned gen_threads = 1;
    std::uint64_t gen_chunk = std::uint64_t{1} << 16;
    gen->add_option("--seed", gen_seed, "generation seed");
    gen->add_option("--noise", gen_noise, "noise amplitude b");
    gen->add_option("--noise-mode", gen_noise_mode, "none|per-level|per-edge")
        ->check(CLI::IsMember({"none", "per-level", "per-edge"}));
    gen->add_flag("--simple", gen_simple, "deduplicate before writing");
    gen->add_flag("--multigraph", gen_multigraph, "keep repeats (default)");
    gen->add_option("--format", gen_format, "tsv|bin")
        ->check(CLI::IsMember({"tsv", "bin"}));
    gen->add_option("--out", gen_out, "output path")->required();
    gen->add_option("--threads", gen_threads, "worker threads");
    gen->add_option("--chunk-size", gen_chunk, "edges per chunk (reproducibility contract)");

    // predict
    auto* pre = app.add_subcommand("predict", "closed-form expectations");
    ModelArgs pre_args;
    pre_args.add_to(*pre);
    std::string pre_report = "summary";
    std::string pre_method = "exact";
    std::uint64_t pre_dmin = 1, pre_dmax = 0;
    std::string pre_out = "-";
    pre->add_option("--report", pre_report, "degree-dist|isolated|repeats|summary")
        ->check(CLI::IsMember({"degree-dist", "isolated", "repeats", "summary"}));
    pre->add_option("--method", pre_method, "degree-dist method: exact|lemma|theorem")
        ->check(CLI::IsMember({"exact", "lemma", "theorem"}));
    pre->add_option("--dmin", pre_dmin, "first degree");
    pre->add_option("--dmax", pre_dmax, "last degree (default sqrt(n))");
    pre->add_option("--out", pre_out, "report path or -");

    // analyze
    auto* ana = app.add_subcommand("analyze", "measure an edge file");
    std::string ana_file;
    std::uint64_t ana_nodes = 0;
    int ana_levels = 0;
    std::string ana_report = "degree-dist";
    std::string ana_orientation = "out";
    std::string ana_core_kind = "undirected";
    bool ana_multigraph = false;
    std::string ana_out = "-";
    ana->add_option("file", ana_file, "edge file (tsv or bin)")->required();
    ana->add_option("--nodes", ana_nodes, "vertex count (default: sidecar)");
    ana->add_option("--levels", ana_levels, "level count (default: sidecar)");
    ana->add_option("--report", ana_report, "degree-dist|isolated|kcore|oscillation")
        ->check(CLI::IsMember({"degree-dist", "isolated", "kcore", "oscillation"}));
    ana->add_option("--orientation", ana_orientation, "out|in|undirected")
        ->check(CLI::IsMember({"out", "in", "undirected"}));
    ana->add_option("--core-kind", ana_core_kind, "undirected|out")
        ->check(CLI::IsMember({"undirected", "out"}));
    ana->add_flag("--multigraph", ana_multigraph,
                  "histogram the raw multigraph (default: deduplicate first)");
    ana->add_option("--out", ana_out, "report path or -");

    // compare
    auto* cmp = app.add_subcommand("compare", "empirical vs predicted degree curves");
    ModelArgs cmp_args;
    cmp_args.add_to(*cmp);
    std::uint64_t cmp_seed = 1;
    unsigned cmp_instances = 25;
    double cmp_noise = 0.0;
    std::string cmp_noise_mode;
    bool cmp_multigraph = false;
    std::uint64_t cmp_dmin = 1, cmp_dmax = 0;
    unsigned cmp_threads = 1;
    std::string cmp_out = "-";
    cmp->add_option("--seed", cmp_seed, "base seed; instance i uses seed+i");
    cmp->add_option("--instances", cmp_instances, "instances to average");
    cmp->add_option("--noise", cmp_noise, "noise amplitude for generation");
    cmp->add_option("--noise-mode", cmp_noise_mode, "none|per-level|per-edge")
        ->check(CLI::IsMember({"none", "per-level", "per-edge"}));
    cmp->add_flag("--multigraph", cmp_multigraph, "compare multigraph degrees");
    cmp->add_option("--dmin", cmp_dmin, "first degree");
    cmp->add_option("--dmax", cmp_dmax, "last degree (default sqrt(n))");
    cmp->add_option("--threads", cmp_threads, "worker threads");
    cmp->add_option("--out", cmp_out, "report path or -");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            if (gen_simple && gen_multigraph) {
                throw Error("InvalidArguments", "--simple and --multigraph are exclusive");
            }
            return cmd_generate(gen_args, gen_seed, gen_noise, gen_noise_mode,
                                gen_simple, gen_format, gen_out, gen_threads,
                                gen_chunk);
        }
        if (pre->parsed()) {
            return cmd_predict(pre_args, pre_report, pre_method, pre_dmin, pre_dmax,
                               pre_out);
        }
        if (ana->parsed()) {
            return cmd_analyze(ana_file, ana_nodes, ana_levels, ana_report,
                               ana_orientation, ana_core_kind, ana_multigraph,
                               ana_out);
        }
        if (cmp->parsed()) {
            return cmd_compare(cmp_args, cmp_seed, cmp_instances, cmp_noise,
                               cmp_noise_mode, cmp_multigraph, cmp_dmin, cmp_dmax,
                               cmp_threads, cmp_out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: Internal: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
