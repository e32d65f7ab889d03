#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twotree/edgelist.hpp"
#include "twotree/engine.hpp"
#include "twotree/generator.hpp"
#include "twotree/oracle.hpp"
#include "twotree/pyramids.hpp"
#include "twotree/rng.hpp"
#include "twotree/twotree.hpp"

using namespace twotree;

namespace {

constexpr int kExitHasPath = 0;
constexpr int kExitNoPath = 1;
constexpr int kExitInputError = 2;

std::string join_ids(const std::vector<VertexId>& ids) {
    std::ostringstream out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out << " ";
        out << ids[i];
    }
    return out.str();
}

Graph load_or_exit(const std::string& path) {
    try {
        Graph g = read_edge_list_file(path);
        if (!is_two_tree(g).ok) {
            std::cerr << "error: " << path << " is not a 2-tree\n";
            std::exit(kExitInputError);
        }
        return g;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::exit(kExitInputError);
    }
}

void dump_stage_trace(std::ostream& out, const HPResult& res) {
    if (!res.trace) return;
    const StageTrace& tr = *res.trace;
    out << "case: " << to_string(tr.label) << "\n";
    auto dump_graph = [&](const char* name, const Graph& g, const BlueState* blue) {
        out << name << ": n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
        for (EdgeKey e : g.edges()) {
            out << "  " << e.a << " " << e.b;
            if (blue && blue->is_blue(e)) {
                out << " blue";
                auto label = blue->label_oriented(e.a, e.b);
                if (!label.empty()) out << " label(" << join_ids(label) << ")";
            }
            out << "\n";
        }
    };
    if (tr.g0) dump_graph("G0", tr.g0->graph, &tr.g0->blue);
    if (tr.g1) {
        dump_graph("G1", tr.g1->graph, &tr.g1->blue);
        out << "s=" << tr.g1->s << " nbrs(" << tr.g1->s_nbrs.first << ","
            << tr.g1->s_nbrs.second << ")  t=" << tr.g1->t << " nbrs("
            << tr.g1->t_nbrs.first << "," << tr.g1->t_nbrs.second << ")\n";
        out << "sigma: " << join_ids(tr.g1->sigma.order) << "\n";
    }
    for (const AttemptTrace& at : tr.attempts) {
        out << "attempt: u=" << at.assign.endpoint_s << " x=" << at.assign.endpoint_t
            << " type=" << at.assign.type << "\n";
        for (EdgeKey e : at.sets.all_edges_sorted()) {
            auto it = at.sets.provenance.find(e);
            out << "  " << e.a << " " << e.b << " "
                << (it == at.sets.provenance.end() ? "?" : it->second) << "\n";
        }
        if (at.failure)
            out << "  rejected: " << describe(*at.failure) << "\n";
        else if (at.g2)
            dump_graph("  G2", at.g2->graph, nullptr);
    }
}

int cmd_check(const std::string& file) {
    Graph g = load_or_exit(file);
    auto report = pyramid_report(g);
    std::cout << "case: " << to_string(classify(report)) << "\n";
    HPResult res = hamiltonian_path(g);
    if (res.has_path()) {
        std::cout << "hamiltonian-path: yes\n";
        return kExitHasPath;
    }
    std::cout << "hamiltonian-path: no\n";
    std::cout << "witness: " << describe(*res.witness) << "\n";
    return kExitNoPath;
}

int cmd_path(const std::string& file, bool explain, const std::string& dot_out) {
    Graph g = load_or_exit(file);
    HPResult res = hamiltonian_path(g);
    if (!dot_out.empty()) {
        std::vector<EdgeKey> blue_edges;
        std::vector<std::pair<EdgeKey, std::string>> blue_labels;
        if (res.trace && res.trace->g0) {
            for (EdgeKey e : res.trace->g0->blue.blue_edges_sorted()) {
                blue_edges.push_back(e);
                blue_labels.emplace_back(
                    e, join_ids(res.trace->g0->blue.label_oriented(e.a, e.b)));
            }
        }
        DotOptions opt;
        opt.blue_edges = &blue_edges;
        opt.blue_labels = &blue_labels;
        if (res.path) opt.path = &*res.path;
        std::ofstream out(dot_out, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << dot_out << "\n";
            return kExitInputError;
        }
        write_dot(out, g, opt);
    }
    if (explain) dump_stage_trace(std::cerr, res);
    if (!res.has_path()) {
        std::cerr << "no hamiltonian path: " << describe(*res.witness) << "\n";
        return kExitNoPath;
    }
    std::cout << join_ids(*res.path) << "\n";
    return kExitHasPath;
}

struct VerifyStats {
    long long total = 0;
    long long agree = 0;
    std::string first_disagreement;
};

int cmd_verify(int n_max, long long count, std::uint64_t seed0, const std::string& manifest) {
    if (n_max > oracle_bound()) {
        std::cerr << "error: --n-max exceeds the oracle bound (" << oracle_bound() << ")\n";
        return kExitInputError;
    }
    std::ofstream mf;
    if (!manifest.empty()) {
        mf.open(manifest, std::ios::binary);
        if (!mf) {
            std::cerr << "error: cannot write " << manifest << "\n";
            return kExitInputError;
        }
    }
    VerifyStats stats;
    SplitMix64 mix(seed0 ^ 0x5bf03635ULL);
    for (long long i = 0; i < count; ++i) {
        GenSpec spec;
        spec.seed = seed0 + static_cast<std::uint64_t>(i);
        int which = static_cast<int>(i % 4);
        int lo = 2;
        switch (which) {
            case 0: spec.profile = GenProfile::Any; break;
            case 1: spec.profile = GenProfile::ThreePyramidFree; break;
            case 2:
                spec.profile = GenProfile::ForceThreePyramids;
                lo = 5;
                break;
            default: spec.profile = GenProfile::ForceFourPyramid; lo = 6; break;
        }
        if (n_max < lo) continue;
        spec.n = lo + static_cast<int>(mix.below(static_cast<std::uint64_t>(n_max - lo + 1)));
        if (spec.profile == GenProfile::ForceThreePyramids) {
            int kmax = (spec.n - 3) / 2;
            spec.k = 1 + static_cast<int>(mix.below(static_cast<std::uint64_t>(kmax)));
        }
        Graph g = generate(spec);
        HPResult res = hamiltonian_path(g);
        bool oracle_yes = oracle_hp(g).has_value();
        bool ok = res.has_path() == oracle_yes;
        if (ok && res.has_path()) ok = validate_path(g, *res.path);
        ++stats.total;
        if (ok)
            ++stats.agree;
        else if (stats.first_disagreement.empty()) {
            std::ostringstream why;
            why << "seed=" << spec.seed << " n=" << spec.n << " profile="
                << spec.profile_string() << " solver=" << (res.has_path() ? "yes" : "no")
                << " oracle=" << (oracle_yes ? "yes" : "no");
            stats.first_disagreement = why.str();
        }
        if (mf)
            mf << manifest_line({spec.seed, spec.n, spec.profile_string(), oracle_yes}) << "\n";
    }
    std::cout << stats.agree << "/" << stats.total << " agree\n";
    if (!stats.first_disagreement.empty()) {
        std::cout << "first disagreement: " << stats.first_disagreement << "\n";
        return 1;
    }
    return 0;
}

int cmd_gen(int n, const std::string& profile, std::uint64_t seed, const std::string& out_path) {
    GenSpec spec;
    try {
        spec = GenSpec::parse_profile(n, seed, profile);
        Graph g = generate(spec);
        if (out_path.empty()) {
            write_edge_list(std::cout, g);
        } else {
            write_edge_list_file(out_path, g);
        }
        std::cerr << "seed: " << seed << "\n";
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cmd_bench(const std::string& sizes_csv, const std::string& profile, std::uint64_t seed,
              int reps) {
    std::vector<int> sizes;
    std::stringstream ss(sizes_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        sizes.push_back(std::atoi(tok.c_str()));
    }
    std::cout << "n,seconds,result\n";
    for (int n : sizes) {
        // Three seeded instances per size; the reported time is the sum of
        // the per-instance medians, which damps noise and instance quirks.
        double total = 0;
        bool has = false;
        for (std::uint64_t s = seed; s < seed + 3; ++s) {
            GenSpec spec = GenSpec::parse_profile(n, s, profile);
            Graph g = generate(spec);
            (void)hamiltonian_path(g);
            std::vector<double> times;
            for (int r = 0; r < std::max(1, reps); ++r) {
                auto t0 = std::chrono::steady_clock::now();
                HPResult res = hamiltonian_path(g);
                auto t1 = std::chrono::steady_clock::now();
                times.push_back(std::chrono::duration<double>(t1 - t0).count());
                has = res.has_path();
            }
            std::sort(times.begin(), times.end());
            total += times[times.size() / 2];
        }
        std::cout << n << "," << total << "," << (has ? "yes" : "no") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian paths in 2-trees"};
    app.require_subcommand(1);

    std::string file, dot_out, manifest, out_path;
    bool explain = false;
    int n_max = 10, n = 2;
    long long count = 1000;
    std::uint64_t seed = 0, seed0 = 1;
    std::string profile = "any";
    std::string sizes = "";

    auto* check = app.add_subcommand("check", "decide Hamiltonian-path existence");
    check->add_option("file", file, "edge-list file")->required();

    auto* path = app.add_subcommand("path", "print a Hamiltonian path");
    path->add_option("file", file, "edge-list file")->required();
    path->add_flag("--explain", explain, "dump stage traces to stderr");
    path->add_option("--dot", dot_out, "write a DOT rendering");

    auto* verify = app.add_subcommand("verify", "compare solver against the oracle");
    verify->add_option("--n-max", n_max, "largest instance size");
    verify->add_option("--count", count, "number of instances");
    verify->add_option("--seed0", seed0, "first seed");
    verify->add_option("--manifest", manifest, "write corpus manifest");

    auto* gen = app.add_subcommand("gen", "generate a 2-tree");
    gen->add_option("--n", n, "vertex count")->required();
    gen->add_option("--profile", profile, "any | 3pf | force3:<k> | force4");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--out", out_path, "output file (default stdout)");

    int reps = 3;
    auto* bench = app.add_subcommand("bench", "time the solver across sizes");
    bench->add_option("--sizes", sizes, "comma-separated instance sizes");
    bench->add_option("--profile", profile, "generation profile");
    bench->add_option("--seed", seed, "generator seed");
    bench->add_option("--reps", reps, "repetitions per size (best time reported)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(file);
        if (path->parsed()) return cmd_path(file, explain, dot_out);
        if (verify->parsed()) return cmd_verify(n_max, count, seed0, manifest);
        if (gen->parsed()) return cmd_gen(n, profile, seed, out_path);
        if (bench->parsed()) return cmd_bench(sizes, profile, seed, reps);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return 0;
}
