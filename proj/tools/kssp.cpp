// kssp.cpp - Command-line interface: k-SiSP/k-APSiSP queries, cycle queries,
// weight-ordered enumeration, gadget construction, randomized verification
// against the brute-force oracles, and a small benchmark harness.
//
// Results are emitted as one JSON record per line with stable key order, so
// identical inputs produce byte-identical output.

#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "kssp/apsisp.hpp"
#include "kssp/cycles.hpp"
#include "kssp/enumerate.hpp"
#include "kssp/graph.hpp"
#include "kssp/oracles.hpp"
#include "kssp/random_graph.hpp"
#include "kssp/reductions.hpp"
#include "kssp/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitInput = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

kssp::Graph load_graph(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return kssp::parse_graph(buffer.str());
}

ordered_json path_record(const kssp::VertexPath& p) {
    ordered_json rec;
    rec["weight"] = p.weight.wt;
    rec["length"] = p.weight.len;
    rec["vertices"] = p.vertices;
    return rec;
}

void emit_pair_paths(std::ostream& os, kssp::VertexId x, kssp::VertexId y,
                     const std::vector<kssp::VertexPath>& paths) {
    std::size_t rank = 0;
    for (const auto& p : paths) {
        ordered_json rec;
        rec["pair"] = {x, y};
        rec["rank"] = ++rank;
        rec.update(path_record(p));
        os << rec.dump() << '\n';
    }
}

void emit_cycles(std::ostream& os, std::optional<kssp::VertexId> anchor,
                 const std::vector<kssp::Cycle>& cycles) {
    std::size_t rank = 0;
    for (const auto& c : cycles) {
        ordered_json rec;
        if (anchor) rec["anchor"] = *anchor;
        rec["rank"] = ++rank;
        rec["weight"] = c.weight.wt;
        rec["length"] = c.weight.len;
        rec["vertices"] = c.vertices;
        os << rec.dump() << '\n';
    }
}

int run_apsisp(const std::string& file, std::uint32_t k, std::uint32_t max_k) {
    kssp::Graph g = load_graph(file);
    kssp::PathTable table = kssp::apsisp(g, k, {max_k});
    for (kssp::VertexId x = 1; x <= g.vertex_count(); ++x)
        for (kssp::VertexId y = 1; y <= g.vertex_count(); ++y)
            if (x != y) emit_pair_paths(std::cout, x, y, table.pair_output(x, y));
    return 0;
}

int run_sisp(const std::string& file, kssp::VertexId s, kssp::VertexId t, std::uint32_t k) {
    kssp::Graph g = load_graph(file);
    if (s < 1 || s > g.vertex_count() || t < 1 || t > g.vertex_count())
        throw InputError("source or target out of range");
    emit_pair_paths(std::cout, s, t, kssp::oracles::yen(g, s, t, k));
    return 0;
}

int run_sisc(const std::string& file, kssp::VertexId v, std::uint32_t k) {
    kssp::Graph g = load_graph(file);
    if (v < 1 || v > g.vertex_count()) throw InputError("vertex out of range");
    kssp::CycleSet set =
        g.directed() ? kssp::k_sisc(g, v, k) : kssp::undirected_k_sisc(g, v, k);
    emit_cycles(std::cout, v, set.cycles);
    return 0;
}

int run_avsisc(const std::string& file, std::uint32_t k) {
    kssp::Graph g = load_graph(file);
    if (!g.directed()) throw InputError("avsisc requires a directed graph");
    auto sets = kssp::k_avsisc(g, k);
    for (kssp::VertexId v = 1; v <= g.vertex_count(); ++v)
        emit_cycles(std::cout, v, sets[v].cycles);
    return 0;
}

int run_enum_paths(const std::string& file, std::uint32_t k) {
    kssp::Graph g = load_graph(file);
    kssp::AllSispCursor cursor(g);
    std::size_t rank = 0;
    while (rank < k) {
        auto p = cursor.next();
        if (!p) break;
        ordered_json rec;
        rec["rank"] = ++rank;
        rec.update(path_record(*p));
        std::cout << rec.dump() << '\n';
    }
    return 0;
}

int run_enum_cycles(const std::string& file, std::uint32_t k) {
    kssp::Graph g = load_graph(file);
    if (!g.directed()) throw InputError("enum-cycles requires a directed graph");
    emit_cycles(std::cout, std::nullopt, kssp::all_sisc(g, k));
    return 0;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream file(path);
    if (!file) throw InputError("cannot write " + path);
    file << contents;
}

int run_gadget(const std::string& file, const std::string& type, const std::string& prefix,
               kssp::VertexId s, kssp::VertexId t, std::uint32_t k, kssp::VertexId v) {
    kssp::Graph g = load_graph(file);
    std::ostringstream query;
    std::string graph_text;
    if (type == "mwc-2sisp") {
        auto gadget = kssp::gadget_mwc_to_2sisp(g);
        graph_text = kssp::serialize_graph(gadget.graph);
        query << "type: mwc-2sisp\n"
              << "solve: 2-sisp\n"
              << "source: " << gadget.source << "\n"
              << "target: " << gadget.target << "\n"
              << "W: " << gadget.big_w << "\n"
              << "offset: " << gadget.offset << "\n"
              << "acyclic-threshold: " << gadget.acyclic_threshold << "\n"
              << "decode: min-cycle-weight = weight(path 2) - offset; acyclic if no second "
                 "path or weight(path 2) >= acyclic-threshold\n";
    } else if (type == "ksisp-ksisc") {
        if (s == 0 || t == 0) throw InputError("ksisp-ksisc needs -s and -t");
        auto gadget = kssp::gadget_ksisp_to_ksisc(g, s, t);
        graph_text = kssp::serialize_graph(gadget.graph);
        query << "type: ksisp-ksisc\n"
              << "solve: k-sisc\n"
              << "cycle-vertex: " << gadget.cycle_vertex << "\n"
              << "k: " << k << "\n"
              << "decode: drop the cycle vertex from each cycle; the remainder is the s->t "
                 "path of the same weight\n";
    } else if (type == "mwc-kth-sisc") {
        if (v == 0) throw InputError("mwc-kth-sisc needs -v");
        auto gadget = kssp::gadget_mwc_to_kth_all_sisc(g, k, v);
        graph_text = kssp::serialize_graph(gadget.graph);
        query << "type: mwc-kth-sisc\n"
              << "solve: enum-cycles\n"
              << "k: " << k << "\n"
              << "attach-vertex: " << gadget.attach_vertex << "\n"
              << "decode: the k-th emitted cycle weight is the minimum cycle weight; acyclic "
                 "if fewer than k cycles\n";
    } else if (type == "apsp-2apsisp") {
        auto gadget = kssp::gadget_apsp_to_second_apsisp(g);
        graph_text = kssp::serialize_graph(gadget.graph);
        query << "type: apsp-2apsisp\n"
              << "solve: apsisp k=2\n"
              << "hub: " << gadget.hub << "\n"
              << "a-vertices: " << gadget.a_vertex[1] << ".." << gadget.a_vertex.back() << "\n"
              << "b-vertices: " << gadget.b_vertex[1] << ".." << gadget.b_vertex.back() << "\n"
              << "decode: dist(i,j) = weight(second sisp a_i -> b_j) - 2; infinity if absent\n";
    } else {
        throw InputError("unknown gadget type " + type);
    }
    write_file(prefix + ".graph", graph_text);
    write_file(prefix + ".query", query.str());
    std::cout << "wrote " << prefix << ".graph and " << prefix << ".query\n";
    return 0;
}

int run_verify(std::uint32_t max_n, std::uint64_t seeds, const std::string& suite_name,
               unsigned jobs) {
    auto suite = kssp::parse_suite(suite_name);
    if (!suite) throw InputError("unknown suite " + suite_name);
    std::vector<std::optional<kssp::VerifyFailure>> results(seeds);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t i = next.fetch_add(1); i < seeds; i = next.fetch_add(1))
            results[i] = kssp::verify_seed(i + 1, max_n, *suite);
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::future<void>> futures;
        for (unsigned j = 0; j < jobs; ++j)
            futures.push_back(std::async(std::launch::async, worker));
        for (auto& f : futures) f.get();
    }
    bool failed = false;
    for (std::uint64_t i = 0; i < seeds; ++i) {
        ordered_json rec;
        rec["seed"] = i + 1;
        if (results[i]) {
            failed = true;
            rec["status"] = "fail";
            rec["suite"] = results[i]->suite;
            rec["message"] = results[i]->message;
            rec["graph"] = results[i]->graph;
        } else {
            rec["status"] = "ok";
        }
        std::cout << rec.dump() << '\n';
    }
    return failed ? kExitVerify : 0;
}

double time_seconds(const std::function<void()>& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int run_bench(const std::string& preset) {
    auto report = [](const char* name, std::uint32_t n, std::size_t m, std::uint64_t k,
                     double seconds) {
        ordered_json rec;
        rec["preset"] = name;
        rec["n"] = n;
        rec["m"] = m;
        rec["k"] = k;
        rec["seconds"] = seconds;
        std::cout << rec.dump() << '\n';
    };
    bool ran = false;
    if (preset == "apsisp" || preset == "all") {
        kssp::Graph g = kssp::random_gnm(300, 1800, 1, 10, 42);
        double s = time_seconds([&] { kssp::two_apsisp(g); });
        report("apsisp", g.vertex_count(), g.edge_count(), 2, s);
        ran = true;
    }
    if (preset == "enum-paths" || preset == "all") {
        kssp::Graph g = kssp::random_gnm(100, 500, 1, 10, 7);
        double s = time_seconds([&] { kssp::all_sisp(g, 10000); });
        report("enum-paths", g.vertex_count(), g.edge_count(), 10000, s);
        ran = true;
    }
    if (!ran) throw InputError("unknown preset " + preset + " (apsisp, enum-paths, all)");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k simple shortest paths and cycles"};
    app.require_subcommand(1);

    std::string file, type, prefix = "gadget", suite = "all", preset = "all";
    std::uint32_t k = 1, max_n = 6, max_k = 5;
    std::uint64_t seeds = 20;
    unsigned jobs = 1;
    kssp::VertexId s = 0, t = 0, v = 0;

    auto* apsisp = app.add_subcommand("apsisp", "k simple shortest paths for all pairs");
    apsisp->add_option("-k", k, "number of paths per pair")->required();
    apsisp->add_option("--max-k", max_k, "resource guard: refuse k above this");
    apsisp->add_option("file", file, "graph file")->required();

    auto* sisp = app.add_subcommand("sisp", "k simple shortest paths for one pair");
    sisp->add_option("-s", s, "source")->required();
    sisp->add_option("-t", t, "target")->required();
    sisp->add_option("-k", k, "number of paths")->required();
    sisp->add_option("file", file, "graph file")->required();

    auto* sisc = app.add_subcommand("sisc", "k simple shortest cycles through a vertex");
    sisc->add_option("-v", v, "anchor vertex")->required();
    sisc->add_option("-k", k, "number of cycles")->required();
    sisc->add_option("file", file, "graph file")->required();

    auto* avsisc = app.add_subcommand("avsisc", "k simple shortest cycles through every vertex");
    avsisc->add_option("-k", k, "number of cycles per vertex")->required();
    avsisc->add_option("file", file, "graph file")->required();

    auto* enum_paths = app.add_subcommand("enum-paths", "simple paths in weight order");
    enum_paths->add_option("-k", k, "number of paths")->required();
    enum_paths->add_option("file", file, "graph file")->required();

    auto* enum_cycles = app.add_subcommand("enum-cycles", "simple cycles in weight order");
    enum_cycles->add_option("-k", k, "number of cycles")->required();
    enum_cycles->add_option("file", file, "graph file")->required();

    auto* gadget = app.add_subcommand("gadget", "construct a reduction instance");
    gadget->add_option("--type", type, "mwc-2sisp | ksisp-ksisc | mwc-kth-sisc | apsp-2apsisp")
        ->required();
    gadget->add_option("-o,--output", prefix, "output prefix (PREFIX.graph, PREFIX.query)");
    gadget->add_option("-s", s, "source (ksisp-ksisc)");
    gadget->add_option("-t", t, "target (ksisp-ksisc)");
    gadget->add_option("-k", k, "k (ksisp-ksisc, mwc-kth-sisc)");
    gadget->add_option("-v", v, "attach vertex (mwc-kth-sisc)");
    gadget->add_option("file", file, "graph file")->required();

    auto* verify = app.add_subcommand("verify", "randomized checks against the oracles");
    verify->add_option("--max-n", max_n, "largest random graph size");
    verify->add_option("--seeds", seeds, "number of seeds");
    verify->add_option("--suite", suite, "apsisp | q2 | allsisp | allsisc | cycles | gadgets | all");
    verify->add_option("--jobs", jobs, "worker threads");

    auto* bench = app.add_subcommand("bench", "desk-scale timing presets");
    bench->add_option("--preset", preset, "apsisp | enum-paths | all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (apsisp->parsed()) return run_apsisp(file, k, max_k);
        if (sisp->parsed()) return run_sisp(file, s, t, k);
        if (sisc->parsed()) return run_sisc(file, v, k);
        if (avsisc->parsed()) return run_avsisc(file, k);
        if (enum_paths->parsed()) return run_enum_paths(file, k);
        if (enum_cycles->parsed()) return run_enum_cycles(file, k);
        if (gadget->parsed()) return run_gadget(file, type, prefix, s, t, k, v);
        if (verify->parsed()) return run_verify(max_n, seeds, suite, jobs);
        if (bench->parsed()) return run_bench(preset);
    } catch (const kssp::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitUsage;
}
