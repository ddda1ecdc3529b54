// Acceptance suite: one test per acceptance criterion, each printing a
// [PASS]/[FAIL] banner line. Criteria 8 and 9 drive the CLI binary.

#include <gtest/gtest.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "kssp/apsisp.hpp"
#include "kssp/cycles.hpp"
#include "kssp/enumerate.hpp"
#include "kssp/oracles.hpp"
#include "kssp/random_graph.hpp"
#include "kssp/reductions.hpp"
#include "kssp/verify.hpp"
#include "test_graphs.hpp"

using namespace kssp;

namespace {

struct Criterion {
    int number;
    const char* name;
    ~Criterion() {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        bool failed = info && info->result()->Failed();
        std::cout << (failed ? "[FAIL] criterion " : "[PASS] criterion ") << number << ": "
                  << name << std::endl;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// The shared corpus for criteria 1, 2 and 5: 300 random directed graphs,
// n <= 7, p = 0.4, weights 1..10, every third one with zero-weight edges.
Graph corpus_graph(std::uint64_t seed) {
    RandomGraphParams params{2 + static_cast<std::uint32_t>(seed % 6), 0.4, 1, 10,
                             seed % 3 == 0 ? 0.2 : 0.0, true};
    return random_graph(params, seed);
}

std::vector<PathWeight> brute_pair_weights(const Graph& g, VertexId x, VertexId y,
                                           std::size_t k) {
    std::vector<PathWeight> w;
    for (const auto& p : oracles::brute_paths(g, x, y, k)) w.push_back(p.weight);
    return w;
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream file(path, std::ios::binary);
    file << contents;
}

// Runs the CLI with stdout redirected to a file; returns the wall time.
double run_cli(const std::string& args, const std::string& stdout_path) {
    std::string command = std::string(KSSP_CLI_PATH) + " " + args + " > " + stdout_path;
    auto start = std::chrono::steady_clock::now();
    int rc = std::system(command.c_str());
    double elapsed = seconds_since(start);
    EXPECT_EQ(rc, 0) << command;
    return elapsed;
}

}  // namespace

TEST(Acceptance, C1_ApsispOracleEquivalence) {
    Criterion banner{1, "k-APSiSP equals brute force on 300 random graphs, k in {2,3,4}"};
    auto start = std::chrono::steady_clock::now();
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        Graph g = corpus_graph(seed);
        for (std::uint32_t k = 2; k <= 4; ++k) {
            PathTable table = apsisp(g, k);
            for (VertexId x = 1; x <= g.vertex_count(); ++x)
                for (VertexId y = 1; y <= g.vertex_count(); ++y) {
                    if (x == y) continue;
                    auto got = table.pair_weights(x, y);
                    std::sort(got.begin(), got.end());
                    ASSERT_EQ(got, brute_pair_weights(g, x, y, k))
                        << "seed " << seed << " k " << k << " pair " << x << "->" << y;
                }
        }
    }
    EXPECT_LT(seconds_since(start), 120.0) << "suite must finish within two minutes";
}

TEST(Acceptance, C2_QTwoDefinitionCheck) {
    Criterion banner{2, "Q2 second entries equal per-edge-removal recomputation"};
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        Graph g = corpus_graph(seed);
        PathTable q = compute_q2(g);
        for (VertexId x = 1; x <= g.vertex_count(); ++x) {
            ShortestPathTree tree = sssp(g, x);
            for (VertexId y = 1; y <= g.vertex_count(); ++y) {
                if (x == y) continue;
                const PathSet& set = q.at(x, y);
                if (!tree.reachable(y)) {
                    ASSERT_TRUE(set.empty()) << "seed " << seed;
                    continue;
                }
                ASSERT_FALSE(set.empty()) << "seed " << seed;
                ASSERT_EQ(q.store().rec(set.paths[0]).weight, tree.dist[y]) << "seed " << seed;
                std::vector<VertexId> seq = tree.path_to(y);
                EdgeId first = tree.parent_edge[seq[1]];
                ShortestPathTree without =
                    sssp_excluding(g, x, std::span<const EdgeId>(&first, 1));
                if (without.reachable(y)) {
                    ASSERT_EQ(set.size(), 2u) << "seed " << seed;
                    ASSERT_EQ(q.store().rec(set.paths[1]).weight, without.dist[y])
                        << "seed " << seed;
                } else {
                    ASSERT_EQ(set.size(), 1u) << "seed " << seed;
                }
            }
        }
    }
}

TEST(Acceptance, C3_AllSispCompleteness) {
    Criterion banner{3, "All-SiSP emission equals globally sorted brute force"};
    auto check = [](const Graph& g, const std::string& label) {
        std::vector<VertexPath> want;
        for (VertexId x = 1; x <= g.vertex_count(); ++x)
            for (VertexId y = 1; y <= g.vertex_count(); ++y) {
                if (x == y) continue;
                auto paths =
                    oracles::brute_paths(g, x, y, std::numeric_limits<std::size_t>::max());
                want.insert(want.end(), paths.begin(), paths.end());
            }
        std::sort(want.begin(), want.end(), path_less);
        auto got = all_sisp(g, want.size() + 1);
        ASSERT_EQ(got.size(), want.size()) << label;
        for (std::size_t i = 0; i < want.size(); ++i) ASSERT_EQ(got[i], want[i]) << label;
    };

    for (std::uint32_t n = 2; n <= 6; ++n) {
        std::mt19937_64 rng(n);
        std::uniform_int_distribution<Weight> weight(1, 10);
        std::vector<Edge> edges;
        for (VertexId u = 1; u <= n; ++u)
            for (VertexId v = 1; v <= n; ++v)
                if (u != v) edges.push_back({u, v, weight(rng)});
        check(Graph::build(n, true, std::move(edges)), "complete n=" + std::to_string(n));
    }
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        RandomGraphParams params{2 + static_cast<std::uint32_t>(seed % 5), 0.4, 1, 10,
                                 seed % 3 == 0 ? 0.2 : 0.0, true};
        check(random_graph(params, seed), "random seed=" + std::to_string(seed));
    }
}

TEST(Acceptance, C4_AllSiscCompleteness) {
    Criterion banner{4, "All-SiSC emission equals sorted brute-force cycles"};
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        RandomGraphParams params{2 + static_cast<std::uint32_t>(seed % 5), 0.4, 1, 10,
                                 seed % 3 == 0 ? 0.2 : 0.0, true};
        Graph g = random_graph(params, seed);
        auto want = oracles::brute_cycles(g, std::numeric_limits<std::size_t>::max());
        auto got = all_sisc(g, want.size() + 1);
        ASSERT_EQ(got.size(), want.size()) << "seed " << seed;
        for (std::size_t i = 0; i < want.size(); ++i) {
            ASSERT_EQ(got[i].vertices, want[i].vertices) << "seed " << seed;
            ASSERT_EQ(got[i].weight, want[i].weight) << "seed " << seed;
        }
    }
}

TEST(Acceptance, C5_StructuralInvariants) {
    Criterion banner{5, "update-once, queue, extension and simplicity bounds hold"};
    // compute_apsisp throws on any violation; the stats double-check the
    // bounds across the same corpus as criterion 1.
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        Graph g = corpus_graph(seed);
        const std::uint64_t pairs =
            static_cast<std::uint64_t>(g.vertex_count()) * (g.vertex_count() - 1);
        for (std::uint32_t k = 2; k <= 4; ++k) {
            ApsispStats stats;
            ASSERT_NO_THROW(apsisp(g, k, {}, &stats)) << "seed " << seed << " k " << k;
            ASSERT_LE(stats.extensions_entries, pairs) << "seed " << seed;
            ASSERT_LE(stats.heap_insertions, 2 * pairs) << "seed " << seed;
            ASSERT_LE(stats.max_updates_per_pair, 1u) << "seed " << seed;
        }
    }
}

TEST(Acceptance, C6_GadgetRoundTrips) {
    Criterion banner{6, "gadget decodes match brute force and stay linear-sized"};
    std::size_t cyclic_seen = 0;
    for (std::uint64_t seed = 1; cyclic_seen < 100; ++seed) {
        ASSERT_LT(seed, 2000u) << "not enough cyclic graphs in the corpus";
        RandomGraphParams params{2 + static_cast<std::uint32_t>(seed % 6), 0.4, 1, 10,
                                 seed % 3 == 0 ? 0.2 : 0.0, true};
        Graph g = random_graph(params, seed);
        auto min_cycle = oracles::min_weight_cycle(g);
        if (!min_cycle) continue;
        ++cyclic_seen;
        const std::size_t budget = 4 * (g.vertex_count() + g.edge_count()) + 4;

        MwcTo2SispGadget mwc = gadget_mwc_to_2sisp(g);
        ASSERT_LE(mwc.graph.vertex_count(), budget);
        ASSERT_LE(mwc.graph.edge_count(), budget);
        auto decoded = mwc.decode(oracles::yen(mwc.graph, mwc.source, mwc.target, 2));
        ASSERT_FALSE(decoded.acyclic) << "seed " << seed;
        ASSERT_EQ(decoded.min_cycle_weight, min_cycle->weight.wt) << "seed " << seed;

        ApspToSecondApsispGadget apsp = gadget_apsp_to_second_apsisp(g);
        ASSERT_LE(apsp.graph.vertex_count(), budget);
        ASSERT_LE(apsp.graph.edge_count(), budget);
        auto dist = apsp.decode(two_apsisp(apsp.graph));
        for (VertexId i = 1; i <= g.vertex_count(); ++i) {
            ShortestPathTree tree = sssp(g, i);
            for (VertexId j = 1; j <= g.vertex_count(); ++j) {
                if (i != j) ASSERT_EQ(dist[i][j], tree.dist[j]) << "seed " << seed;
            }
        }

        MwcToKthAllSiscGadget kth = gadget_mwc_to_kth_all_sisc(g, 3, 1);
        ASSERT_LE(kth.graph.vertex_count(), budget);
        ASSERT_LE(kth.graph.edge_count(), budget);
        auto kth_decoded = kth.decode(all_sisc(kth.graph, 3));
        ASSERT_FALSE(kth_decoded.acyclic) << "seed " << seed;
        ASSERT_EQ(kth_decoded.min_cycle_weight, min_cycle->weight.wt) << "seed " << seed;
    }
}

TEST(Acceptance, C7_CycleModuleEquivalence) {
    Criterion banner{7, "k_sisc and undirected_k_sisc match brute-force cycle weights"};
    auto weights = [](const CycleSet& set) {
        std::vector<PathWeight> w;
        for (const auto& c : set.cycles) w.push_back(c.weight);
        return w;
    };
    auto brute = [](const Graph& g, std::size_t k, VertexId z) {
        std::vector<PathWeight> w;
        for (const auto& c : oracles::brute_cycles(g, k, z)) w.push_back(c.weight);
        return w;
    };
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        RandomGraphParams directed{2 + static_cast<std::uint32_t>(seed % 6), 0.4, 1, 10,
                                   seed % 3 == 0 ? 0.2 : 0.0, true};
        Graph g = random_graph(directed, seed);
        for (VertexId z = 1; z <= g.vertex_count(); ++z)
            for (std::size_t k = 1; k <= 4; ++k)
                ASSERT_EQ(weights(k_sisc(g, z, k)), brute(g, k, z)) << "seed " << seed;

        RandomGraphParams undirected{2 + static_cast<std::uint32_t>(seed % 6), 0.5, 1, 10, 0.0,
                                     false};
        Graph u = random_graph(undirected, seed);
        for (VertexId z = 1; z <= u.vertex_count(); ++z)
            for (std::size_t k = 1; k <= 4; ++k)
                ASSERT_EQ(weights(undirected_k_sisc(u, z, k)), brute(u, k, z)) << "seed " << seed;
    }
}

TEST(Acceptance, C8_PerformanceSanity) {
    Criterion banner{8, "apsisp n=300 and enum-paths k=10000 finish under 10 s"};
    std::string dir = ::testing::TempDir();

    Graph dense = random_gnm(300, 1800, 1, 10, 42);
    write_file(dir + "bench_apsisp.graph", serialize_graph(dense));
    double apsisp_seconds =
        run_cli("apsisp -k 2 " + dir + "bench_apsisp.graph", dir + "bench_apsisp.out");
    EXPECT_LT(apsisp_seconds, 10.0);

    Graph sparse = random_gnm(100, 500, 1, 10, 7);
    write_file(dir + "bench_enum.graph", serialize_graph(sparse));
    double enum_seconds =
        run_cli("enum-paths -k 10000 " + dir + "bench_enum.graph", dir + "bench_enum.out");
    EXPECT_LT(enum_seconds, 10.0);

    // 10000 records should actually have been produced.
    std::string out = read_file(dir + "bench_enum.out");
    EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 10000);
}

// Not an acceptance criterion of its own: pins the CLI record shape and the
// documented exit codes to the worked examples.
TEST(CliContract, WorkedExamples) {
    std::string dir = ::testing::TempDir();
    write_file(dir + "g_share.graph",
               "d 4 5\ne 1 2 1\ne 2 4 1\ne 2 3 1\ne 3 4 1\ne 1 4 10\n");
    write_file(dir + "g_cyc2.graph", "d 3 4\ne 1 2 2\ne 2 1 3\ne 2 3 1\ne 3 2 1\n");

    run_cli("sisp -s 1 -t 4 -k 3 " + dir + "g_share.graph", dir + "cli_sisp.out");
    EXPECT_EQ(read_file(dir + "cli_sisp.out"),
              "{\"pair\":[1,4],\"rank\":1,\"weight\":2,\"length\":2,\"vertices\":[1,2,4]}\n"
              "{\"pair\":[1,4],\"rank\":2,\"weight\":3,\"length\":3,\"vertices\":[1,2,3,4]}\n"
              "{\"pair\":[1,4],\"rank\":3,\"weight\":10,\"length\":1,\"vertices\":[1,4]}\n");

    run_cli("enum-cycles -k 2 " + dir + "g_cyc2.graph", dir + "cli_cycles.out");
    EXPECT_EQ(read_file(dir + "cli_cycles.out"),
              "{\"rank\":1,\"weight\":2,\"length\":2,\"vertices\":[2,3]}\n"
              "{\"rank\":2,\"weight\":5,\"length\":2,\"vertices\":[1,2]}\n");

    run_cli("verify --max-n 6 --seeds 50", dir + "cli_verify.out");

    write_file(dir + "bad.graph", "e 1 1 5\n");
    std::string command = std::string(KSSP_CLI_PATH) + " sisp -s 1 -t 2 -k 1 " + dir +
                          "bad.graph > /dev/null 2>&1";
    int rc = std::system(command.c_str());
    EXPECT_EQ(WEXITSTATUS(rc), 1);
}

TEST(Acceptance, C9_Determinism) {
    Criterion banner{9, "repeated CLI runs are byte-identical"};
    std::string dir = ::testing::TempDir();
    RandomGraphParams params{7, 0.5, 1, 10, 0.2, true};
    Graph g = random_graph(params, 2024);
    std::string file = dir + "determinism.graph";
    write_file(file, serialize_graph(g));

    const std::vector<std::string> commands{
        "apsisp -k 3 " + file,          "sisp -s 1 -t 4 -k 3 " + file,
        "sisc -v 2 -k 3 " + file,       "avsisc -k 2 " + file,
        "enum-paths -k 50 " + file,     "enum-cycles -k 10 " + file,
    };
    int index = 0;
    for (const std::string& command : commands) {
        std::string out_a = dir + "det_a_" + std::to_string(index) + ".out";
        std::string out_b = dir + "det_b_" + std::to_string(index) + ".out";
        run_cli(command, out_a);
        run_cli(command, out_b);
        std::string a = read_file(out_a);
        EXPECT_FALSE(a.empty()) << command;
        EXPECT_EQ(a, read_file(out_b)) << command;
        ++index;
    }
}
