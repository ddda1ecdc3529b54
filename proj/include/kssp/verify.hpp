// verify.hpp - Seeded randomized self-verification: every main module is
// checked against the brute-force oracles on small random graphs. Each seed
// is an independent, reproducible check.

#ifndef KSSP_VERIFY_HPP
#define KSSP_VERIFY_HPP

#include <optional>
#include <sstream>
#include <string>

#include "kssp/apsisp.hpp"
#include "kssp/cycles.hpp"
#include "kssp/enumerate.hpp"
#include "kssp/oracles.hpp"
#include "kssp/random_graph.hpp"
#include "kssp/reductions.hpp"

namespace kssp {

enum class VerifySuite { apsisp, q2, allsisp, allsisc, cycles, gadgets, all };

inline std::optional<VerifySuite> parse_suite(std::string_view name) {
    if (name == "apsisp") return VerifySuite::apsisp;
    if (name == "q2") return VerifySuite::q2;
    if (name == "allsisp") return VerifySuite::allsisp;
    if (name == "allsisc") return VerifySuite::allsisc;
    if (name == "cycles") return VerifySuite::cycles;
    if (name == "gadgets") return VerifySuite::gadgets;
    if (name == "all") return VerifySuite::all;
    return std::nullopt;
}

struct VerifyFailure {
    std::uint64_t seed = 0;
    std::string suite;
    std::string message;
    std::string graph;  // serialized failing instance
};

namespace verify_detail {

inline std::string describe(PathWeight w) {
    if (w.is_infinite()) return "inf";
    return "(" + std::to_string(w.wt) + "," + std::to_string(w.len) + ")";
}

inline std::optional<std::string> compare_weights(const std::vector<PathWeight>& got,
                                                  const std::vector<PathWeight>& want,
                                                  const std::string& label) {
    if (got == want) return std::nullopt;
    std::ostringstream os;
    os << label << ": got {";
    for (PathWeight w : got) os << describe(w) << " ";
    os << "} want {";
    for (PathWeight w : want) os << describe(w) << " ";
    os << "}";
    return os.str();
}

inline std::vector<PathWeight> weights_of(const std::vector<VertexPath>& paths) {
    std::vector<PathWeight> w;
    for (const auto& p : paths) w.push_back(p.weight);
    return w;
}

inline std::vector<PathWeight> weights_of(const std::vector<Cycle>& cycles) {
    std::vector<PathWeight> w;
    for (const auto& c : cycles) w.push_back(c.weight);
    return w;
}

// k-APSiSP against brute force, k = 2..4, all ordered pairs.
inline std::optional<std::string> check_apsisp(const Graph& g) {
    for (std::uint32_t k = 2; k <= 4; ++k) {
        ApsispStats stats;
        PathTable table = apsisp(g, k, {}, &stats);
        for (VertexId x = 1; x <= g.vertex_count(); ++x) {
            for (VertexId y = 1; y <= g.vertex_count(); ++y) {
                if (x == y) continue;
                auto got = table.pair_weights(x, y);
                std::sort(got.begin(), got.end());
                auto want = weights_of(oracles::brute_paths(g, x, y, k));
                if (auto err = compare_weights(got, want,
                                               "apsisp k=" + std::to_string(k) + " pair " +
                                                   std::to_string(x) + "->" + std::to_string(y)))
                    return err;
            }
        }
    }
    return std::nullopt;
}

// Q2 second entries against direct per-edge-removal recomputation.
inline std::optional<std::string> check_q2(const Graph& g) {
    PathTable q = compute_q2(g);
    for (VertexId x = 1; x <= g.vertex_count(); ++x) {
        ShortestPathTree tree = sssp(g, x);
        for (VertexId y = 1; y <= g.vertex_count(); ++y) {
            if (x == y) continue;
            const PathSet& set = q.at(x, y);
            if (!tree.reachable(y)) {
                if (!set.empty()) return "Q2 nonempty for unreachable pair";
                continue;
            }
            if (set.empty() || q.store().rec(set.paths[0]).weight != tree.dist[y])
                return "Q2 first entry is not the SSSP distance for " + std::to_string(x) +
                       "->" + std::to_string(y);
            std::vector<VertexId> seq = tree.path_to(y);
            EdgeId first = tree.parent_edge[seq[1]];
            ShortestPathTree without = sssp_excluding(g, x, std::span<const EdgeId>(&first, 1));
            if (without.reachable(y)) {
                if (set.size() != 2 || q.store().rec(set.paths[1]).weight != without.dist[y])
                    return "Q2 second entry mismatch for " + std::to_string(x) + "->" +
                           std::to_string(y);
            } else if (set.size() != 1) {
                return "Q2 second entry should be absent for " + std::to_string(x) + "->" +
                       std::to_string(y);
            }
        }
    }
    return std::nullopt;
}

// Full path enumeration equals brute force over all pairs, globally sorted.
inline std::optional<std::string> check_allsisp(const Graph& g) {
    std::vector<VertexPath> want;
    for (VertexId x = 1; x <= g.vertex_count(); ++x)
        for (VertexId y = 1; y <= g.vertex_count(); ++y) {
            if (x == y) continue;
            auto paths = oracles::brute_paths(g, x, y, std::numeric_limits<std::size_t>::max());
            want.insert(want.end(), paths.begin(), paths.end());
        }
    std::sort(want.begin(), want.end(), path_less);
    std::vector<VertexPath> got = all_sisp(g, want.size() + 1);
    if (got.size() != want.size())
        return "all_sisp emitted " + std::to_string(got.size()) + " paths, want " +
               std::to_string(want.size());
    for (std::size_t i = 0; i < want.size(); ++i)
        if (got[i] != want[i]) return "all_sisp emission differs at rank " + std::to_string(i + 1);
    return std::nullopt;
}

// Full cycle enumeration equals brute force.
inline std::optional<std::string> check_allsisc(const Graph& g) {
    auto want = oracles::brute_cycles(g, std::numeric_limits<std::size_t>::max());
    std::vector<Cycle> got = all_sisc(g, want.size() + 1);
    if (got.size() != want.size())
        return "all_sisc emitted " + std::to_string(got.size()) + " cycles, want " +
               std::to_string(want.size());
    for (std::size_t i = 0; i < want.size(); ++i)
        if (got[i] != want[i]) return "all_sisc emission differs at rank " + std::to_string(i + 1);
    return std::nullopt;
}

inline std::optional<std::string> check_cycles_directed(const Graph& g) {
    for (VertexId z = 1; z <= g.vertex_count(); ++z) {
        for (std::size_t k = 1; k <= 4; ++k) {
            auto got = weights_of(k_sisc(g, z, k).cycles);
            auto want = weights_of(oracles::brute_cycles(g, k, z));
            if (auto err = compare_weights(got, want, "k_sisc z=" + std::to_string(z) +
                                                          " k=" + std::to_string(k)))
                return err;
        }
    }
    for (std::size_t k : {2, 3}) {
        auto sets = k_avsisc(g, k);
        for (VertexId z = 1; z <= g.vertex_count(); ++z) {
            auto got = weights_of(sets[z].cycles);
            auto want = weights_of(oracles::brute_cycles(g, k, z));
            if (auto err = compare_weights(got, want, "k_avsisc z=" + std::to_string(z) +
                                                          " k=" + std::to_string(k)))
                return err;
        }
    }
    return std::nullopt;
}

inline std::optional<std::string> check_cycles_undirected(const Graph& g) {
    for (VertexId z = 1; z <= g.vertex_count(); ++z) {
        for (std::size_t k = 1; k <= 4; ++k) {
            auto got = weights_of(undirected_k_sisc(g, z, k).cycles);
            auto want = weights_of(oracles::brute_cycles(g, k, z));
            if (auto err = compare_weights(got, want, "undirected_k_sisc z=" + std::to_string(z) +
                                                          " k=" + std::to_string(k)))
                return err;
        }
    }
    return std::nullopt;
}

inline std::optional<std::string> check_gadgets(const Graph& g) {
    auto min_cycle = oracles::min_weight_cycle(g);

    // Min-weight cycle via 2-SiSP, solved both by Yen and by two_apsisp.
    MwcTo2SispGadget mwc = gadget_mwc_to_2sisp(g);
    auto by_yen = mwc.decode(oracles::yen(mwc.graph, mwc.source, mwc.target, 2));
    PathTable table = two_apsisp(mwc.graph);
    auto by_table = mwc.decode(table.pair_output(mwc.source, mwc.target));
    for (const auto& decoded : {by_yen, by_table}) {
        if (decoded.acyclic != !min_cycle.has_value())
            return "mwc gadget acyclic flag mismatch";
        if (min_cycle && decoded.min_cycle_weight != min_cycle->weight.wt)
            return "mwc gadget decoded " + std::to_string(decoded.min_cycle_weight) + ", want " +
                   std::to_string(min_cycle->weight.wt);
    }

    // Min-weight cycle as the k-th globally enumerated cycle.
    for (std::uint32_t k : {2, 3}) {
        MwcToKthAllSiscGadget kth = gadget_mwc_to_kth_all_sisc(g, k, 1);
        auto decoded = kth.decode(all_sisc(kth.graph, k));
        if (decoded.acyclic != !min_cycle.has_value())
            return "k-th-all-sisc gadget acyclic flag mismatch";
        if (min_cycle && decoded.min_cycle_weight != min_cycle->weight.wt)
            return "k-th-all-sisc gadget decoded wrong weight";
    }

    // APSP via second SiSP on the hub gadget.
    ApspToSecondApsispGadget apsp = gadget_apsp_to_second_apsisp(g);
    auto dist = apsp.decode(two_apsisp(apsp.graph));
    for (VertexId i = 1; i <= g.vertex_count(); ++i) {
        ShortestPathTree tree = sssp(g, i);
        for (VertexId j = 1; j <= g.vertex_count(); ++j)
            if (i != j && dist[i][j] != tree.dist[j])
                return "apsp gadget distance mismatch at " + std::to_string(i) + "->" +
                       std::to_string(j);
    }

    // k-SiSP through the cycle gadget.
    for (VertexId s = 1; s <= g.vertex_count(); ++s) {
        for (VertexId t = 1; t <= g.vertex_count(); ++t) {
            if (s == t) continue;
            KsispToKsiscGadget sp = gadget_ksisp_to_ksisc(g, s, t);
            auto got = weights_of(sp.decode(k_sisc(sp.graph, sp.cycle_vertex, 3)));
            auto want = weights_of(oracles::brute_paths(g, s, t, 3));
            if (auto err = compare_weights(got, want, "ksisp gadget pair " + std::to_string(s) +
                                                          "->" + std::to_string(t)))
                return err;
        }
    }
    return std::nullopt;
}

}  // namespace verify_detail

// Runs the selected suite(s) for one seed. The instances are reproducible
// functions of the seed: a plain weighted digraph, a zero-weight variant,
// and an undirected companion.
inline std::optional<VerifyFailure> verify_seed(std::uint64_t seed, std::uint32_t max_n,
                                                VerifySuite suite) {
    using namespace verify_detail;
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
    auto pick_n = [&](std::uint32_t cap) {
        std::uint32_t hi = std::min(max_n, cap);
        std::uint32_t lo = std::min<std::uint32_t>(2, hi);
        return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
    };

    RandomGraphParams plain{pick_n(7), 0.4, 1, 10, 0.0, true};
    RandomGraphParams zeroed{pick_n(7), 0.4, 1, 10, 0.2, true};
    RandomGraphParams undirected{pick_n(7), 0.4, 1, 10, 0.0, false};
    RandomGraphParams small_plain{pick_n(6), 0.4, 1, 10, 0.0, true};
    RandomGraphParams small_zero{pick_n(6), 0.4, 1, 10, 0.2, true};

    Graph g_plain = random_graph(plain, seed);
    Graph g_zero = random_graph(zeroed, seed + 1);
    Graph g_undirected = random_graph(undirected, seed + 2);
    Graph g_small = random_graph(small_plain, seed + 3);
    Graph g_small_zero = random_graph(small_zero, seed + 4);

    auto fail = [&](const char* name, const Graph& g, const std::string& message) {
        return VerifyFailure{seed, name, message, serialize_graph(g)};
    };

    bool everything = suite == VerifySuite::all;
    if (everything || suite == VerifySuite::apsisp) {
        for (const Graph* g : {&g_plain, &g_zero}) {
            if (auto err = check_apsisp(*g)) return fail("apsisp", *g, *err);
        }
        if (auto err = check_apsisp(g_undirected)) return fail("apsisp", g_undirected, *err);
    }
    if (everything || suite == VerifySuite::q2) {
        for (const Graph* g : {&g_plain, &g_zero})
            if (auto err = check_q2(*g)) return fail("q2", *g, *err);
    }
    if (everything || suite == VerifySuite::allsisp) {
        for (const Graph* g : {&g_small, &g_small_zero})
            if (auto err = check_allsisp(*g)) return fail("allsisp", *g, *err);
    }
    if (everything || suite == VerifySuite::allsisc) {
        for (const Graph* g : {&g_small, &g_small_zero})
            if (auto err = check_allsisc(*g)) return fail("allsisc", *g, *err);
    }
    if (everything || suite == VerifySuite::cycles) {
        for (const Graph* g : {&g_plain, &g_zero})
            if (auto err = check_cycles_directed(*g)) return fail("cycles", *g, *err);
        if (auto err = check_cycles_undirected(g_undirected))
            return fail("cycles", g_undirected, *err);
    }
    if (everything || suite == VerifySuite::gadgets) {
        for (const Graph* g : {&g_small, &g_small_zero})
            if (auto err = check_gadgets(*g)) return fail("gadgets", *g, *err);
    }
    return std::nullopt;
}

}  // namespace kssp

#endif  // KSSP_VERIFY_HPP
