// reductions.hpp - Executable instance transformations between the cycle and
// path problems, each paired with a decoder that recovers the source
// problem's answer from a solution on the constructed graph. Every
// construction is linear in n + m and asserts that bound.

#ifndef KSSP_REDUCTIONS_HPP
#define KSSP_REDUCTIONS_HPP

#include <optional>
#include <vector>

#include "kssp/apsisp.hpp"
#include "kssp/cycle.hpp"
#include "kssp/cycles.hpp"
#include "kssp/graph.hpp"
#include "kssp/transform.hpp"

namespace kssp {

namespace detail {

inline void check_linear_size(const Graph& built, std::size_t n, std::size_t m) {
    const std::size_t bound = 4 * (n + m) + 4;
    if (built.vertex_count() > bound || built.edge_count() > bound)
        throw std::logic_error("gadget size exceeded its linear bound");
}

inline Weight checked_mul(Weight a, Weight b) {
    if (b != 0 && a > std::numeric_limits<Weight>::max() / b)
        throw std::invalid_argument("gadget weights overflow 64 bits");
    return a * b;
}

}  // namespace detail

// Minimum weight cycle -> 2-SiSP. The all-split graph is flanked by a
// zero-weight path p_0..p_n; connectors of weight (n-j+1)W enter j_out and
// jW leave j_in, with W = n*w_max + 1. The first p_0->p_n path is the zero
// path; the second detours through exactly one s_out ~> s_in segment, so its
// weight is (n+1)W plus the minimum cycle weight. Any detour that returns at
// a later position costs at least (n+2)W, which is the acyclic signature.
struct MwcTo2SispGadget {
    Graph graph;
    VertexId source = 0;  // p_0
    VertexId target = 0;  // p_n
    Weight big_w = 0;
    Weight offset = 0;             // (n+1) * W
    Weight acyclic_threshold = 0;  // (n+2) * W
    std::vector<VertexId> out_vertex, in_vertex, chain_vertex;

    struct Decoded {
        bool acyclic = true;
        Weight min_cycle_weight = 0;
        std::vector<VertexId> cycle;  // canonical witness in original labels
    };

    // Decodes the sorted 2-SiSP answer for (source, target).
    Decoded decode(const std::vector<VertexPath>& two_sisp) const {
        const std::uint32_t n = static_cast<std::uint32_t>(out_vertex.size() - 1);
        if (two_sisp.empty() || two_sisp.front().weight.wt != 0)
            throw std::logic_error("first path is not the zero chain");
        if (two_sisp.size() < 2 || two_sisp[1].weight.wt >= acyclic_threshold) return {};

        Decoded result;
        result.acyclic = false;
        result.min_cycle_weight = two_sisp[1].weight.wt - offset;

        // The witness must leave the chain once and return immediately.
        const std::vector<VertexId>& seq = two_sisp[1].vertices;
        std::size_t lo = 0, hi = seq.size();
        while (lo < seq.size() && seq[lo] > 2 * n) ++lo;
        while (hi > 0 && seq[hi - 1] > 2 * n) --hi;
        if (lo >= hi) throw std::logic_error("second path has no detour segment");
        std::vector<VertexId> inside;
        for (std::size_t i = lo; i < hi; ++i) {
            if (seq[i] > 2 * n) throw std::logic_error("second path detours more than once");
            if (seq[i] <= n) inside.push_back(seq[i]);
        }
        if (seq[lo] > n || seq[hi - 1] <= n || seq[hi - 1] - n != seq[lo])
            throw std::logic_error("detour does not return at its own split vertex");
        result.cycle = canonical_rotation(std::move(inside));
        return result;
    }
};

inline MwcTo2SispGadget gadget_mwc_to_2sisp(const Graph& g) {
    if (!g.directed()) throw std::invalid_argument("gadget_mwc_to_2sisp: directed only");
    if (g.vertex_count() < 1) throw std::invalid_argument("gadget_mwc_to_2sisp: empty graph");
    const std::uint32_t n = g.vertex_count();
    const Weight w_max = g.max_edge_weight();
    const Weight big_w = detail::checked_mul(n, w_max) + 1;
    detail::checked_mul(n + 2, big_w);

    SplitAllResult sa = split_all(g);
    MwcTo2SispGadget gadget;
    gadget.big_w = big_w;
    gadget.offset = (n + 1) * big_w;
    gadget.acyclic_threshold = (n + 2) * big_w;
    gadget.out_vertex = sa.out_vertex;
    gadget.in_vertex = sa.in_vertex;
    gadget.chain_vertex.resize(n + 1);  // p_0..p_n are 2n+1..3n+1
    for (std::uint32_t j = 0; j <= n; ++j) gadget.chain_vertex[j] = 2 * n + 1 + j;

    std::vector<Edge> edges = sa.graph.edges();
    for (std::uint32_t j = 1; j <= n; ++j) {
        edges.push_back({gadget.chain_vertex[j - 1], gadget.chain_vertex[j], 0});
        edges.push_back({gadget.chain_vertex[j - 1], sa.out_vertex[j], (n - j + 1) * big_w});
        edges.push_back({sa.in_vertex[j], gadget.chain_vertex[j], static_cast<Weight>(j) * big_w});
    }
    gadget.graph = Graph::build(3 * n + 1, true, std::move(edges));
    gadget.source = gadget.chain_vertex[0];
    gadget.target = gadget.chain_vertex[n];
    detail::check_linear_size(gadget.graph, n, g.edge_count());
    return gadget;
}

// k-SiSP -> k-SiSC: a fresh vertex z with zero-weight edges t->z and z->s
// turns every simple s->t path into a simple cycle through z of equal weight.
struct KsispToKsiscGadget {
    Graph graph;
    VertexId cycle_vertex = 0;  // z
    VertexId source = 0, target = 0;

    std::vector<VertexPath> decode(const CycleSet& cycles) const {
        std::vector<VertexPath> paths;
        for (const Cycle& c : cycles.cycles) {
            auto z_pos = std::find(c.vertices.begin(), c.vertices.end(), cycle_vertex);
            if (z_pos == c.vertices.end())
                throw std::logic_error("decoded cycle misses the gadget vertex");
            std::vector<VertexId> seq(z_pos + 1, c.vertices.end());
            seq.insert(seq.end(), c.vertices.begin(), z_pos);
            paths.push_back({std::move(seq), {c.weight.wt, c.weight.len - 2}});
        }
        std::sort(paths.begin(), paths.end(), path_less);
        return paths;
    }
};

inline KsispToKsiscGadget gadget_ksisp_to_ksisc(const Graph& g, VertexId s, VertexId t) {
    if (!g.directed()) throw std::invalid_argument("gadget_ksisp_to_ksisc: directed only");
    if (s == t || s < 1 || t < 1 || s > g.vertex_count() || t > g.vertex_count())
        throw std::invalid_argument("gadget_ksisp_to_ksisc: bad endpoints");
    const VertexId z = g.vertex_count() + 1;
    std::vector<Edge> edges = g.edges();
    edges.push_back({t, z, 0});
    edges.push_back({z, s, 0});
    KsispToKsiscGadget gadget{Graph::build(z, true, std::move(edges)), z, s, t};
    detail::check_linear_size(gadget.graph, g.vertex_count(), g.edge_count());
    return gadget;
}

// Minimum weight cycle -> k-th cycle of the global enumeration: k-1 zero
// triangles x -> d_i -> e_i -> x pad the front of the emission, so the k-th
// emitted weight is the minimum cycle weight of g.
struct MwcToKthAllSiscGadget {
    Graph graph;
    std::uint32_t k = 0;
    VertexId attach_vertex = 0;
    std::uint32_t original_n = 0;

    struct Decoded {
        bool acyclic = true;
        Weight min_cycle_weight = 0;
        Cycle witness;  // first emitted cycle that lives in g
    };

    // Takes the first k cycles emitted by the enumeration on the gadget.
    Decoded decode(const std::vector<Cycle>& emitted) const {
        if (emitted.size() < k) return {};
        Decoded result;
        result.acyclic = false;
        result.min_cycle_weight = emitted[k - 1].weight.wt;
        for (std::size_t i = 0; i < k; ++i) {
            bool gadget_cycle = false;
            for (VertexId v : emitted[i].vertices) gadget_cycle |= v > original_n;
            if (!gadget_cycle) {
                result.witness = emitted[i];
                break;
            }
        }
        if (result.witness.vertices.empty() ||
            result.witness.weight.wt != result.min_cycle_weight)
            throw std::logic_error("k-th emitted weight disagrees with the witness cycle");
        return result;
    }
};

inline MwcToKthAllSiscGadget gadget_mwc_to_kth_all_sisc(const Graph& g, std::uint32_t k,
                                                        VertexId x) {
    if (!g.directed()) throw std::invalid_argument("gadget_mwc_to_kth_all_sisc: directed only");
    if (k < 2) throw std::invalid_argument("gadget_mwc_to_kth_all_sisc: k >= 2 required");
    if (x < 1 || x > g.vertex_count())
        throw std::invalid_argument("gadget_mwc_to_kth_all_sisc: bad vertex");
    const std::uint32_t n = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (std::uint32_t i = 1; i < k; ++i) {
        VertexId d = n + 2 * i - 1;
        VertexId e = n + 2 * i;
        edges.push_back({x, d, 0});
        edges.push_back({d, e, 0});
        edges.push_back({e, x, 0});
    }
    MwcToKthAllSiscGadget gadget{Graph::build(n + 2 * (k - 1), true, std::move(edges)), k, x, n};
    detail::check_linear_size(gadget.graph, n, g.edge_count());
    return gadget;
}

// APSP -> second SiSP for all pairs: hub s with zero edges a_i -> s -> b_j
// makes every first path trivial; the second simple a_i -> b_j path is
// forced through a_i -> i ~> j -> b_j, so dist(i,j) is its weight minus 2.
struct ApspToSecondApsispGadget {
    Graph graph;
    VertexId hub = 0;
    std::vector<VertexId> a_vertex, b_vertex;

    // Per-pair distances of the original graph; infinity when unreachable.
    std::vector<std::vector<PathWeight>> decode(const PathTable& table) const {
        const std::uint32_t n = static_cast<std::uint32_t>(a_vertex.size() - 1);
        std::vector<std::vector<PathWeight>> dist(
            n + 1, std::vector<PathWeight>(n + 1, PathWeight::infinity()));
        for (VertexId i = 1; i <= n; ++i) {
            dist[i][i] = {0, 0};
            for (VertexId j = 1; j <= n; ++j) {
                if (i == j) continue;
                std::vector<PathWeight> weights = table.pair_weights(a_vertex[i], b_vertex[j]);
                if (weights.empty() || weights.front() != PathWeight{0, 2})
                    throw std::logic_error("hub path is not the first SiSP");
                if (weights.size() >= 2)
                    dist[i][j] = {weights[1].wt - 2, weights[1].len - 2};
            }
        }
        return dist;
    }
};

inline ApspToSecondApsispGadget gadget_apsp_to_second_apsisp(const Graph& g) {
    if (!g.directed()) throw std::invalid_argument("gadget_apsp_to_second_apsisp: directed only");
    const std::uint32_t n = g.vertex_count();
    ApspToSecondApsispGadget gadget;
    gadget.hub = 3 * n + 1;
    gadget.a_vertex.resize(n + 1);
    gadget.b_vertex.resize(n + 1);
    std::vector<Edge> edges = g.edges();
    for (VertexId i = 1; i <= n; ++i) {
        gadget.a_vertex[i] = n + i;
        gadget.b_vertex[i] = 2 * n + i;
        edges.push_back({gadget.a_vertex[i], gadget.hub, 0});
        edges.push_back({gadget.hub, gadget.b_vertex[i], 0});
        edges.push_back({gadget.a_vertex[i], i, 1});
        edges.push_back({i, gadget.b_vertex[i], 1});
    }
    gadget.graph = Graph::build(3 * n + 1, true, std::move(edges));
    detail::check_linear_size(gadget.graph, n, g.edge_count());
    return gadget;
}

}  // namespace kssp

#endif  // KSSP_REDUCTIONS_HPP
