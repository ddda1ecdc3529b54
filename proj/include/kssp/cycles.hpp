// cycles.hpp - k simple shortest cycles through one vertex (k-SiSC), through
// every vertex (k-AVSiSC), and the undirected bit-split variant.

#ifndef KSSP_CYCLES_HPP
#define KSSP_CYCLES_HPP

#include <set>
#include <vector>

#include "kssp/apsisp.hpp"
#include "kssp/cycle.hpp"
#include "kssp/graph.hpp"
#include "kssp/oracles.hpp"
#include "kssp/transform.hpp"

namespace kssp {

struct CycleSet {
    VertexId anchor = 0;
    std::vector<Cycle> cycles;  // sorted by (weight, length, lex), each through anchor
};

// k-SiSC through z: split z into z_out/z_in and run the k-SiSP solver between
// them; each returned path is a cycle through z of the same weight.
inline CycleSet k_sisc(const Graph& g, VertexId z, std::size_t k) {
    if (!g.directed())
        throw std::invalid_argument("k_sisc: directed graphs only (see undirected_k_sisc)");
    if (z < 1 || z > g.vertex_count()) throw std::invalid_argument("k_sisc: bad vertex");
    SplitVertexResult sv = split_vertex(g, z);
    CycleSet result;
    result.anchor = z;
    for (VertexPath& p : oracles::yen(sv.graph, sv.z_out, sv.z_in, k)) {
        p.vertices.pop_back();  // drop z_in; the closing edge is implicit
        result.cycles.push_back({canonical_rotation(std::move(p.vertices)), p.weight});
    }
    std::sort(result.cycles.begin(), result.cycles.end(), cycle_less);
    return result;
}

namespace detail {

// Path in a split_all graph -> cycle in the original graph: keep the out
// copies (ids <= n), whose labels are the original vertices in cycle order.
inline Cycle split_path_to_cycle(const SplitAllResult& sa, const VertexPath& p) {
    const VertexId n = static_cast<VertexId>(sa.out_vertex.size() - 1);
    std::vector<VertexId> seq;
    for (VertexId v : p.vertices)
        if (v <= n) seq.push_back(v);
    PathWeight w{p.weight.wt, static_cast<std::uint32_t>(seq.size())};
    return {canonical_rotation(std::move(seq)), w};
}

}  // namespace detail

// k-AVSiSC: for k=2, one two_apsisp run on the all-split graph covers every
// vertex at once (CycleSet(x) is decoded from the (x_out, x_in) pair); otherwise
// n independent k_sisc computations. Index 0 of the result is unused.
inline std::vector<CycleSet> k_avsisc(const Graph& g, std::size_t k) {
    if (!g.directed())
        throw std::invalid_argument("k_avsisc: directed graphs only");
    const std::uint32_t n = g.vertex_count();
    std::vector<CycleSet> result(n + 1);
    if (k == 2) {
        SplitAllResult sa = split_all(g);
        PathTable table = two_apsisp(sa.graph);
        for (VertexId x = 1; x <= n; ++x) {
            CycleSet& set = result[x];
            set.anchor = x;
            for (const VertexPath& p : table.pair_output(sa.out_vertex[x], sa.in_vertex[x]))
                set.cycles.push_back(detail::split_path_to_cycle(sa, p));
            std::sort(set.cycles.begin(), set.cycles.end(), cycle_less);
        }
    } else {
        for (VertexId x = 1; x <= n; ++x) result[x] = k_sisc(g, x, k);
    }
    return result;
}

// Undirected k-SiSC through x: ceil(log n) graphs G_i, each replacing x by
// two halves with neighbor y attached by the i-th bit of its label. Any
// cycle through x has two distinct neighbors of x, whose labels differ in
// some bit, so the cycle shows up as an x0->x1 path in at least one G_i.
inline CycleSet undirected_k_sisc(const Graph& g, VertexId x, std::size_t k) {
    if (g.directed())
        throw std::invalid_argument("undirected_k_sisc: undirected graphs only (see k_sisc)");
    if (x < 1 || x > g.vertex_count()) throw std::invalid_argument("undirected_k_sisc: bad vertex");
    const std::uint32_t n = g.vertex_count();
    CycleSet result;
    result.anchor = x;

    std::uint32_t bits = 0;
    while ((1u << bits) < n) ++bits;

    const VertexId x_zero = x;
    const VertexId x_one = n + 1;
    std::set<std::vector<VertexId>> seen;
    for (std::uint32_t i = 0; i < bits; ++i) {
        std::vector<Edge> edges;
        for (const Edge& e : g.edges()) {
            if (e.tail == x || e.head == x) {
                VertexId y = e.tail == x ? e.head : e.tail;
                edges.push_back({((y >> i) & 1) ? x_one : x_zero, y, e.weight});
            } else {
                edges.push_back(e);
            }
        }
        Graph split = Graph::build(n + 1, false, std::move(edges));
        for (VertexPath& p : oracles::yen(split, x_zero, x_one, k)) {
            p.vertices.pop_back();  // the trailing x1 is x again
            std::vector<VertexId> canon = canonical_undirected(std::move(p.vertices));
            if (seen.insert(canon).second) result.cycles.push_back({std::move(canon), p.weight});
        }
    }
    std::sort(result.cycles.begin(), result.cycles.end(), cycle_less);
    if (result.cycles.size() > k) result.cycles.resize(k);
    return result;
}

}  // namespace kssp

#endif  // KSSP_CYCLES_HPP
