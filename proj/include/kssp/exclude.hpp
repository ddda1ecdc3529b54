// exclude.hpp - Shortest paths from a source when one shortest-path-tree edge
// is excluded. This is the subroutine behind the Q2 construction: for a set S
// of independent tree edges, it reports per edge e the shortest s->v distance
// in G - {e} for every v.
//
// The reference implementation reruns Dijkstra on G - {e} for each edge; the
// contract is the input/output specification only, so a faster variant can be
// substituted as long as the two agree exactly.

#ifndef KSSP_EXCLUDE_HPP
#define KSSP_EXCLUDE_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "kssp/dijkstra.hpp"
#include "kssp/graph.hpp"

namespace kssp {

namespace detail {

// The tree vertex whose parent edge is e; throws if e is not a tree edge.
inline VertexId tree_edge_head(const Graph& g, const ShortestPathTree& t, EdgeId e) {
    const Edge& edge = g.edge(e);
    if (edge.head <= g.vertex_count() && t.parent_edge[edge.head] == e) return edge.head;
    if (!g.directed() && t.parent_edge[edge.tail] == e) return edge.tail;
    throw std::invalid_argument("edge is not part of the shortest-path tree");
}

}  // namespace detail

// True iff the subtrees hanging below the heads of the given tree edges are
// pairwise vertex-disjoint.
inline bool check_independent(const Graph& g, const ShortestPathTree& t,
                              std::span<const EdgeId> edges) {
    const std::uint32_t n = g.vertex_count();
    std::vector<VertexId> heads;
    heads.reserve(edges.size());
    for (EdgeId e : edges) heads.push_back(detail::tree_edge_head(g, t, e));

    // Euler in/out times over the tree; subtree(v1) and subtree(v2) intersect
    // exactly when one head is an ancestor (or equal) of the other.
    std::vector<std::vector<VertexId>> children(n + 1);
    for (VertexId v = 1; v <= n; ++v)
        if (t.parent[v] != kNoVertex) children[t.parent[v]].push_back(v);
    std::vector<std::uint32_t> tin(n + 1, 0), tout(n + 1, 0);
    std::uint32_t clock = 0;
    std::vector<std::pair<VertexId, std::size_t>> stack{{t.source, 0}};
    tin[t.source] = ++clock;
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        if (idx < children[v].size()) {
            VertexId c = children[v][idx++];
            tin[c] = ++clock;
            stack.push_back({c, 0});
        } else {
            tout[v] = ++clock;
            stack.pop_back();
        }
    }

    auto within = [&](VertexId anc, VertexId v) {
        return tin[anc] <= tin[v] && tout[v] <= tout[anc];
    };
    for (std::size_t i = 0; i < heads.size(); ++i)
        for (std::size_t j = i + 1; j < heads.size(); ++j)
            if (within(heads[i], heads[j]) || within(heads[j], heads[i])) return false;
    return true;
}

struct ExcludeResult {
    VertexId source = 0;
    std::vector<EdgeId> edges;
    std::vector<ShortestPathTree> trees;  // trees[i] is the SSSP tree of G - {edges[i]}

    const ShortestPathTree& tree_for(EdgeId e) const {
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i] == e) return trees[i];
        throw std::invalid_argument("edge was not excluded");
    }
};

inline ExcludeResult exclude_shortest_paths(const Graph& g, VertexId s,
                                            const ShortestPathTree& t,
                                            std::span<const EdgeId> independent_edges) {
    if (t.source != s) throw std::invalid_argument("tree source does not match");
    if (!check_independent(g, t, independent_edges))
        throw std::invalid_argument("edge set is not independent in the tree");
    ExcludeResult result;
    result.source = s;
    for (EdgeId e : independent_edges) {
        result.edges.push_back(e);
        result.trees.push_back(sssp_excluding(g, s, std::span<const EdgeId>(&e, 1)));
    }
    return result;
}

}  // namespace kssp

#endif  // KSSP_EXCLUDE_HPP
