// oracles.hpp - Ground-truth solvers: exhaustive enumeration of simple paths
// and cycles, Yen's k shortest simple paths, and minimum-weight cycle.
//
// brute_paths and brute_cycles are deliberately plain recursive DFS with a
// visited mask and no priority queues; they share no shortest-path machinery
// with the main algorithm modules. Yen's algorithm doubles as the k-SiSP
// solver used by the cycle modules, with full (weight, length, lexicographic)
// tie order so that enumeration output is reproducible.

#ifndef KSSP_ORACLES_HPP
#define KSSP_ORACLES_HPP

#include <optional>
#include <queue>
#include <set>
#include <unordered_set>
#include <vector>

#include "kssp/cycle.hpp"
#include "kssp/dijkstra.hpp"
#include "kssp/graph.hpp"
#include "kssp/transform.hpp"

namespace kssp::oracles {

inline constexpr std::uint32_t kDefaultOracleLimit = 12;

namespace detail {

inline void check_oracle_size(const Graph& g, std::uint32_t limit) {
    if (g.vertex_count() > limit)
        throw std::invalid_argument("oracle refuses graphs above its size limit");
}

struct PathLess {
    bool operator()(const VertexPath& a, const VertexPath& b) const { return path_less(a, b); }
};

// Dijkstra returning the (weight, length, lex) minimal simple path from s to
// t, avoiding banned edges and vertices. Queue items carry their full vertex
// sequence so that ties settle lexicographically.
inline std::optional<VertexPath> lex_dijkstra(const Graph& g, VertexId s, VertexId t,
                                              const std::unordered_set<EdgeId>& banned_edges,
                                              const std::vector<char>& banned_vertex) {
    struct Item {
        PathWeight w;
        std::vector<VertexId> seq;
        bool operator>(const Item& o) const {
            if (w != o.w) return w > o.w;
            return o.seq < seq;
        }
    };
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    std::vector<char> settled(g.vertex_count() + 1, 0);
    if (banned_vertex[s] || banned_vertex[t]) return std::nullopt;
    queue.push({{0, 0}, {s}});
    while (!queue.empty()) {
        Item item = queue.top();
        queue.pop();
        VertexId u = item.seq.back();
        if (settled[u]) continue;
        settled[u] = 1;
        if (u == t) return VertexPath{std::move(item.seq), item.w};
        for (const Graph::Arc& a : g.out_arcs(u)) {
            if (settled[a.to] || banned_vertex[a.to] || banned_edges.count(a.edge)) continue;
            Item next{item.w.extended(a.weight), item.seq};
            next.seq.push_back(a.to);
            queue.push(std::move(next));
        }
    }
    return std::nullopt;
}

}  // namespace detail

// All simple s->t paths by exhaustive DFS, sorted by (weight, length, lex);
// the first k are returned. Paths have at least one edge, so s == t yields
// nothing.
inline std::vector<VertexPath> brute_paths(const Graph& g, VertexId s, VertexId t, std::size_t k,
                                           std::uint32_t oracle_limit = kDefaultOracleLimit) {
    detail::check_oracle_size(g, oracle_limit);
    std::vector<VertexPath> all;
    if (s == t) return all;
    std::vector<char> visited(g.vertex_count() + 1, 0);
    std::vector<VertexId> stack{s};
    PathWeight weight{0, 0};

    auto dfs = [&](auto&& self, VertexId u) -> void {
        if (u == t) {
            all.push_back({stack, weight});
            return;
        }
        visited[u] = 1;
        for (const Graph::Arc& a : g.out_arcs(u)) {
            if (visited[a.to]) continue;
            stack.push_back(a.to);
            PathWeight saved = weight;
            weight = weight.extended(a.weight);
            self(self, a.to);
            weight = saved;
            stack.pop_back();
        }
        visited[u] = 0;
    };
    dfs(dfs, s);
    std::sort(all.begin(), all.end(), path_less);
    if (all.size() > k) all.resize(k);
    return all;
}

// All simple cycles, canonical form, sorted by (weight, length, lex). For
// directed graphs a cycle has >= 2 vertices; for undirected graphs >= 3
// distinct vertices, so the bidirected u-v-u artifacts are excluded.
inline std::vector<Cycle> brute_cycles(const Graph& g, std::size_t k,
                                       std::optional<VertexId> through = std::nullopt,
                                       std::uint32_t oracle_limit = kDefaultOracleLimit) {
    detail::check_oracle_size(g, oracle_limit);
    std::set<std::vector<VertexId>> seen;
    std::vector<Cycle> all;
    std::vector<char> visited(g.vertex_count() + 1, 0);
    std::vector<VertexId> stack;
    PathWeight weight{0, 0};

    // Roots cycles at their minimum vertex: the DFS from root r only visits
    // vertices > r and records a cycle whenever an arc closes back to r.
    for (VertexId root = 1; root <= g.vertex_count(); ++root) {
        stack.assign(1, root);
        weight = {0, 0};
        auto dfs = [&](auto&& self, VertexId u) -> void {
            visited[u] = 1;
            for (const Graph::Arc& a : g.out_arcs(u)) {
                if (a.to == root) {
                    std::size_t min_vertices = g.directed() ? 2 : 3;
                    if (stack.size() < min_vertices) continue;
                    std::vector<VertexId> canon =
                        g.directed() ? stack : canonical_undirected(stack);
                    if (seen.insert(canon).second)
                        all.push_back({std::move(canon), weight.extended(a.weight)});
                    continue;
                }
                if (a.to < root || visited[a.to]) continue;
                stack.push_back(a.to);
                PathWeight saved = weight;
                weight = weight.extended(a.weight);
                self(self, a.to);
                weight = saved;
                stack.pop_back();
            }
            visited[u] = 0;
        };
        dfs(dfs, root);
    }

    if (through) {
        std::erase_if(all, [&](const Cycle& c) {
            return std::find(c.vertices.begin(), c.vertices.end(), *through) == c.vertices.end();
        });
    }
    std::sort(all.begin(), all.end(), cycle_less);
    if (all.size() > k) all.resize(k);
    return all;
}

// Yen's algorithm: the k simple shortest s->t paths in (weight, length, lex)
// order. Works on directed graphs and on undirected graphs through their
// bidirected adjacency.
inline std::vector<VertexPath> yen(const Graph& g, VertexId s, VertexId t, std::size_t k) {
    std::vector<VertexPath> found;
    if (k == 0 || s == t || s < 1 || s > g.vertex_count() || t < 1 || t > g.vertex_count())
        return found;

    std::vector<char> no_banned_vertex(g.vertex_count() + 1, 0);
    auto first = detail::lex_dijkstra(g, s, t, {}, no_banned_vertex);
    if (!first) return found;
    found.push_back(std::move(*first));

    std::set<VertexPath, detail::PathLess> candidates;
    while (found.size() < k) {
        const VertexPath& prev = found.back();
        std::vector<char> banned_vertex(g.vertex_count() + 1, 0);
        PathWeight root_weight{0, 0};
        for (std::size_t spur = 0; spur + 1 < prev.vertices.size(); ++spur) {
            VertexId spur_vertex = prev.vertices[spur];
            // Ban the next edge of every found path sharing this root.
            std::unordered_set<EdgeId> banned_edges;
            for (const VertexPath& p : found) {
                if (p.vertices.size() <= spur + 1) continue;
                if (!std::equal(prev.vertices.begin(), prev.vertices.begin() + spur + 1,
                                p.vertices.begin()))
                    continue;
                if (auto e = g.find_arc(p.vertices[spur], p.vertices[spur + 1]))
                    banned_edges.insert(*e);
            }
            auto spur_path = detail::lex_dijkstra(g, spur_vertex, t, banned_edges, banned_vertex);
            if (spur_path) {
                VertexPath candidate;
                candidate.vertices.assign(prev.vertices.begin(), prev.vertices.begin() + spur);
                candidate.vertices.insert(candidate.vertices.end(), spur_path->vertices.begin(),
                                          spur_path->vertices.end());
                candidate.weight = {root_weight.wt + spur_path->weight.wt,
                                    root_weight.len + spur_path->weight.len};
                candidates.insert(std::move(candidate));
            }
            banned_vertex[spur_vertex] = 1;
            auto e = g.find_arc(spur_vertex, prev.vertices[spur + 1]);
            root_weight = root_weight.extended(g.edge(*e).weight);
        }
        if (candidates.empty()) break;
        found.push_back(*candidates.begin());
        candidates.erase(candidates.begin());
    }
    return found;
}

// Minimum weight cycle: exhaustive below the oracle limit, otherwise (for
// directed graphs) the minimum over per-vertex split + Dijkstra.
inline std::optional<Cycle> min_weight_cycle(const Graph& g,
                                             std::uint32_t oracle_limit = kDefaultOracleLimit) {
    if (g.vertex_count() <= oracle_limit) {
        auto cycles = brute_cycles(g, 1, std::nullopt, oracle_limit);
        if (cycles.empty()) return std::nullopt;
        return cycles.front();
    }
    if (!g.directed())
        throw std::invalid_argument("min_weight_cycle: undirected graphs above the oracle limit");
    std::optional<Cycle> best;
    for (VertexId z = 1; z <= g.vertex_count(); ++z) {
        SplitVertexResult sv = split_vertex(g, z);
        ShortestPathTree tree = sssp(sv.graph, sv.z_out);
        if (!tree.reachable(sv.z_in)) continue;
        std::vector<VertexId> seq = tree.path_to(sv.z_in);
        seq.pop_back();  // drop z_in; the closing edge is implicit
        Cycle cand{canonical_rotation(std::move(seq)), tree.dist[sv.z_in]};
        if (!best || cycle_less(cand, *best)) best = std::move(cand);
    }
    return best;
}

}  // namespace kssp::oracles

#endif  // KSSP_ORACLES_HPP
