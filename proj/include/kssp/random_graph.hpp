// random_graph.hpp - Seeded random graph generators for self-verification
// and benchmarks. Everything is a pure function of the seed.

#ifndef KSSP_RANDOM_GRAPH_HPP
#define KSSP_RANDOM_GRAPH_HPP

#include <random>
#include <vector>

#include "kssp/graph.hpp"

namespace kssp {

struct RandomGraphParams {
    std::uint32_t n = 6;
    double edge_prob = 0.4;
    Weight min_weight = 1;
    Weight max_weight = 10;
    double zero_weight_prob = 0.0;  // chance an included edge is re-weighted to 0
    bool directed = true;
};

// Erdos-Renyi over ordered (directed) or unordered (undirected) pairs.
inline Graph random_graph(const RandomGraphParams& params, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution include(params.edge_prob);
    std::bernoulli_distribution zero(params.zero_weight_prob);
    std::uniform_int_distribution<Weight> weight(params.min_weight, params.max_weight);
    std::vector<Edge> edges;
    for (VertexId u = 1; u <= params.n; ++u) {
        for (VertexId v = params.directed ? 1 : u + 1; v <= params.n; ++v) {
            if (u == v) continue;
            if (!include(rng)) continue;
            Weight w = weight(rng);
            if (params.zero_weight_prob > 0 && zero(rng)) w = 0;
            edges.push_back({u, v, w});
        }
    }
    return Graph::build(params.n, params.directed, std::move(edges));
}

// Exactly m distinct edges, uniformly among ordered pairs.
inline Graph random_gnm(std::uint32_t n, std::size_t m, Weight min_weight, Weight max_weight,
                        std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<VertexId> vertex(1, n);
    std::uniform_int_distribution<Weight> weight(min_weight, max_weight);
    std::vector<std::vector<char>> used(n + 1, std::vector<char>(n + 1, 0));
    std::vector<Edge> edges;
    while (edges.size() < m) {
        VertexId u = vertex(rng);
        VertexId v = vertex(rng);
        if (u == v || used[u][v]) continue;
        used[u][v] = 1;
        edges.push_back({u, v, weight(rng)});
    }
    return Graph::build(n, true, std::move(edges));
}

}  // namespace kssp

#endif  // KSSP_RANDOM_GRAPH_HPP
