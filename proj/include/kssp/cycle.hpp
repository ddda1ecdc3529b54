// cycle.hpp - Canonical simple-cycle value type shared by the cycle solvers
// and the brute-force oracles.

#ifndef KSSP_CYCLE_HPP
#define KSSP_CYCLE_HPP

#include <algorithm>
#include <vector>

#include "kssp/graph.hpp"

namespace kssp {

// A simple cycle in canonical form: the vertex sequence starts at the
// minimum-labelled vertex and the closing edge back to it is implicit.
// weight.len equals the number of edges (= number of vertices).
struct Cycle {
    std::vector<VertexId> vertices;
    PathWeight weight;

    friend bool operator==(const Cycle&, const Cycle&) = default;
};

inline bool cycle_less(const Cycle& a, const Cycle& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(),
                                        b.vertices.begin(), b.vertices.end());
}

// Rotates so the minimum vertex comes first, preserving direction.
inline std::vector<VertexId> canonical_rotation(std::vector<VertexId> seq) {
    auto min_it = std::min_element(seq.begin(), seq.end());
    std::rotate(seq.begin(), min_it, seq.end());
    return seq;
}

// Undirected canonical form: minimum vertex first, and of the two traversal
// directions the lexicographically smaller one.
inline std::vector<VertexId> canonical_undirected(std::vector<VertexId> seq) {
    std::vector<VertexId> fwd = canonical_rotation(seq);
    std::reverse(seq.begin(), seq.end());
    std::vector<VertexId> rev = canonical_rotation(std::move(seq));
    return std::lexicographical_compare(rev.begin(), rev.end(), fwd.begin(), fwd.end()) ? rev
                                                                                        : fwd;
}

}  // namespace kssp

#endif  // KSSP_CYCLE_HPP
