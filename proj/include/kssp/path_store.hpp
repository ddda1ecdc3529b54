// path_store.hpp - Persistent simple-path records built by single-edge
// extension. A record keeps pointers to the subpaths obtained by dropping
// its last edge (left subpath) or its first edge (right subpath); vertex
// sequences are materialized only when needed.

#ifndef KSSP_PATH_STORE_HPP
#define KSSP_PATH_STORE_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "kssp/graph.hpp"

namespace kssp {

using PathId = std::uint32_t;
inline constexpr PathId kNoPath = std::numeric_limits<PathId>::max();

struct PathRec {
    VertexId first = 0;
    VertexId last = 0;
    EdgeId first_edge = kNoEdge;  // kNoEdge for trivial single-vertex paths
    EdgeId last_edge = kNoEdge;
    PathWeight weight;
    PathId left = kNoPath;   // record for the path minus its last edge
    PathId right = kNoPath;  // record for the path minus its first edge
};

class PathStore {
public:
    // Takes its own copy of the graph so that tables of records remain
    // self-contained when built against temporary graphs.
    explicit PathStore(Graph g) : graph_(std::move(g)) {}

    const Graph& graph() const { return graph_; }
    const PathRec& rec(PathId id) const { return recs_[id]; }
    std::size_t size() const { return recs_.size(); }

    PathId trivial(VertexId v) {
        return push({v, v, kNoEdge, kNoEdge, {0, 0}, kNoPath, kNoPath});
    }

    PathId edge_path(VertexId from, VertexId to, EdgeId e) {
        return push({from, to, e, e, {graph_.edge(e).weight, 1}, kNoPath, kNoPath});
    }

    // (new_first, first(p)) o p. The right subpath is p; the left subpath,
    // if known to the caller, can be recorded for lazy traversal.
    PathId extend_left(VertexId new_first, EdgeId e, PathId p, PathId left = kNoPath) {
        const PathRec& r = recs_[p];
        return push({new_first, r.last, e, r.last_edge == kNoEdge ? e : r.last_edge,
                     r.weight.extended(graph_.edge(e).weight), left, p});
    }

    // p o (last(p), new_last).
    PathId extend_right(PathId p, EdgeId e, VertexId new_last, PathId right = kNoPath) {
        const PathRec& r = recs_[p];
        return push({r.first, new_last, r.first_edge == kNoEdge ? e : r.first_edge, e,
                     r.weight.extended(graph_.edge(e).weight), p, right});
    }

    // Builds a record chain for an explicit vertex sequence; every
    // consecutive pair must be a traversable arc.
    PathId import_sequence(std::span<const VertexId> seq) {
        if (seq.empty()) throw std::invalid_argument("import_sequence: empty");
        if (seq.size() == 1) return trivial(seq[0]);
        PathId cur = kNoPath;
        for (std::size_t i = 1; i < seq.size(); ++i) {
            auto e = graph_.find_arc(seq[i - 1], seq[i]);
            if (!e) throw std::invalid_argument("import_sequence: missing arc");
            cur = i == 1 ? edge_path(seq[0], seq[1], *e) : extend_right(cur, *e, seq[i]);
        }
        return cur;
    }

    void materialize(PathId id, std::vector<VertexId>& out) const {
        out.clear();
        append_sequence(id, out);
    }

    std::vector<VertexId> materialize(PathId id) const {
        std::vector<VertexId> out;
        append_sequence(id, out);
        return out;
    }

    VertexPath output(PathId id) const { return {materialize(id), recs_[id].weight}; }

    bool is_simple(PathId id) const {
        std::vector<VertexId> seq = materialize(id);
        std::sort(seq.begin(), seq.end());
        return std::adjacent_find(seq.begin(), seq.end()) == seq.end();
    }

    // Lexicographic comparison of the two vertex sequences.
    bool lex_less(PathId a, PathId b) const {
        std::vector<VertexId> sa = materialize(a);
        std::vector<VertexId> sb = materialize(b);
        return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
    }

private:
    PathId push(PathRec r) {
        recs_.push_back(r);
        return static_cast<PathId>(recs_.size() - 1);
    }

    void append_sequence(PathId id, std::vector<VertexId>& out) const {
        const PathRec& r = recs_[id];
        if (r.first_edge == kNoEdge) {  // trivial
            out.push_back(r.first);
        } else if (r.weight.len == 1) {
            out.push_back(r.first);
            out.push_back(r.last);
        } else if (r.right != kNoPath) {
            out.push_back(r.first);
            append_sequence(r.right, out);
        } else if (r.left != kNoPath) {
            append_sequence(r.left, out);
            out.push_back(r.last);
        } else {
            throw std::logic_error("path record with no subpath pointer");
        }
    }

    Graph graph_;
    std::vector<PathRec> recs_;
};

}  // namespace kssp

#endif  // KSSP_PATH_STORE_HPP
