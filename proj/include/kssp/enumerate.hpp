// enumerate.hpp - Global enumeration in nondecreasing weight order: all
// simple paths via left/right extension sets, and all simple cycles via an
// array slot per minimum cycle vertex.

#ifndef KSSP_ENUMERATE_HPP
#define KSSP_ENUMERATE_HPP

#include <optional>
#include <queue>
#include <unordered_set>
#include <vector>

#include "kssp/cycles.hpp"
#include "kssp/dijkstra.hpp"
#include "kssp/graph.hpp"
#include "kssp/path_store.hpp"
#include "kssp/transform.hpp"

namespace kssp {

// Resumable enumeration of every simple path (>= 1 edge) in nondecreasing
// (weight, length, lex) order.
//
// The queue starts with all single-edge paths. Extracting pi with first edge
// (x,a) and last edge (b,y) forms the left extensions (x',x) o pi for each
// known path (x',..,b) in L(l(pi)) with x' != y, and symmetrically the right
// extensions; L(pi)/R(pi) record the one-edge prepends/appends of pi seen so
// far. The same path can be constructed from either subpath's extraction, so
// a seen-set keyed by (left subpath record, last edge) filters insertions.
class AllSispCursor {
public:
    explicit AllSispCursor(const Graph& g) : store_(g) {
        const Graph& gr = store_.graph();
        const std::uint32_t n = gr.vertex_count();
        trivial_.assign(n + 1, kNoPath);
        for (VertexId v = 1; v <= n; ++v) trivial_[v] = store_.trivial(v);
        std::vector<Item> seed;
        for (VertexId v = 1; v <= n; ++v) {
            for (const Graph::Arc& a : gr.out_arcs(v)) {
                PathId p = store_.edge_path(v, a.to, a.edge);
                seen_.insert(dedup_key(trivial_[v], a.edge));
                seed.push_back({store_.rec(p).weight, p});
            }
        }
        left_of_.resize(store_.size());
        right_of_.resize(store_.size());
        for (const Item& item : seed) {
            const PathRec& r = store_.rec(item.id);
            left_of_[trivial_[r.last]].push_back(item.id);
            right_of_[trivial_[r.first]].push_back(item.id);
        }
        // One heapify instead of m pushes keeps the startup cost linear.
        heap_ = decltype(heap_)(ItemCmp{&store_}, std::move(seed));
    }

    AllSispCursor(const AllSispCursor&) = delete;
    AllSispCursor& operator=(const AllSispCursor&) = delete;

    // Next path, or nullopt when the graph is exhausted.
    std::optional<VertexPath> next() {
        if (heap_.empty()) return std::nullopt;
        Item item = top_pop();
        const PathRec rec = store_.rec(item.id);
        std::vector<VertexId> seq = store_.materialize(item.id);
        check_emission(seq, item.weight);

        const VertexId x = rec.first, y = rec.last;
        PathId left_sub = rec.weight.len == 1 ? trivial_[x] : rec.left;
        PathId right_sub = rec.weight.len == 1 ? trivial_[y] : rec.right;

        // Copies: the extension tables grow while new records are formed.
        std::vector<PathId> prepends = left_of_[left_sub];
        std::vector<PathId> appends = right_of_[right_sub];
        for (PathId prepend : prepends) {
            const PathRec& pr = store_.rec(prepend);
            if (pr.first == y) continue;
            if (!seen_.insert(dedup_key(prepend, rec.last_edge)).second) continue;
            PathId np = store_.extend_left(pr.first, pr.first_edge, item.id, prepend);
            grow_and_push(np);
            left_of_[item.id].push_back(np);
            right_of_[prepend].push_back(np);
        }
        for (PathId append : appends) {
            const PathRec& ar = store_.rec(append);
            if (ar.last == x) continue;
            if (!seen_.insert(dedup_key(item.id, ar.last_edge)).second) continue;
            PathId np = store_.extend_right(item.id, ar.last_edge, ar.last, append);
            grow_and_push(np);
            right_of_[item.id].push_back(np);
            left_of_[append].push_back(np);
        }
        return VertexPath{std::move(seq), item.weight};
    }

    // Inspection hooks for the extension-set size invariants.
    std::size_t record_count() const { return store_.size(); }
    const PathStore& store() const { return store_; }
    PathId trivial_id(VertexId v) const { return trivial_[v]; }
    const std::vector<PathId>& left_set(PathId p) const { return left_of_[p]; }
    const std::vector<PathId>& right_set(PathId p) const { return right_of_[p]; }

private:
    struct Item {
        PathWeight weight;
        PathId id;
    };
    struct ItemCmp {
        const PathStore* store;
        bool operator()(const Item& a, const Item& b) const {
            if (a.weight != b.weight) return a.weight > b.weight;
            return store->lex_less(b.id, a.id);
        }
    };

    static std::uint64_t dedup_key(PathId left_subpath, EdgeId last_edge) {
        return (static_cast<std::uint64_t>(left_subpath) << 32) | last_edge;
    }

    Item top_pop() {
        Item item = heap_.top();
        heap_.pop();
        return item;
    }

    void grow_and_push(PathId p) {
        left_of_.resize(store_.size());
        right_of_.resize(store_.size());
        heap_.push({store_.rec(p).weight, p});
    }

    void check_emission(const std::vector<VertexId>& seq, PathWeight w) {
        std::vector<VertexId> sorted = seq;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::logic_error("enumeration produced a non-simple path");
        if (last_weight_ && w < *last_weight_)
            throw std::logic_error("enumeration weights decreased");
        last_weight_ = w;
    }

    PathStore store_;
    std::vector<PathId> trivial_;
    std::vector<std::vector<PathId>> left_of_;
    std::vector<std::vector<PathId>> right_of_;
    std::unordered_set<std::uint64_t> seen_;
    std::priority_queue<Item, std::vector<Item>, ItemCmp> heap_{ItemCmp{&store_}};
    std::optional<PathWeight> last_weight_;
};

inline std::vector<VertexPath> all_sisp(const Graph& g, std::size_t limit) {
    AllSispCursor cursor(g);
    std::vector<VertexPath> out;
    while (out.size() < limit) {
        auto p = cursor.next();
        if (!p) break;
        out.push_back(std::move(*p));
    }
    return out;
}

// Resumable enumeration of every simple cycle of a directed graph in
// nondecreasing (weight, length, lex) order.
//
// Array slot j tracks the cycles whose minimum vertex is j, i.e. the cycles
// of the subgraph induced on {x >= j} that pass through j. Slots are seeded
// with one Dijkstra from j_out to j_in on the induced split graph; each
// emission takes the globally minimal slot, emits its (k_j+1)-th cycle via
// the k-SiSC solver on the induced subgraph, and advances the slot.
class AllSiscCursor {
public:
    explicit AllSiscCursor(const Graph& g) {
        if (!g.directed())
            throw std::invalid_argument("cycle enumeration: directed graphs only");
        const std::uint32_t n = g.vertex_count();
        SplitAllResult sa = split_all(g);
        slots_.reserve(n);
        for (VertexId j = 1; j <= n; ++j) {
            Slot slot;
            slot.vertex = j;
            slot.induced = induce_min_label(g, j);
            std::vector<VertexId> kept;
            for (VertexId v = j; v <= n; ++v) {
                kept.push_back(sa.out_vertex[v]);
                kept.push_back(sa.in_vertex[v]);
            }
            InducedSubgraph split_part = induce(sa.graph, std::move(kept));
            ShortestPathTree tree =
                sssp(split_part.graph, split_part.map_from(sa.out_vertex[j]));
            VertexId target = split_part.map_from(sa.in_vertex[j]);
            if (tree.reachable(target)) {
                std::uint32_t cycle_len = 0;
                for (VertexId v : tree.path_to(target))
                    if (sa.is_out_copy(split_part.map_to(v))) ++cycle_len;
                slot.next_weight = {tree.dist[target].wt, cycle_len};
            } else {
                slot.exhausted = true;
            }
            slots_.push_back(std::move(slot));
        }
    }

    std::optional<Cycle> next() {
        Slot* best = nullptr;
        for (Slot& slot : slots_) {
            if (slot.exhausted) continue;
            if (!best || slot.next_weight < best->next_weight) best = &slot;
        }
        if (!best) return std::nullopt;

        // Recompute the slot's (k+1)-SiSC from scratch, fetching one extra
        // entry to learn the weight of the following candidate.
        CycleSet set = k_sisc(best->induced.graph, best->induced.map_from(best->vertex),
                              best->emitted + 2);
        if (set.cycles.size() <= best->emitted)
            throw std::logic_error("cycle slot lost a previously seen cycle");
        Cycle cycle = set.cycles[best->emitted];
        for (VertexId& v : cycle.vertices) v = best->induced.map_to(v);
        if (cycle.weight != best->next_weight)
            throw std::logic_error("cycle slot weight drifted from its seed");

        ++best->emitted;
        if (set.cycles.size() > best->emitted)
            best->next_weight = set.cycles[best->emitted].weight;
        else
            best->exhausted = true;

        if (last_weight_ && cycle.weight < *last_weight_)
            throw std::logic_error("cycle enumeration weights decreased");
        last_weight_ = cycle.weight;
        return cycle;
    }

private:
    struct Slot {
        VertexId vertex = 0;
        InducedSubgraph induced;  // original graph on {x >= vertex}
        PathWeight next_weight;
        std::uint32_t emitted = 0;
        bool exhausted = false;
    };

    std::vector<Slot> slots_;
    std::optional<PathWeight> last_weight_;
};

inline std::vector<Cycle> all_sisc(const Graph& g, std::size_t limit) {
    AllSiscCursor cursor(g);
    std::vector<Cycle> out;
    while (out.size() < limit) {
        auto c = cursor.next();
        if (!c) break;
        out.push_back(std::move(*c));
    }
    return out;
}

}  // namespace kssp

#endif  // KSSP_ENUMERATE_HPP
