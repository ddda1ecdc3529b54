// apsisp.hpp - k simple shortest paths for all vertex pairs via nearly-k-SiSP
// sets and left extensions.
//
// The pipeline: a nearly-k table holds, per ordered pair (x,y), the k
// "nearly" simple shortest paths - the true set except possibly its k-th member,
// which may be the shortest path avoiding the common first edge of the
// first k-1. For k=2 the nearly table comes from one Dijkstra plus one
// independent-edge exclusion pass per source; for k>=3 it is assembled from
// recursive (k-1)-level solutions on the graphs G - I_x (in-edges of x
// removed). compute_apsisp then repairs every k-th entry by popping candidate
// left extensions (x,a) o pi off a priority queue in nondecreasing weight
// order.
//
// Structural bounds from the construction are enforced at runtime: every
// inserted path must be simple, each pair's set is updated at most once,
// queue insertions stay within 2n(n-1), and at most one extension edge is
// registered per pair.

#ifndef KSSP_APSISP_HPP
#define KSSP_APSISP_HPP

#include <memory>
#include <queue>
#include <set>
#include <vector>

#include "kssp/dijkstra.hpp"
#include "kssp/exclude.hpp"
#include "kssp/graph.hpp"
#include "kssp/path_store.hpp"
#include "kssp/transform.hpp"

namespace kssp {

// Paths of one ordered pair, sorted ascending by PathWeight.
struct PathSet {
    std::vector<PathId> paths;

    std::size_t size() const { return paths.size(); }
    bool empty() const { return paths.empty(); }
};

// n x n table of PathSets over one shared PathStore. Serves as both the
// nearly-k table and the final result table.
class PathTable {
public:
    PathTable(std::uint32_t n, std::shared_ptr<PathStore> store)
        : n_(n), store_(std::move(store)), sets_(static_cast<std::size_t>(n + 1) * (n + 1)) {}

    std::uint32_t vertex_count() const { return n_; }
    PathStore& store() { return *store_; }
    const PathStore& store() const { return *store_; }
    std::shared_ptr<PathStore> store_ptr() const { return store_; }

    PathSet& at(VertexId x, VertexId y) { return sets_[index(x, y)]; }
    const PathSet& at(VertexId x, VertexId y) const { return sets_[index(x, y)]; }

    std::vector<PathWeight> pair_weights(VertexId x, VertexId y) const {
        std::vector<PathWeight> w;
        for (PathId p : at(x, y).paths) w.push_back(store_->rec(p).weight);
        return w;
    }

    // Materialized paths in (weight, length, lex) order.
    std::vector<VertexPath> pair_output(VertexId x, VertexId y) const {
        std::vector<VertexPath> out;
        for (PathId p : at(x, y).paths) out.push_back(store_->output(p));
        std::sort(out.begin(), out.end(), path_less);
        return out;
    }

private:
    std::size_t index(VertexId x, VertexId y) const {
        return static_cast<std::size_t>(x) * (n_ + 1) + y;
    }

    std::uint32_t n_;
    std::shared_ptr<PathStore> store_;
    std::vector<PathSet> sets_;
};

struct ApsispStats {
    std::uint64_t extensions_entries = 0;  // <= n(n-1)
    std::uint64_t heap_insertions = 0;     // <= 2n(n-1)
    std::uint64_t pair_updates = 0;
    std::uint32_t max_updates_per_pair = 0;
    std::uint64_t paths_inserted = 0;  // main-loop insertions, all simple
};

struct ApsispOptions {
    std::uint32_t max_k = 5;  // recursion cost grows by a factor n per level
};

// Nearly-2 sets for all pairs: per source x, the Dijkstra tree path plus the shortest
// path avoiding its first edge, found by excluding the out-edges of x in T_x
// (an independent set) in one pass.
inline PathTable compute_q2(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    auto store = std::make_shared<PathStore>(g);
    PathTable q(n, store);
    for (VertexId x = 1; x <= n; ++x) {
        ShortestPathTree tree = sssp(g, x);
        std::vector<EdgeId> root_edges;
        for (VertexId v = 1; v <= n; ++v)
            if (tree.parent[v] == x) root_edges.push_back(tree.parent_edge[v]);
        ExcludeResult excl = exclude_shortest_paths(g, x, tree, root_edges);
        for (VertexId y = 1; y <= n; ++y) {
            if (y == x || !tree.reachable(y)) continue;
            std::vector<VertexId> seq = tree.path_to(y);
            PathSet& set = q.at(x, y);
            set.paths.push_back(store->import_sequence(seq));
            const ShortestPathTree& without = excl.tree_for(tree.parent_edge[seq[1]]);
            if (without.reachable(y))
                set.paths.push_back(store->import_sequence(without.path_to(y)));
        }
    }
    return q;
}

namespace detail {

struct QueueItem {
    PathWeight weight;
    std::uint64_t order = 0;  // insertion counter; deterministic tie order
    PathId path = kNoPath;
    VertexId x = 0;
    VertexId y = 0;

    bool operator>(const QueueItem& o) const {
        return std::tie(weight, order) > std::tie(o.weight, o.order);
    }
};

inline void insert_sorted(PathSet& set, const PathStore& store, PathId p) {
    PathWeight w = store.rec(p).weight;
    auto it = std::upper_bound(set.paths.begin(), set.paths.end(), w,
                               [&](PathWeight lhs, PathId rhs) { return lhs < store.rec(rhs).weight; });
    set.paths.insert(it, p);
}

inline void validate_q_table(const Graph& g, std::uint32_t k, const PathTable& q) {
    const PathStore& store = q.store();
    for (VertexId x = 1; x <= g.vertex_count(); ++x) {
        for (VertexId y = 1; y <= g.vertex_count(); ++y) {
            if (x == y) continue;
            const PathSet& set = q.at(x, y);
            if (set.size() > k) throw std::invalid_argument("nearly set larger than k");
            PathWeight prev{0, 0};
            for (std::size_t i = 0; i < set.paths.size(); ++i) {
                const PathRec& r = store.rec(set.paths[i]);
                if (r.first != x || r.last != y)
                    throw std::invalid_argument("nearly set entry endpoints do not match its pair");
                if (i > 0 && r.weight < prev) throw std::invalid_argument("nearly set not sorted");
                prev = r.weight;
                if (!store.is_simple(set.paths[i]))
                    throw std::invalid_argument("nearly set entry is not simple");
            }
        }
    }
}

}  // namespace detail

// Algorithm: the result sets start as the nearly-k sets; for each pair
// whose k-1 shortest entries share their first edge (x,a), the edge is
// registered as an extension for (a,y), and the queue is seeded with
// (x,a) o (max path of the nearly set of (a,y)) when that set is full; then
// repeatedly extract the minimum candidate, insert it when the pair is one
// short, or replace the pair's maximum when strictly better, and on every
// update push the registered left extensions of the updated pair.
inline PathTable compute_apsisp(const Graph& g, std::uint32_t k, PathTable table,
                                ApsispStats* stats_out = nullptr) {
    if (k < 2) throw std::invalid_argument("compute_apsisp requires k >= 2");
    const std::uint32_t n = g.vertex_count();
    if (table.vertex_count() != n) throw std::invalid_argument("table does not match graph");
    detail::validate_q_table(g, k, table);

    PathStore& store = table.store();
    ApsispStats stats;
    const std::uint64_t max_extensions = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0);
    const std::uint64_t max_insertions = 2 * max_extensions;

    // Extensions(a,y): edges (x,a) that begin all k-1 SiSPs from x to y.
    auto pair_index = [n](VertexId a, VertexId y) {
        return static_cast<std::size_t>(a) * (n + 1) + y;
    };
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> extensions(
        static_cast<std::size_t>(n + 1) * (n + 1));
    std::vector<std::uint8_t> updates(static_cast<std::size_t>(n + 1) * (n + 1), 0);

    std::priority_queue<detail::QueueItem, std::vector<detail::QueueItem>, std::greater<>> heap;
    std::uint64_t counter = 0;
    auto push_candidate = [&](VertexId x, VertexId y, PathId p) {
        if (++stats.heap_insertions > max_insertions)
            throw std::logic_error("queue insertions exceeded 2n(n-1)");
        heap.push({store.rec(p).weight, counter++, p, x, y});
    };

    // Initialize.
    std::vector<VertexId> scratch;
    for (VertexId x = 1; x <= n; ++x) {
        for (VertexId y = 1; y <= n; ++y) {
            if (x == y) continue;
            const PathSet& set = table.at(x, y);
            if (set.size() < k - 1) continue;
            store.materialize(set.paths[0], scratch);
            VertexId a = scratch[1];
            bool shared = true;
            for (std::size_t i = 1; i < k - 1 && shared; ++i) {
                store.materialize(set.paths[i], scratch);
                shared = scratch[1] == a;
            }
            if (!shared) continue;
            EdgeId via = *g.find_arc(x, a);
            extensions[pair_index(a, y)].push_back({x, via});
            if (++stats.extensions_entries > max_extensions)
                throw std::logic_error("Extensions entries exceeded n(n-1)");
            const PathSet& ahead = table.at(a, y);
            if (ahead.size() == k)
                push_candidate(x, y, store.extend_left(x, via, ahead.paths.back()));
        }
    }

    // Main loop.
    while (!heap.empty()) {
        detail::QueueItem item = heap.top();
        heap.pop();
        PathSet& set = table.at(item.x, item.y);
        bool updated = false;
        if (set.size() == k - 1) {
            if (!store.is_simple(item.path))
                throw std::logic_error("non-simple path reached a result set");
            detail::insert_sorted(set, store, item.path);
            updated = true;
        } else if (set.size() == k) {
            PathId worst = set.paths.back();
            if (item.weight < store.rec(worst).weight) {
                if (!store.is_simple(item.path))
                    throw std::logic_error("non-simple path reached a result set");
                set.paths.pop_back();
                detail::insert_sorted(set, store, item.path);
                updated = true;
            }
        } else {
            throw std::logic_error("extension targeted a pair with fewer than k-1 paths");
        }
        if (!updated) continue;
        ++stats.paths_inserted;
        std::uint8_t& count = updates[pair_index(item.x, item.y)];
        if (++count > 1) throw std::logic_error("path set updated more than once");
        ++stats.pair_updates;
        stats.max_updates_per_pair = std::max<std::uint32_t>(stats.max_updates_per_pair, count);
        for (auto [xp, edge] : extensions[pair_index(item.x, item.y)])
            push_candidate(xp, item.y, store.extend_left(xp, edge, item.path));
    }

    if (stats_out) *stats_out = stats;
    return table;
}

inline PathTable two_apsisp(const Graph& g, ApsispStats* stats_out = nullptr) {
    return compute_apsisp(g, 2, compute_q2(g), stats_out);
}

// Nearly-k sets for k >= 3 from the (k-1)-level solutions: all k-1 paths of
// the pair plus the best one-edge left extension (x,a) o p, where p is the
// first (a,y) path on G minus in-edges-of-x not already represented among
// the (x,a)-starters.
// An out-edge (x,y) itself contributes the single-edge path when absent.
inline PathTable assemble_qk(const Graph& g, std::uint32_t k, const PathTable& p_minus,
                             const std::vector<PathTable>& p_excl) {
    const std::uint32_t n = g.vertex_count();
    if (k < 3) throw std::invalid_argument("assemble_qk requires k >= 3");
    if (p_minus.vertex_count() != n || p_excl.size() != n)
        throw std::invalid_argument("assemble_qk: table shape mismatch");

    auto store = std::make_shared<PathStore>(g);
    PathTable q(n, store);
    for (VertexId x = 1; x <= n; ++x) {
        const PathTable& sub = p_excl[x - 1];
        for (VertexId y = 1; y <= n; ++y) {
            if (x == y) continue;
            std::set<std::vector<VertexId>> base;
            PathSet& target = q.at(x, y);
            for (PathId p : p_minus.at(x, y).paths) {
                std::vector<VertexId> seq = p_minus.store().materialize(p);
                target.paths.push_back(store->import_sequence(seq));
                base.insert(std::move(seq));
            }

            std::optional<VertexPath> best;
            for (const Graph::Arc& arc : g.out_arcs(x)) {
                std::size_t count = 0;
                for (const auto& seq : base)
                    if (seq[1] == arc.to) ++count;
                std::optional<VertexPath> cand;
                if (arc.to == y) {
                    if (count == 0)
                        cand = VertexPath{{x, y}, {arc.weight, 1}};
                } else {
                    const PathSet& pool = sub.at(arc.to, y);
                    for (std::size_t idx = count; idx < pool.size(); ++idx) {
                        std::vector<VertexId> seq = sub.store().materialize(pool.paths[idx]);
                        seq.insert(seq.begin(), x);
                        if (base.count(seq)) continue;  // never fires with one tie order
                        PathWeight w = sub.store().rec(pool.paths[idx]).weight.extended(arc.weight);
                        cand = VertexPath{std::move(seq), w};
                        break;
                    }
                }
                if (cand && (!best || path_less(*cand, *best))) best = std::move(cand);
            }
            if (best) {
                PathId p = store->import_sequence(best->vertices);
                detail::insert_sorted(target, *store, p);
            }
        }
    }
    return q;
}

// Recursive k-APSiSP. k=1 degenerates to one Dijkstra tree per source; k=2
// is the Q2 pipeline; k>=3 recurses on G - I_x for every x to assemble Q_k,
// then runs compute_apsisp. Undirected graphs are handled through their
// bidirected encoding, whose ordered-pair path sets coincide with the
// undirected ones.
inline PathTable apsisp(const Graph& g, std::uint32_t k, const ApsispOptions& options = {},
                        ApsispStats* stats_out = nullptr) {
    if (k == 0) throw std::invalid_argument("apsisp requires k >= 1");
    if (k > options.max_k)
        throw std::invalid_argument("apsisp: k exceeds the configured maximum (cost grows by a "
                                    "factor of n per level)");
    const std::uint32_t n = g.vertex_count();
    if (k == 1) {
        auto store = std::make_shared<PathStore>(g);
        PathTable table(n, store);
        for (VertexId x = 1; x <= n; ++x) {
            ShortestPathTree tree = sssp(g, x);
            for (VertexId y = 1; y <= n; ++y)
                if (y != x && tree.reachable(y))
                    table.at(x, y).paths.push_back(store->import_sequence(tree.path_to(y)));
        }
        return table;
    }
    if (k == 2) return two_apsisp(g, stats_out);

    const Graph base = g.directed() ? g : bidirected(g);
    std::vector<PathTable> p_excl;
    p_excl.reserve(n);
    for (VertexId x = 1; x <= n; ++x)
        p_excl.push_back(apsisp(remove_in_edges(base, x), k - 1, options));

    // Paths leaving x never use an in-edge of x, so row x of the solution on
    // G - I_x is exactly row x of the (k-1)-level solution on G.
    auto minus_store = std::make_shared<PathStore>(base);
    PathTable p_minus(n, minus_store);
    for (VertexId x = 1; x <= n; ++x)
        for (VertexId y = 1; y <= n; ++y) {
            if (x == y) continue;
            for (PathId p : p_excl[x - 1].at(x, y).paths)
                p_minus.at(x, y).paths.push_back(
                    minus_store->import_sequence(p_excl[x - 1].store().materialize(p)));
        }

    PathTable q = assemble_qk(base, k, p_minus, p_excl);
    return compute_apsisp(base, k, std::move(q), stats_out);
}

}  // namespace kssp

#endif  // KSSP_APSISP_HPP
