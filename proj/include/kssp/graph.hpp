// graph.hpp - Weighted simple digraph (or undirected graph) with exact
// integer weights, plus the edge-list text format used by the CLI.
//
// Vertices are labelled 1..n. Weights are non-negative 64-bit integers.
// All path comparisons in this library use the lexicographic pair
// (total weight, edge count), so that a proper subpath always weighs
// strictly less than the path containing it, even across 0-weight edges.

#ifndef KSSP_GRAPH_HPP
#define KSSP_GRAPH_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kssp {

using VertexId = std::uint32_t;  // 1-based; 0 means "none"
using EdgeId = std::uint32_t;
using Weight = std::uint64_t;

inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();
inline constexpr VertexId kNoVertex = 0;

// Lexicographic (weight, edge count) pair; the universal comparison key.
struct PathWeight {
    Weight wt = 0;
    std::uint32_t len = 0;

    friend constexpr auto operator<=>(const PathWeight&, const PathWeight&) = default;

    static constexpr PathWeight infinity() {
        return {std::numeric_limits<Weight>::max(), std::numeric_limits<std::uint32_t>::max()};
    }
    constexpr bool is_infinite() const { return *this == infinity(); }

    // Weight of this path extended by one edge of weight w.
    constexpr PathWeight extended(Weight w) const { return {wt + w, len + 1}; }
};

struct Edge {
    VertexId tail = 0;
    VertexId head = 0;
    Weight weight = 0;
};

// A materialized simple path: explicit vertex sequence plus its weight.
struct VertexPath {
    std::vector<VertexId> vertices;
    PathWeight weight;

    friend bool operator==(const VertexPath&, const VertexPath&) = default;
};

// Total order (weight, edge count, lexicographic vertex sequence) used for
// all deterministic tie-breaking in this library.
inline bool path_less(const VertexPath& a, const VertexPath& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(),
                                        b.vertices.begin(), b.vertices.end());
}

enum class ParseErrorKind {
    bad_header,
    malformed_line,
    negative_weight,
    self_loop,
    duplicate_edge,
    vertex_out_of_range,
    edge_count_mismatch,
};

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          kind_(kind),
          line_(line) {}

    ParseErrorKind kind() const { return kind_; }
    std::size_t line() const { return line_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
};

// Immutable weighted graph. Directed graphs store each edge as one arc;
// undirected graphs store each edge once (tail < head) and expose both
// traversal directions through the adjacency lists.
class Graph {
public:
    struct Arc {
        VertexId to = 0;  // the other endpoint, in traversal direction
        Weight weight = 0;
        EdgeId edge = kNoEdge;
    };

    Graph() = default;

    static Graph build(std::uint32_t n, bool directed, std::vector<Edge> edges) {
        for (const Edge& e : edges) {
            if (e.tail < 1 || e.tail > n || e.head < 1 || e.head > n)
                throw std::invalid_argument("edge endpoint out of range");
            if (e.tail == e.head) throw std::invalid_argument("self-loop");
        }
        if (!directed) {
            for (Edge& e : edges)
                if (e.tail > e.head) std::swap(e.tail, e.head);
        }
        std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
            return std::tie(a.tail, a.head) < std::tie(b.tail, b.head);
        });
        for (std::size_t i = 1; i < edges.size(); ++i)
            if (edges[i].tail == edges[i - 1].tail && edges[i].head == edges[i - 1].head)
                throw std::invalid_argument("duplicate edge");

        Graph g;
        g.n_ = n;
        g.directed_ = directed;
        g.edges_ = std::move(edges);
        g.out_.assign(n + 1, {});
        g.in_.assign(n + 1, {});
        for (EdgeId id = 0; id < g.edges_.size(); ++id) {
            const Edge& e = g.edges_[id];
            g.out_[e.tail].push_back({e.head, e.weight, id});
            g.in_[e.head].push_back({e.tail, e.weight, id});
            if (!directed) {
                g.out_[e.head].push_back({e.tail, e.weight, id});
                g.in_[e.tail].push_back({e.head, e.weight, id});
            }
        }
        auto by_to = [](const Arc& a, const Arc& b) { return a.to < b.to; };
        for (VertexId v = 1; v <= n; ++v) {
            std::sort(g.out_[v].begin(), g.out_[v].end(), by_to);
            std::sort(g.in_[v].begin(), g.in_[v].end(), by_to);
        }
        return g;
    }

    std::uint32_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool directed() const { return directed_; }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_[id]; }

    const std::vector<Arc>& out_arcs(VertexId v) const { return out_[v]; }
    const std::vector<Arc>& in_arcs(VertexId v) const { return in_[v]; }

    // Arc u->v if traversable (for undirected graphs, either orientation).
    std::optional<EdgeId> find_arc(VertexId u, VertexId v) const {
        const auto& arcs = out_[u];
        auto it = std::lower_bound(arcs.begin(), arcs.end(), v,
                                   [](const Arc& a, VertexId x) { return a.to < x; });
        if (it != arcs.end() && it->to == v) return it->edge;
        return std::nullopt;
    }

    Weight max_edge_weight() const {
        Weight w = 0;
        for (const Edge& e : edges_) w = std::max(w, e.weight);
        return w;
    }

private:
    std::uint32_t n_ = 0;
    bool directed_ = true;
    std::vector<Edge> edges_;
    std::vector<std::vector<Arc>> out_;
    std::vector<std::vector<Arc>> in_;
};

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) fields.push_back(line.substr(i, j - i));
        i = j;
    }
    return fields;
}

inline std::optional<std::uint64_t> parse_u64(std::string_view s) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

}  // namespace detail

// Edge-list format: '#' comment lines, header "d <n> <m>" or "u <n> <m>",
// then exactly m lines "e <tail> <head> <weight>" with integer weight >= 0.
inline Graph parse_graph(std::string_view text) {
    std::uint32_t n = 0;
    std::size_t m = 0;
    bool directed = true;
    bool have_header = false;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    std::size_t last_line = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        ++line_no;
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

        auto fields = detail::split_fields(line);
        if (fields.empty() || fields[0].front() == '#') continue;
        last_line = line_no;

        if (!have_header) {
            if (fields.size() != 3 || (fields[0] != "d" && fields[0] != "u"))
                throw ParseError(ParseErrorKind::bad_header, line_no,
                                 "expected header 'd <n> <m>' or 'u <n> <m>'");
            auto pn = detail::parse_u64(fields[1]);
            auto pm = detail::parse_u64(fields[2]);
            if (!pn || !pm || *pn > std::numeric_limits<std::uint32_t>::max())
                throw ParseError(ParseErrorKind::bad_header, line_no, "bad header counts");
            directed = fields[0] == "d";
            n = static_cast<std::uint32_t>(*pn);
            m = static_cast<std::size_t>(*pm);
            have_header = true;
            continue;
        }

        if (fields[0] != "e" || fields.size() != 4)
            throw ParseError(ParseErrorKind::malformed_line, line_no,
                             "expected 'e <tail> <head> <weight>'");
        if (edges.size() == m)
            throw ParseError(ParseErrorKind::edge_count_mismatch, line_no,
                             "more edge lines than declared in header");
        if (fields[3].front() == '-')
            throw ParseError(ParseErrorKind::negative_weight, line_no, "negative edge weight");
        auto pt = detail::parse_u64(fields[1]);
        auto ph = detail::parse_u64(fields[2]);
        auto pw = detail::parse_u64(fields[3]);
        if (!pt || !ph || !pw)
            throw ParseError(ParseErrorKind::malformed_line, line_no, "unparsable edge fields");
        if (*pt < 1 || *pt > n || *ph < 1 || *ph > n)
            throw ParseError(ParseErrorKind::vertex_out_of_range, line_no,
                             "vertex id outside 1..n");
        if (*pt == *ph) throw ParseError(ParseErrorKind::self_loop, line_no, "self-loop");
        Edge e{static_cast<VertexId>(*pt), static_cast<VertexId>(*ph), *pw};
        if (!directed && e.tail > e.head) std::swap(e.tail, e.head);
        for (const Edge& prev : edges)
            if (prev.tail == e.tail && prev.head == e.head)
                throw ParseError(ParseErrorKind::duplicate_edge, line_no, "duplicate edge");
        edges.push_back(e);
    }

    if (!have_header)
        throw ParseError(ParseErrorKind::bad_header, line_no, "missing header");
    if (edges.size() != m)
        throw ParseError(ParseErrorKind::edge_count_mismatch, last_line,
                         "fewer edge lines than declared in header");
    return Graph::build(n, directed, std::move(edges));
}

// Emits the same format, edges sorted by (tail, head).
inline std::string serialize_graph(const Graph& g) {
    std::string out;
    out += g.directed() ? "d " : "u ";
    out += std::to_string(g.vertex_count());
    out += ' ';
    out += std::to_string(g.edge_count());
    out += '\n';
    for (const Edge& e : g.edges()) {
        out += "e ";
        out += std::to_string(e.tail);
        out += ' ';
        out += std::to_string(e.head);
        out += ' ';
        out += std::to_string(e.weight);
        out += '\n';
    }
    return out;
}

}  // namespace kssp

#endif  // KSSP_GRAPH_HPP
