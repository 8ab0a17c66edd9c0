#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphmeasure/errors.hpp"
#include "graphmeasure/rational.hpp"

namespace graphmeasure {

struct Edge {
    std::string id;
    std::string src;
    std::string dst;
    Rational weight{1};

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite directed multigraph with named vertices and edges and rational
/// edge weights in (0,1]. Immutable after construction; construction
/// validates identifiers, endpoints and weight range.
///
/// Edges of a shadowed graph carry the reserved "^-1" id suffix on the
/// reversed copies, so the signed orientation of any edge is recoverable
/// from its id alone.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> vertices, std::vector<Edge> edges);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(std::string_view id) const { return find_vertex(id) >= 0; }
    bool has_edge(std::string_view id) const { return find_edge(id) >= 0; }
    int find_vertex(std::string_view id) const;  // -1 when absent
    int find_edge(std::string_view id) const;
    int vertex_index(std::string_view id) const;  // throws DomainError
    int edge_index(std::string_view id) const;

    int edge_source(int e) const { return edge_src_[static_cast<std::size_t>(e)]; }
    int edge_target(int e) const { return edge_dst_[static_cast<std::size_t>(e)]; }
    const Rational& edge_weight(int e) const { return edges_[static_cast<std::size_t>(e)].weight; }

    int in_degree(std::string_view v) const { return in_degree_at(vertex_index(v)); }
    int out_degree(std::string_view v) const { return out_degree_at(vertex_index(v)); }
    int degree(std::string_view v) const { return degree_at(vertex_index(v)); }
    int in_degree_at(int v) const;
    int out_degree_at(int v) const;
    /// A loop edge counts once in, once out, hence 2 toward the plain degree.
    int degree_at(int v) const { return in_degree_at(v) + out_degree_at(v); }

    /// Outgoing edge indices of v, sorted by signed-edge order
    /// (base declaration index, forward before inverse).
    const std::vector<int>& out_edges(int v) const { return out_edges_[static_cast<std::size_t>(v)]; }

    /// Opposite directed graph: every edge reversed, ids toggled with the
    /// inverse marker, weights preserved. Involution: shadow(shadow(g)) == g.
    Graph shadow() const;

    /// Union of the graph and its shadow; forward edges first in declaration
    /// order, then the reversed copies in the same order.
    Graph shadowed() const;

    /// Subgraph on `vs` induced by every edge with both endpoints inside.
    /// Vertex and edge order follow this graph's declaration order.
    Graph full_subgraph(const std::vector<std::string>& vs) const;

    /// Index of the edge with the inverse-marked partner id, if present.
    std::optional<int> inverse_edge(int e) const;

    /// Sort key for deterministic signed-edge ordering: (declaration index
    /// of the underlying forward edge, orientation with forward < inverse).
    std::pair<int, int> edge_sort_key(int e) const;

    static bool is_inverse_id(std::string_view id);
    static std::string inverse_id(std::string_view id);  // toggles the marker
    static std::string base_id(std::string_view id);     // strips the marker if present

    /// Line-oriented graph file body; see parse() for the format.
    std::string serialize() const;

    /// Graph file format (UTF-8): `vertex <id>` and
    /// `edge <id> <src> <dst> [weight <p>/<q>]`, one declaration per line;
    /// `#` starts a comment. Weight defaults to 1/1. Identifiers match
    /// [A-Za-z_][A-Za-z0-9_]* so the "^-1" marker and word syntax stay
    /// unambiguous. Errors carry line/column positions.
    static Graph parse(std::string_view text);

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<int> edge_src_;
    std::vector<int> edge_dst_;
    std::vector<std::vector<int>> out_edges_;
    std::map<std::string, int, std::less<>> vertex_idx_;
    std::map<std::string, int, std::less<>> edge_idx_;

    void build_indices();
};

/// Vertex and edge bijection g1 -> g2 preserving sources and targets.
struct GraphIsomorphism {
    std::vector<int> vertex_map;  // g1 vertex index -> g2 vertex index
    std::vector<int> edge_map;    // g1 edge index -> g2 edge index
};

/// Exhaustive backtracking search with degree-signature pruning; returns the
/// first match in declaration order, so the result is deterministic for a
/// fixed input ordering. Weights are not part of graph isomorphism.
std::optional<GraphIsomorphism> find_isomorphism(const Graph& g1, const Graph& g2);

}  // namespace graphmeasure
