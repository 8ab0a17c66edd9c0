#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphmeasure/diagram.hpp"
#include "graphmeasure/graph.hpp"
#include "graphmeasure/rational.hpp"
#include "graphmeasure/word.hpp"

namespace graphmeasure {

enum class WeightMode { weighted, unweighted };

/// full: diagram sets are the complete images of the diagram maps.
/// generator: diagram sets and neighborhoods are restricted to vertices
/// and single edges, the generators of the path structure.
enum class DiagramMode { full, generator };

/// Degrees entering the degree measure of the plain graph measure: the
/// default counts in the shadowed graph, matching the reduced measure so
/// the restriction identity holds diagram by diagram.
enum class DegreeConvention { shadowed_degrees, forward_degrees };

/// Immutable bundle of a graph, its shadowed graph, both diagram sets and
/// the evaluation modes. All measure evaluations are pure.
class MeasureContext {
public:
    explicit MeasureContext(Graph g, WeightMode wm = WeightMode::weighted,
                            DiagramMode dm = DiagramMode::full,
                            DegreeConvention dc = DegreeConvention::shadowed_degrees);

    const Graph& graph() const { return graph_; }
    const Graph& shadowed() const { return shadowed_; }
    const DiagramSet& diagrams() const { return diagrams_; }
    const DiagramSet& reduced_diagrams() const { return reduced_; }
    WeightMode weight_mode() const { return weight_mode_; }
    DiagramMode diagram_mode() const { return diagram_mode_; }

    /// The reduced diagram set under the active diagram mode.
    const std::vector<Diagram>& active_reduced() const { return active_; }
    /// Loop finite paths of the active set (source == range, length >= 1).
    std::vector<Diagram> reduced_loops() const;

    /// Degree measure: sum of deg(v)/|V| over a vertex set, degrees counted
    /// in the shadowed graph.
    Rational degree_measure(const std::vector<int>& vertex_indices) const;
    Rational degree_measure_ids(const std::vector<std::string>& vertex_ids) const;

    /// Diagram-length map F: sum of lengths.
    long long diagram_length(const std::vector<Diagram>& s) const;

    /// Weighting W: product of edge weights along the trace (1 for vertex
    /// diagrams); identically 1 in unweighted mode.
    Rational weight_of(const Diagram& d) const;

    /// Weighted diagram-length map L: sum of W(d)·f(d).
    Rational weighted_length(const std::vector<Diagram>& s) const;

    struct Breakdown {
        Rational vertex_part;
        Rational path_part;
        Rational total;
    };

    /// Reduced graph measure: degree part over vertex diagrams plus
    /// weighted-length part over path diagrams. The set must lie inside the
    /// full reduced diagram set regardless of diagram mode.
    Breakdown mu_reduced_breakdown(const std::vector<Diagram>& s) const;
    Rational mu_reduced(const std::vector<Diagram>& s) const;

    /// Plain graph measure on D(G); vertex degrees follow the context's
    /// degree convention.
    Rational mu_plain(const std::vector<Diagram>& s) const;

    /// Subgraph membership: a reduced diagram lies in the subgraph's domain
    /// when its trace stays over H's edges (either orientation) and, for
    /// vertex diagrams, the vertex belongs to H.
    bool in_subgraph_domain(const Graph& h, const Diagram& d) const;

    /// Subgraph measure d_H ∪ Δ_H: vertex part over V(H) with denominator
    /// |V(H)|, path part over diagrams supported in H. Degrees count inside
    /// the shadowed subgraph by default; `degrees_in_subgraph = false`
    /// switches to degrees in the ambient shadowed graph. Both conventions
    /// are coherent, so both ship.
    Rational subgraph_measure(const Graph& h, const std::vector<Diagram>& s,
                              bool degrees_in_subgraph = true) const;

    /// Strict restriction: the reduced measure of s ∩ D_r(H^).
    Rational restricted_measure(const Graph& h, const std::vector<Diagram>& s) const;

    /// Extended measure on finite word sets: degree part over vertex words,
    /// and W(δʳ_w)·f(δʳ_w) per path word — distinct words contribute
    /// separately even when they share a reduced diagram.
    Rational extended_mu(const std::vector<Word>& words) const;

    /// Parse a word literal over the shadowed graph and take its reduced
    /// diagram.
    Diagram resolve_reduced(std::string_view word_literal) const;

private:
    Graph graph_;
    Graph shadowed_;
    DiagramSet diagrams_;
    DiagramSet reduced_;
    std::vector<Diagram> active_;
    WeightMode weight_mode_;
    DiagramMode diagram_mode_;
    DegreeConvention degree_convention_;

    void require_full_subgraph(const Graph& h) const;
    Rational degree_term(int v, const Graph& in) const;
};

/// Witness that two graphs generate equivalent reduced measure spaces: a
/// signed-edge isomorphism of the shadowed graphs (directly, or through the
/// shadow when only the reversed graphs are isomorphic) plus a per-singleton
/// measure comparison over the induced diagram bijection.
struct EquivalenceCertificate {
    bool via_inversion = false;
    std::vector<std::pair<std::string, std::string>> vertex_map;
    std::vector<std::pair<std::string, std::string>> signed_edge_map;
    std::size_t singleton_count = 0;
    bool measure_preserving = false;
};

std::optional<EquivalenceCertificate> measure_spaces_equivalent(
    const Graph& g1, const Graph& g2, WeightMode wm = WeightMode::weighted);

}  // namespace graphmeasure
