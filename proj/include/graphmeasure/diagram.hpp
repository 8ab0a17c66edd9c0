#pragma once

#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "graphmeasure/graph.hpp"
#include "graphmeasure/word.hpp"

namespace graphmeasure {

/// Canonical image of a word: source, range, and the trace — the distinct
/// signed edges in first-traversal order. Two diagrams are equal iff all
/// three agree; a length-0 diagram is a vertex diagram.
struct Diagram {
    int source = -1;
    int range = -1;
    std::vector<int> trace;

    std::size_t length() const { return trace.size(); }
    bool is_vertex_diagram() const { return trace.empty(); }

    static Diagram vertex(int v) { return Diagram{v, v, {}}; }

    friend bool operator==(const Diagram&, const Diagram&) = default;
    friend bool operator<(const Diagram& a, const Diagram& b) {
        return std::tie(a.source, a.range, a.trace) < std::tie(b.source, b.range, b.trace);
    }
};

Diagram diagram_of(const Graph& g, const Word& w);  // throws DomainError on the empty word

/// True iff the diagram of w is w itself, i.e. no signed edge repeats.
bool is_basic(const Graph& g, const Word& w);

/// diagram_of(reduce_word(w)); defined over shadowed graphs.
Diagram reduced_diagram_of(const Graph& g, const Word& w);

/// Whether the trace, read as an edge sequence, is an admissible word whose
/// endpoints match the diagram's. Diagrams reached through edge-repeating
/// words can fail this; they are still measurable and are flagged in output.
bool trace_is_word(const Graph& g, const Diagram& d);

/// Display order: (length, trace by signed-edge sort keys, source, range).
bool diagram_precedes(const Graph& g, const Diagram& a, const Diagram& b);

/// Finite ordered set of diagrams with by-length access.
class DiagramSet {
public:
    DiagramSet() = default;
    static DiagramSet collect(const Graph& g, std::vector<Diagram> items);

    const std::vector<Diagram>& items() const& { return items_; }
    std::vector<Diagram> items() && { return std::move(items_); }
    std::size_t size() const { return items_.size(); }
    bool contains(const Diagram& d) const;
    std::vector<Diagram> with_length(std::size_t k) const;
    std::size_t max_length() const;

private:
    std::vector<Diagram> items_;   // sorted by diagram_precedes, unique
    std::vector<Diagram> lookup_;  // the same items in structural order
};

/// The set of all diagrams of words over g. Computed as a reachability
/// closure over diagram states: extending a word by an edge transforms its
/// diagram independently of the word, so the image of the (infinite) word
/// set is the closure of the vertex diagrams under edge extension.
DiagramSet enumerate_diagrams(const Graph& g, std::size_t state_limit = 200000);

/// The set of reduced diagrams of words over a shadowed graph: diagrams of
/// cancellation-free words, computed as the same closure restricted to
/// non-backtracking extensions (state = diagram plus last edge).
DiagramSet enumerate_reduced_diagrams(const Graph& g, std::size_t state_limit = 200000);

/// True iff every word of length <= max_len is basic; on finite directed
/// trees the free semigroupoid and the diagram set coincide, so this holds
/// for any bound.
bool tree_coincidence_check(const Graph& g, int max_len);

/// "src -> dst : e1.e2^-1"; vertex diagrams render with an empty trace.
std::string format_diagram(const Graph& g, const Diagram& d);
Diagram parse_diagram(const Graph& g, std::string_view text);

}  // namespace graphmeasure
