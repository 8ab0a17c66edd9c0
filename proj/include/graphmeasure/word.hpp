#pragma once

#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "graphmeasure/graph.hpp"

namespace graphmeasure {

/// Element of the free semigroupoid of a graph: the empty word, a vertex,
/// or an admissible sequence of edges (a finite path). Words are immutable
/// values; the graph they live over is passed to every operation.
class Word {
public:
    enum class Kind { empty, vertex, path };

    Word() = default;  // the empty word

    static Word vertex(int vertex_index) {
        Word w;
        w.kind_ = Kind::vertex;
        w.vertex_ = vertex_index;
        return w;
    }

    /// Validates admissibility: the target of each edge must equal the
    /// source of the next.
    static Word path(const Graph& g, std::vector<int> edge_indices);

    Kind kind() const { return kind_; }
    bool is_empty() const { return kind_ == Kind::empty; }
    bool is_vertex() const { return kind_ == Kind::vertex; }
    bool is_path() const { return kind_ == Kind::path; }

    int vertex_index() const { return vertex_; }
    const std::vector<int>& edges() const { return edges_; }

    /// 0 for vertices (and the empty word); edge count for paths.
    std::size_t length() const { return edges_.size(); }

    friend bool operator==(const Word&, const Word&) = default;
    friend bool operator<(const Word& a, const Word& b) {
        return std::tie(a.kind_, a.vertex_, a.edges_) < std::tie(b.kind_, b.vertex_, b.edges_);
    }

private:
    Kind kind_ = Kind::empty;
    int vertex_ = -1;
    std::vector<int> edges_;
};

int source_of(const Graph& g, const Word& w);  // throws DomainError on the empty word
int range_of(const Graph& g, const Word& w);

/// Admissible product; the empty word encodes failure and absorbs.
Word concat(const Graph& g, const Word& a, const Word& b);

/// Reverses the sequence and flips each edge to its partner. Requires every
/// edge of the word to have an inverse partner in g (a shadowed graph).
Word inverse_word(const Graph& g, const Word& w);

/// Cancellation-free normal form: adjacent x·x^-1 pairs are deleted until
/// none remain; a fully cancelled path collapses to its source vertex.
/// Stack-based left-to-right scan; the result is order-independent.
Word reduce_word(const Graph& g, const Word& w);

/// All vertices plus all admissible paths of length <= max_len, ordered by
/// (length, lexicographic signed-edge order). Deterministic.
std::vector<Word> enumerate_words(const Graph& g, int max_len);

/// Word literal: a vertex id, or signed edge ids joined with '.'
/// ("v1", "e1.e2", "e1^-1.e2").
std::string format_word(const Graph& g, const Word& w);
Word parse_word(const Graph& g, std::string_view text);

/// The enumeration order as a comparator.
bool word_precedes(const Graph& g, const Word& a, const Word& b);

}  // namespace graphmeasure
