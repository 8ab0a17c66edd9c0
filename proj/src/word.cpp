#include "graphmeasure/word.hpp"

#include <algorithm>

namespace graphmeasure {

Word Word::path(const Graph& g, std::vector<int> edge_indices) {
    if (edge_indices.empty()) throw DomainError("a path word needs at least one edge");
    for (std::size_t i = 0; i + 1 < edge_indices.size(); ++i) {
        if (g.edge_target(edge_indices[i]) != g.edge_source(edge_indices[i + 1]))
            throw DomainError("inadmissible edge sequence: '" +
                              g.edges()[static_cast<std::size_t>(edge_indices[i])].id +
                              "' does not meet '" +
                              g.edges()[static_cast<std::size_t>(edge_indices[i + 1])].id + "'");
    }
    Word w;
    w.kind_ = Kind::path;
    w.edges_ = std::move(edge_indices);
    return w;
}

int source_of(const Graph& g, const Word& w) {
    switch (w.kind()) {
        case Word::Kind::vertex: return w.vertex_index();
        case Word::Kind::path: return g.edge_source(w.edges().front());
        default: throw DomainError("the empty word has no source");
    }
}

int range_of(const Graph& g, const Word& w) {
    switch (w.kind()) {
        case Word::Kind::vertex: return w.vertex_index();
        case Word::Kind::path: return g.edge_target(w.edges().back());
        default: throw DomainError("the empty word has no range");
    }
}

Word concat(const Graph& g, const Word& a, const Word& b) {
    if (a.is_empty() || b.is_empty()) return Word();
    if (range_of(g, a) != source_of(g, b)) return Word();
    if (a.is_vertex()) return b;
    if (b.is_vertex()) return a;
    std::vector<int> edges = a.edges();
    edges.insert(edges.end(), b.edges().begin(), b.edges().end());
    return Word::path(g, std::move(edges));
}

Word inverse_word(const Graph& g, const Word& w) {
    if (!w.is_path()) return w;
    std::vector<int> rev;
    rev.reserve(w.length());
    for (auto it = w.edges().rbegin(); it != w.edges().rend(); ++it) {
        auto partner = g.inverse_edge(*it);
        if (!partner)
            throw DomainError("edge '" + g.edges()[static_cast<std::size_t>(*it)].id +
                              "' has no inverse partner; invert words over a shadowed graph");
        rev.push_back(*partner);
    }
    return Word::path(g, std::move(rev));
}

Word reduce_word(const Graph& g, const Word& w) {
    if (!w.is_path()) return w;
    std::vector<int> stack;
    stack.reserve(w.length());
    for (int e : w.edges()) {
        auto partner = g.inverse_edge(e);
        if (!stack.empty() && partner && stack.back() == *partner)
            stack.pop_back();
        else
            stack.push_back(e);
    }
    if (stack.empty()) return Word::vertex(source_of(g, w));
    return Word::path(g, std::move(stack));
}

std::vector<Word> enumerate_words(const Graph& g, int max_len) {
    if (max_len < 0) throw DomainError("max_len must be nonnegative");
    std::vector<Word> out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        out.push_back(Word::vertex(static_cast<int>(v)));
    // Extending each length stratum in order keeps the result sorted by
    // (length, lexicographic signed-edge order) without a final sort.
    std::vector<std::vector<int>> frontier;
    std::vector<int> starts;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (int e : g.out_edges(static_cast<int>(v))) starts.push_back(e);
    std::sort(starts.begin(), starts.end(),
              [&](int a, int b) { return g.edge_sort_key(a) < g.edge_sort_key(b); });
    for (int e : starts) frontier.push_back({e});
    for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
        std::vector<std::vector<int>> next;
        for (auto& seq : frontier) {
            out.push_back(Word::path(g, seq));
            for (int e : g.out_edges(g.edge_target(seq.back()))) {
                std::vector<int> ext = seq;
                ext.push_back(e);
                next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

std::string format_word(const Graph& g, const Word& w) {
    switch (w.kind()) {
        case Word::Kind::empty: return "(empty)";
        case Word::Kind::vertex: return g.vertices()[static_cast<std::size_t>(w.vertex_index())];
        default: break;
    }
    std::string s;
    for (std::size_t i = 0; i < w.edges().size(); ++i) {
        if (i) s += '.';
        s += g.edges()[static_cast<std::size_t>(w.edges()[i])].id;
    }
    return s;
}

Word parse_word(const Graph& g, std::string_view text) {
    // Trim surrounding whitespace; positions reported against the trimmed text.
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos) throw ParseError("empty word literal", 1, 1);
    text = text.substr(begin, end - begin + 1);

    if (text.find('.') == std::string_view::npos) {
        std::string tok(text);
        int v = g.find_vertex(tok);
        if (v >= 0) return Word::vertex(v);
        int e = g.find_edge(tok);
        if (e >= 0) return Word::path(g, {e});
        throw ParseError("unknown word literal '" + tok + "'", 1, static_cast<int>(begin) + 1);
    }
    std::vector<int> edges;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t dot = text.find('.', pos);
        std::string tok(text.substr(pos, dot == std::string_view::npos ? dot : dot - pos));
        int e = g.find_edge(tok);
        if (e < 0)
            throw ParseError("unknown edge '" + tok + "' in word literal", 1,
                             static_cast<int>(begin + pos) + 1);
        edges.push_back(e);
        if (dot == std::string_view::npos) break;
        pos = dot + 1;
    }
    try {
        return Word::path(g, std::move(edges));
    } catch (const DomainError& err) {
        throw ParseError(err.what(), 1, static_cast<int>(begin) + 1);
    }
}

bool word_precedes(const Graph& g, const Word& a, const Word& b) {
    auto rank = [](const Word& w) { return w.is_empty() ? 0 : (w.is_vertex() ? 1 : 2); };
    if (a.length() != b.length()) return a.length() < b.length();
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    if (a.is_vertex() && b.is_vertex()) return a.vertex_index() < b.vertex_index();
    for (std::size_t i = 0; i < a.edges().size() && i < b.edges().size(); ++i) {
        auto ka = g.edge_sort_key(a.edges()[i]);
        auto kb = g.edge_sort_key(b.edges()[i]);
        if (ka != kb) return ka < kb;
    }
    return false;
}

}  // namespace graphmeasure
