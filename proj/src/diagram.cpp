#include "graphmeasure/diagram.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "graphmeasure/errors.hpp"

namespace graphmeasure {

Diagram diagram_of(const Graph& g, const Word& w) {
    if (w.is_empty()) throw DomainError("the empty word has no diagram");
    if (w.is_vertex()) return Diagram::vertex(w.vertex_index());
    Diagram d;
    d.source = source_of(g, w);
    d.range = range_of(g, w);
    for (int e : w.edges())
        if (std::find(d.trace.begin(), d.trace.end(), e) == d.trace.end()) d.trace.push_back(e);
    return d;
}

bool is_basic(const Graph& g, const Word& w) {
    if (w.is_empty()) throw DomainError("the empty word has no diagram");
    if (w.is_vertex()) return true;
    std::set<int> seen;
    for (int e : w.edges())
        if (!seen.insert(e).second) return false;
    return true;
}

Diagram reduced_diagram_of(const Graph& g, const Word& w) {
    if (w.is_empty()) throw DomainError("the empty word has no reduced diagram");
    return diagram_of(g, reduce_word(g, w));
}

bool trace_is_word(const Graph& g, const Diagram& d) {
    if (d.is_vertex_diagram()) return true;
    for (std::size_t i = 0; i + 1 < d.trace.size(); ++i)
        if (g.edge_target(d.trace[i]) != g.edge_source(d.trace[i + 1])) return false;
    return g.edge_source(d.trace.front()) == d.source && g.edge_target(d.trace.back()) == d.range;
}

bool diagram_precedes(const Graph& g, const Diagram& a, const Diagram& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        auto ka = g.edge_sort_key(a.trace[i]);
        auto kb = g.edge_sort_key(b.trace[i]);
        if (ka != kb) return ka < kb;
    }
    if (a.source != b.source) return a.source < b.source;
    return a.range < b.range;
}

DiagramSet DiagramSet::collect(const Graph& g, std::vector<Diagram> items) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    DiagramSet s;
    s.lookup_ = items;
    std::sort(items.begin(), items.end(),
              [&](const Diagram& a, const Diagram& b) { return diagram_precedes(g, a, b); });
    s.items_ = std::move(items);
    return s;
}

bool DiagramSet::contains(const Diagram& d) const {
    return std::binary_search(lookup_.begin(), lookup_.end(), d);
}

std::vector<Diagram> DiagramSet::with_length(std::size_t k) const {
    std::vector<Diagram> out;
    for (const Diagram& d : items_)
        if (d.length() == k) out.push_back(d);
    return out;
}

std::size_t DiagramSet::max_length() const {
    std::size_t m = 0;
    for (const Diagram& d : items_) m = std::max(m, d.length());
    return m;
}

namespace {

Diagram extend(const Graph& g, const Diagram& d, int e) {
    Diagram out = d;
    out.range = g.edge_target(e);
    if (std::find(out.trace.begin(), out.trace.end(), e) == out.trace.end())
        out.trace.push_back(e);
    return out;
}

}  // namespace

DiagramSet enumerate_diagrams(const Graph& g, std::size_t state_limit) {
    std::set<Diagram> seen;
    std::deque<Diagram> queue;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        Diagram d = Diagram::vertex(static_cast<int>(v));
        seen.insert(d);
        queue.push_back(d);
    }
    while (!queue.empty()) {
        Diagram d = queue.front();
        queue.pop_front();
        for (int e : g.out_edges(d.range)) {
            Diagram nd = extend(g, d, e);
            if (seen.insert(nd).second) {
                if (seen.size() > state_limit)
                    throw EnumerationLimitError("diagram enumeration exceeded " +
                                                std::to_string(state_limit) + " states");
                queue.push_back(nd);
            }
        }
    }
    return DiagramSet::collect(g, std::vector<Diagram>(seen.begin(), seen.end()));
}

DiagramSet enumerate_reduced_diagrams(const Graph& g, std::size_t state_limit) {
    // Reduced diagrams are the diagrams of cancellation-free words, i.e.
    // walks that never take an edge straight after its inverse partner.
    // That constraint depends only on the last edge, so state = (diagram,
    // last edge).
    using State = std::pair<Diagram, int>;
    std::set<State> seen;
    std::set<Diagram> found;
    std::deque<State> queue;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        State s{Diagram::vertex(static_cast<int>(v)), -1};
        seen.insert(s);
        found.insert(s.first);
        queue.push_back(s);
    }
    while (!queue.empty()) {
        auto [d, last] = queue.front();
        queue.pop_front();
        for (int e : g.out_edges(d.range)) {
            if (last >= 0) {
                auto partner = g.inverse_edge(last);
                if (partner && *partner == e) continue;
            }
            State ns{extend(g, d, e), e};
            if (seen.insert(ns).second) {
                if (seen.size() > state_limit)
                    throw EnumerationLimitError("reduced diagram enumeration exceeded " +
                                                std::to_string(state_limit) + " states");
                found.insert(ns.first);
                queue.push_back(ns);
            }
        }
    }
    return DiagramSet::collect(g, std::vector<Diagram>(found.begin(), found.end()));
}

bool tree_coincidence_check(const Graph& g, int max_len) {
    for (const Word& w : enumerate_words(g, max_len))
        if (!is_basic(g, w)) return false;
    return true;
}

std::string format_diagram(const Graph& g, const Diagram& d) {
    std::string s = g.vertices()[static_cast<std::size_t>(d.source)] + " -> " +
                    g.vertices()[static_cast<std::size_t>(d.range)] + " :";
    for (std::size_t i = 0; i < d.trace.size(); ++i)
        s += (i ? "." : " ") + g.edges()[static_cast<std::size_t>(d.trace[i])].id;
    return s;
}

Diagram parse_diagram(const Graph& g, std::string_view text) {
    auto arrow = text.find("->");
    auto colon = text.find(':');
    if (arrow == std::string_view::npos || colon == std::string_view::npos || colon < arrow)
        throw ParseError("expected '<src> -> <dst> : <trace>'", 1, 1);
    auto trim = [](std::string_view s) {
        std::size_t b = s.find_first_not_of(" \t");
        if (b == std::string_view::npos) return std::string_view{};
        std::size_t e = s.find_last_not_of(" \t");
        return s.substr(b, e - b + 1);
    };
    std::string src{trim(text.substr(0, arrow))};
    std::string dst{trim(text.substr(arrow + 2, colon - arrow - 2))};
    std::string_view tail = trim(text.substr(colon + 1));
    Diagram d;
    d.source = g.vertex_index(src);
    d.range = g.vertex_index(dst);
    if (!tail.empty()) {
        std::size_t pos = 0;
        while (pos <= tail.size()) {
            std::size_t dot = tail.find('.', pos);
            std::string tok{tail.substr(pos, dot == std::string_view::npos ? dot : dot - pos)};
            d.trace.push_back(g.edge_index(tok));
            if (dot == std::string_view::npos) break;
            pos = dot + 1;
        }
    } else if (d.source != d.range) {
        throw ParseError("vertex diagram with distinct endpoints", 1,
                         static_cast<int>(colon) + 1);
    }
    return d;
}

}  // namespace graphmeasure
