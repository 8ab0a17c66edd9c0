#pragma once

// Test-only fixtures and brute-force oracles. Everything here recomputes
// results straight from the definitions (word sweeps, definitional measure
// sums) and stays independent of the enumeration and measure code paths it
// is used to check.

#include <random>
#include <set>
#include <vector>

#include "graphmeasure/diagram.hpp"
#include "graphmeasure/graph.hpp"
#include "graphmeasure/measure.hpp"
#include "graphmeasure/word.hpp"

namespace gmtest {

using namespace graphmeasure;

// Out-tree: e1: v1->v2, e2: v1->v3.
inline Graph tree_graph() {
    return Graph({"v1", "v2", "v3"},
                 {{"e1", "v1", "v2", Rational(1)}, {"e2", "v1", "v3", Rational(1)}});
}

// Directed triangle: e1: v1->v2, e2: v2->v3, e3: v3->v1.
inline Graph triangle_graph() {
    return Graph({"v1", "v2", "v3"}, {{"e1", "v1", "v2", Rational(1)},
                                      {"e2", "v2", "v3", Rational(1)},
                                      {"e3", "v3", "v1", Rational(1)}});
}

inline Graph loop_graph(Rational w = Rational(1)) {
    return Graph({"v"}, {{"l", "v", "v", w}});
}

inline Graph two_cycle_graph() {
    return Graph({"a", "b"}, {{"f", "a", "b", Rational(1)}, {"g", "b", "a", Rational(1)}});
}

inline std::vector<Graph> named_test_graphs() {
    return {tree_graph(), triangle_graph(), loop_graph(), two_cycle_graph()};
}

// Uniform random graph with <= max_v vertices and <= max_e edges; weights
// are small random rationals in (0,1].
inline Graph random_graph(std::mt19937& rng, int max_v, int max_e, bool weighted = false) {
    int nv = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_v));
    int ne = static_cast<int>(rng() % static_cast<unsigned>(max_e + 1));
    std::vector<std::string> vs;
    for (int i = 0; i < nv; ++i) vs.push_back("v" + std::to_string(i + 1));
    std::vector<Edge> es;
    for (int i = 0; i < ne; ++i) {
        std::string src = vs[rng() % vs.size()];
        std::string dst = vs[rng() % vs.size()];
        Rational w{1};
        if (weighted) {
            std::int64_t q = 1 + static_cast<std::int64_t>(rng() % 4);
            std::int64_t p = 1 + static_cast<std::int64_t>(rng() % static_cast<unsigned>(q));
            w = Rational(p, q);
        }
        es.push_back(Edge{"e" + std::to_string(i + 1), src, dst, w});
    }
    return Graph(std::move(vs), std::move(es));
}

// Random graph whose reduced diagram set stays desk-sized; dense random
// multigraphs can have combinatorially huge trace sets, so those samples
// are rejected and redrawn.
inline Graph random_desk_graph(std::mt19937& rng, int max_v, int max_e, bool weighted = false) {
    for (;;) {
        Graph g = random_graph(rng, max_v, max_e, weighted);
        try {
            enumerate_reduced_diagrams(g.shadowed(), 20000);
            return g;
        } catch (const EnumerationLimitError&) {
        }
    }
}

// Random directed tree: each non-root vertex connects to an earlier vertex,
// with a random orientation per edge.
inline Graph random_tree(std::mt19937& rng, int max_v) {
    int nv = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_v - 1));
    std::vector<std::string> vs;
    for (int i = 0; i < nv; ++i) vs.push_back("v" + std::to_string(i + 1));
    std::vector<Edge> es;
    for (int i = 1; i < nv; ++i) {
        std::string parent = vs[rng() % static_cast<unsigned>(i)];
        std::string child = vs[static_cast<std::size_t>(i)];
        bool down = rng() % 2 == 0;
        es.push_back(Edge{"e" + std::to_string(i), down ? parent : child,
                          down ? child : parent, Rational(1)});
    }
    return Graph(std::move(vs), std::move(es));
}

// Brute-force diagram set: the image of the diagram map over every word up
// to max_len.
inline std::set<Diagram> oracle_diagrams(const Graph& g, int max_len) {
    std::set<Diagram> out;
    for (const Word& w : enumerate_words(g, max_len)) out.insert(diagram_of(g, w));
    return out;
}

inline std::set<Diagram> oracle_reduced_diagrams(const Graph& g, int max_len) {
    std::set<Diagram> out;
    for (const Word& w : enumerate_words(g, max_len)) out.insert(reduced_diagram_of(g, w));
    return out;
}

// Definitional reduced measure: degree sums read off the shadowed edge
// list, weights multiplied along the trace by edge id lookup.
inline Rational oracle_mu(const Graph& g, const Graph& shadowed, const std::set<Diagram>& s,
                          bool weighted) {
    Rational total;
    for (const Diagram& d : s) {
        if (d.is_vertex_diagram()) {
            int deg = 0;
            for (const Edge& e : shadowed.edges()) {
                if (e.src == g.vertices()[static_cast<std::size_t>(d.source)]) ++deg;
                if (e.dst == g.vertices()[static_cast<std::size_t>(d.source)]) ++deg;
            }
            total += Rational(deg, static_cast<std::int64_t>(g.vertex_count()));
        } else {
            Rational w{1};
            if (weighted)
                for (int e : d.trace) w *= shadowed.edges()[static_cast<std::size_t>(e)].weight;
            total += w * Rational(static_cast<std::int64_t>(d.length()));
        }
    }
    return total;
}

// Random admissible walk of exactly len edges, if one exists from a random
// start; empty word when the walk dies.
inline Word random_word(std::mt19937& rng, const Graph& g, int len) {
    if (g.vertex_count() == 0) return Word();
    int v = static_cast<int>(rng() % g.vertex_count());
    std::vector<int> edges;
    for (int i = 0; i < len; ++i) {
        const std::vector<int>& outs = g.out_edges(v);
        if (outs.empty()) break;
        int e = outs[rng() % outs.size()];
        edges.push_back(e);
        v = g.edge_target(e);
    }
    if (edges.empty()) return Word::vertex(v);
    return Word::path(g, std::move(edges));
}

// Reduction oracle: cancel a randomly chosen adjacent inverse pair until
// none is left. Confluence says this must land on the same normal form as
// the library's left-to-right scan.
inline Word randomized_reduce(std::mt19937& rng, const Graph& g, const Word& w) {
    if (!w.is_path()) return w;
    std::vector<int> edges = w.edges();
    for (;;) {
        std::vector<std::size_t> cancellable;
        for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
            auto partner = g.inverse_edge(edges[i]);
            if (partner && *partner == edges[i + 1]) cancellable.push_back(i);
        }
        if (cancellable.empty()) break;
        std::size_t at = cancellable[rng() % cancellable.size()];
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(at),
                    edges.begin() + static_cast<std::ptrdiff_t>(at) + 2);
    }
    if (edges.empty()) return Word::vertex(source_of(g, w));
    return Word::path(g, std::move(edges));
}

}  // namespace gmtest
