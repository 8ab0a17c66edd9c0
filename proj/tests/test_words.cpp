#include <doctest.h>

#include <random>
#include <set>

#include "graphmeasure/word.hpp"
#include "oracles.hpp"

using namespace graphmeasure;
using namespace gmtest;

TEST_SUITE_BEGIN("words");

TEST_CASE("source and range") {
    Graph tree = tree_graph();
    Word e1 = parse_word(tree, "e1");
    CHECK(tree.vertices()[static_cast<std::size_t>(source_of(tree, e1))] == "v1");
    CHECK(tree.vertices()[static_cast<std::size_t>(range_of(tree, e1))] == "v2");

    Word v = Word::vertex(1);
    CHECK(source_of(tree, v) == 1);
    CHECK(range_of(tree, v) == 1);

    Graph tri = triangle_graph();
    Word e1e2 = parse_word(tri, "e1.e2");
    CHECK(tri.vertices()[static_cast<std::size_t>(range_of(tri, e1e2))] == "v3");

    CHECK_THROWS_AS(source_of(tree, Word()), DomainError);
    CHECK_THROWS_AS(range_of(tree, Word()), DomainError);
}

TEST_CASE("concat composes admissible words and absorbs mismatches") {
    Graph tri = triangle_graph();
    Word e1 = parse_word(tri, "e1");
    Word e2 = parse_word(tri, "e2");
    CHECK(concat(tri, e1, e2) == parse_word(tri, "e1.e2"));
    CHECK(concat(tri, Word::vertex(0), e1) == e1);
    CHECK(concat(tri, e1, Word::vertex(0)).is_empty());
    CHECK(concat(tri, e1, e1).is_empty());
    CHECK(concat(tri, Word(), e1).is_empty());
    CHECK(concat(tri, e1, Word()).is_empty());
    CHECK(concat(tri, Word::vertex(0), Word::vertex(0)) == Word::vertex(0));
    CHECK(concat(tri, Word::vertex(0), Word::vertex(1)).is_empty());
}

TEST_CASE("concat is associative with absorption") {
    // length 4 on the shadowed tree, length 3 on the larger shadowed triangle
    for (auto& [base, len] : std::vector<std::pair<Graph, int>>{{tree_graph(), 4},
                                                                {triangle_graph(), 3}}) {
        Graph g = base.shadowed();
        std::vector<Word> words = enumerate_words(g, len);
        words.push_back(Word());
        for (const Word& a : words)
            for (const Word& b : words)
                for (const Word& c : words)
                    CHECK(concat(g, concat(g, a, b), c) == concat(g, a, concat(g, b, c)));
    }
}

TEST_CASE("inverse reverses and flips") {
    Graph s = tree_graph().shadowed();
    CHECK(inverse_word(s, parse_word(s, "e1")) == parse_word(s, "e1^-1"));
    CHECK(inverse_word(s, parse_word(s, "e1^-1")) == parse_word(s, "e1"));
    CHECK(inverse_word(s, Word::vertex(2)) == Word::vertex(2));

    Graph st = triangle_graph().shadowed();
    CHECK(inverse_word(st, parse_word(st, "e1.e2")) == parse_word(st, "e2^-1.e1^-1"));

    CHECK_THROWS_AS(inverse_word(tree_graph(), parse_word(tree_graph(), "e1")), DomainError);
}

TEST_CASE("inverse is an anti-homomorphism") {
    Graph g = triangle_graph().shadowed();
    std::vector<Word> words = enumerate_words(g, 3);
    for (const Word& a : words) {
        CHECK(inverse_word(g, inverse_word(g, a)) == a);
        for (const Word& b : words) {
            Word ab = concat(g, a, b);
            if (ab.is_empty()) continue;
            CHECK(inverse_word(g, ab) == concat(g, inverse_word(g, b), inverse_word(g, a)));
        }
    }
}

TEST_CASE("reduce cancels adjacent inverse pairs") {
    Graph s = tree_graph().shadowed();
    CHECK(reduce_word(s, parse_word(s, "e1.e1^-1")) == Word::vertex(0));
    CHECK(reduce_word(s, parse_word(s, "e1")) == parse_word(s, "e1"));
    CHECK(reduce_word(s, parse_word(s, "e1.e1^-1.e1")) == parse_word(s, "e1"));
    CHECK(reduce_word(s, parse_word(s, "e1.e1^-1.e2")) == parse_word(s, "e2"));
    // nested cancellation: e1 (e2 e2^-1) e1^-1 -> vertex
    Graph st = triangle_graph().shadowed();
    CHECK(reduce_word(st, parse_word(st, "e1.e2.e2^-1.e1^-1")) == Word::vertex(0));
}

TEST_CASE("reduction is idempotent and confluent") {
    std::mt19937 rng(101);
    int checked = 0;
    while (checked < 1000) {
        Graph base = random_graph(rng, 4, 5);
        if (base.edge_count() == 0) continue;
        Graph g = base.shadowed();
        for (int i = 0; i < 10 && checked < 1000; ++i) {
            Word w = random_word(rng, g, 2 + static_cast<int>(rng() % 9));
            if (!w.is_path()) continue;
            Word normal = reduce_word(g, w);
            CHECK(reduce_word(g, normal) == normal);
            CHECK(randomized_reduce(rng, g, w) == normal);
            ++checked;
        }
    }
}

TEST_CASE("enumerate_words lists vertices first, then paths by length") {
    Graph tree = tree_graph();
    std::vector<Word> ws = enumerate_words(tree, 1);
    REQUIRE(ws.size() == 5);
    CHECK(ws[0] == Word::vertex(0));
    CHECK(ws[1] == Word::vertex(1));
    CHECK(ws[2] == Word::vertex(2));
    CHECK(ws[3] == parse_word(tree, "e1"));
    CHECK(ws[4] == parse_word(tree, "e2"));

    CHECK(enumerate_words(tree, 0).size() == tree.vertex_count());
    CHECK(enumerate_words(triangle_graph(), 3).size() == 12);

    for (std::size_t i = 0; i + 1 < ws.size(); ++i)
        CHECK_FALSE(word_precedes(tree, ws[i + 1], ws[i]));

    CHECK_THROWS_AS(enumerate_words(tree, -1), DomainError);
}

TEST_CASE("the mirror graph has as many words") {
    std::mt19937 rng(31);
    for (int i = 0; i < 15; ++i) {
        Graph g = random_graph(rng, 4, 5);
        for (int n = 0; n <= 4; ++n)
            CHECK(enumerate_words(g, n).size() == enumerate_words(g.shadow(), n).size());
    }
}

TEST_CASE("word literals round trip") {
    Graph s = triangle_graph().shadowed();
    for (const Word& w : enumerate_words(s, 3))
        CHECK(parse_word(s, format_word(s, w)) == w);
    Graph st = tree_graph().shadowed();
    CHECK(parse_word(st, " e1^-1.e2 ") == Word::path(st, {2, 1}));
    CHECK_THROWS_AS(parse_word(s, "bogus"), ParseError);
    CHECK_THROWS_AS(parse_word(s, "e1.e1"), ParseError);  // inadmissible on the triangle
    CHECK_THROWS_AS(parse_word(s, ""), ParseError);
}

TEST_SUITE_END();
