#include "graphmeasure/integration.hpp"

#include <algorithm>
#include <set>

#include "graphmeasure/errors.hpp"

namespace graphmeasure {

namespace {

std::vector<Diagram> sorted_unique(std::vector<Diagram> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

SimpleFunction SimpleFunction::indicator(std::vector<Diagram> support, Rational coeff) {
    SimpleFunction f;
    f.terms.push_back(Term{coeff, sorted_unique(std::move(support))});
    return f;
}

Rational SimpleFunction::value_at(const Diagram& d) const {
    Rational v;
    for (const Term& t : terms)
        if (std::binary_search(t.support.begin(), t.support.end(), d)) v += t.coeff;
    return v;
}

std::vector<Diagram> SimpleFunction::support_union() const {
    std::vector<Diagram> all;
    for (const Term& t : terms) all.insert(all.end(), t.support.begin(), t.support.end());
    return sorted_unique(std::move(all));
}

SimpleFunction& SimpleFunction::operator+=(const SimpleFunction& o) {
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    return *this;
}

SimpleFunction& SimpleFunction::operator-=(const SimpleFunction& o) {
    for (const Term& t : o.terms) terms.push_back(Term{-t.coeff, t.support});
    return *this;
}

SimpleFunction SimpleFunction::scaled(const Rational& c) const {
    SimpleFunction f;
    for (const Term& t : terms) f.terms.push_back(Term{t.coeff * c, t.support});
    return f;
}

SimpleFunction product(const SimpleFunction& a, const SimpleFunction& b) {
    SimpleFunction f;
    for (const SimpleFunction::Term& ta : a.terms) {
        for (const SimpleFunction::Term& tb : b.terms) {
            std::vector<Diagram> inter;
            std::set_intersection(ta.support.begin(), ta.support.end(), tb.support.begin(),
                                  tb.support.end(), std::back_inserter(inter));
            f.terms.push_back(SimpleFunction::Term{ta.coeff * tb.coeff, std::move(inter)});
        }
    }
    return f;
}

SimpleFunction constant_function(const MeasureContext& ctx, const Rational& c) {
    return SimpleFunction::indicator(ctx.active_reduced(), c);
}

Rational integrate(const MeasureContext& ctx, const SimpleFunction& g) {
    Rational total;
    for (const SimpleFunction::Term& t : g.terms) total += t.coeff * ctx.mu_reduced(t.support);
    return total;
}

std::vector<Diagram> neighborhood_union(const MeasureContext& ctx, int source, int range) {
    std::vector<Diagram> out;
    for (const Diagram& d : ctx.active_reduced())
        if (d.source == range || d.range == source) out.push_back(d);
    return sorted_unique(std::move(out));
}

NeighborhoodSets neighborhood_sets(const MeasureContext& ctx, const Word& w) {
    if (w.is_empty()) throw DomainError("the empty word has no neighborhoods");
    int src = source_of(ctx.shadowed(), w);
    int rng = range_of(ctx.shadowed(), w);
    NeighborhoodSets n;
    for (const Diagram& d : ctx.active_reduced()) {
        if (d.source == rng) n.left.push_back(d);
        if (d.range == src) n.right.push_back(d);
    }
    return n;
}

SimpleFunction g_w(const MeasureContext& ctx, const Word& w) {
    if (w.is_empty()) throw DomainError("the empty word has no neighborhood function");
    return SimpleFunction::indicator(neighborhood_union(
        ctx, source_of(ctx.shadowed(), w), range_of(ctx.shadowed(), w)));
}

SimpleFunction monomial(const MeasureContext& ctx, int n) {
    if (n == 0) throw DomainError("monomial exponent must be nonzero");
    SimpleFunction f;
    if (n == 1 || n == -1) {
        // Powers ±1 keep the whole reduced set as support. The neighborhood
        // of x^-1 swaps the roles of the endpoints of x.
        for (const Diagram& x : ctx.active_reduced()) {
            int a = n == 1 ? x.range : x.source;   // continuation endpoint
            int b = n == 1 ? x.source : x.range;   // predecessor endpoint
            f += SimpleFunction::indicator(neighborhood_union(ctx, b, a));
        }
        return f;
    }
    // |n| >= 2: only vertices and loops survive raising to the n-th power,
    // and the power of a loop reduces to the loop itself.
    for (const Diagram& x : ctx.active_reduced())
        if (x.is_vertex_diagram())
            f += SimpleFunction::indicator(neighborhood_union(ctx, x.source, x.source));
    for (const Diagram& l : ctx.reduced_loops())
        f += SimpleFunction::indicator(neighborhood_union(ctx, l.source, l.source));
    return f;
}

namespace {

Rational degree_one_sum(const MeasureContext& ctx, EdgeTermConvention convention) {
    Rational total;
    for (const Diagram& x : ctx.active_reduced()) {
        if (convention == EdgeTermConvention::endpoint_vertices && !x.is_vertex_diagram())
            total += ctx.degree_measure({x.source, x.range});
        else
            total += ctx.mu_reduced(neighborhood_union(ctx, x.source, x.range));
    }
    return total;
}

Rational degree_two_sum(const MeasureContext& ctx) {
    Rational total;
    for (const Diagram& x : ctx.active_reduced())
        if (x.is_vertex_diagram())
            total += ctx.mu_reduced(neighborhood_union(ctx, x.source, x.source));
    for (const Diagram& l : ctx.reduced_loops())
        total += ctx.mu_reduced(neighborhood_union(ctx, l.source, l.source));
    return total;
}

}  // namespace

Rational polynomial_integral(const MeasureContext& ctx, const std::vector<Rational>& coeffs,
                             EdgeTermConvention convention) {
    std::map<int, Rational> keyed;
    for (std::size_t i = 0; i < coeffs.size(); ++i) keyed[static_cast<int>(i)] = coeffs[i];
    return trigonometric_integral(ctx, keyed, convention);
}

Rational trigonometric_integral(const MeasureContext& ctx, const std::map<int, Rational>& coeffs,
                                EdgeTermConvention convention) {
    Rational a0, a1, rest;
    for (const auto& [n, a] : coeffs) {
        if (n == 0)
            a0 += a;
        else if (n == 1 || n == -1)
            a1 += a;
        else
            rest += a;
    }
    Rational total = a0 * ctx.mu_reduced(ctx.active_reduced());
    if (!a1.is_zero()) total += a1 * degree_one_sum(ctx, convention);
    if (!rest.is_zero()) total += rest * degree_two_sum(ctx);
    return total;
}

Rational non_loop_truncation(const MeasureContext& ctx, const Word& w,
                             const std::vector<Rational>& coeffs) {
    if (!w.is_path()) throw DomainError("expected a finite path word");
    int src = source_of(ctx.shadowed(), w);
    int rng = range_of(ctx.shadowed(), w);
    Rational neighborhood = ctx.mu_reduced(neighborhood_union(ctx, src, rng));
    Rational total;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (k == 0)
            total += coeffs[k] * ctx.mu_reduced(ctx.active_reduced());
        else if (k == 1 || src == rng)
            total += coeffs[k] * neighborhood;
        // k >= 2 on a non-loop word: w^k is empty, contributes nothing.
    }
    return total;
}

std::pair<SimpleFunction, SimpleFunction> split_parts(const MeasureContext& ctx,
                                                      const SimpleFunction& f) {
    // Group the domain by value; each distinct value becomes one term, so
    // both parts come out with pairwise disjoint supports.
    std::map<Rational, std::vector<Diagram>> by_value;
    for (const Diagram& d : ctx.reduced_diagrams().items()) {
        Rational v = f.value_at(d);
        if (!v.is_zero()) by_value[v].push_back(d);
    }
    SimpleFunction pos, neg;
    for (auto& [v, ds] : by_value) {
        if (v.is_negative())
            neg.terms.push_back(SimpleFunction::Term{-v, sorted_unique(std::move(ds))});
        else
            pos.terms.push_back(SimpleFunction::Term{v, sorted_unique(std::move(ds))});
    }
    return {std::move(pos), std::move(neg)};
}

Rational extended_integrate(const MeasureContext& ctx,
                            const std::vector<std::pair<Rational, std::vector<Word>>>& terms) {
    Rational total;
    for (const auto& [coeff, words] : terms) total += coeff * ctx.extended_mu(words);
    return total;
}

ExtendedReport extended_neighborhood_integral(const MeasureContext& ctx, const Word& w,
                                              int max_len) {
    if (max_len < 1) throw DomainError("max_len must be at least 1");
    if (w.is_empty()) throw DomainError("the empty word has no neighborhoods");
    const Graph& s = ctx.shadowed();
    int src = source_of(s, w);
    int rng = range_of(s, w);

    ExtendedReport report;
    report.strata.assign(static_cast<std::size_t>(max_len) + 1, Rational(0));
    // The truncation walks cancellation-free words only: words that merely
    // backtrack add nothing new length after length, while genuine loops
    // keep feeding powers into both neighborhoods, which is exactly the
    // divergence the report is after.
    for (const Word& u : enumerate_words(s, max_len)) {
        if (u.is_path() && reduce_word(s, u) != u) continue;
        if (source_of(s, u) != rng && range_of(s, u) != src) continue;
        report.strata[u.length()] += ctx.extended_mu({u});
    }
    for (const Rational& c : report.strata) report.value += c;

    auto zero = [&](int k) { return report.strata[static_cast<std::size_t>(k)].is_zero(); };
    if (zero(max_len) && zero(max_len - 1))
        report.status = ExtendedReport::Status::converged;
    else if (max_len >= 3 && !zero(max_len) && !zero(max_len - 1) && !zero(max_len - 2))
        report.status = ExtendedReport::Status::diverging;
    else
        report.status = ExtendedReport::Status::inconclusive;
    return report;
}

std::vector<Word> extended_support(const MeasureContext& ctx, int n, int max_len) {
    if (n == 0) throw DomainError("monomial exponent must be nonzero");
    const Graph& s = ctx.shadowed();
    std::vector<Word> all = enumerate_words(s, max_len);
    if (n == 1 || n == -1) return all;
    // Vertices plus genuine (cancellation-free) loop words; a word that
    // reduces to a vertex is not counted as a loop.
    std::vector<Word> out;
    for (const Word& u : all) {
        if (u.is_vertex())
            out.push_back(u);
        else if (source_of(s, u) == range_of(s, u) && reduce_word(s, u) == u)
            out.push_back(u);
    }
    return out;
}

Rational subgraph_integrate(const MeasureContext& ctx, const Graph& h, const Word& w) {
    if (w.is_empty()) throw DomainError("the empty word has no neighborhood function");
    return ctx.restricted_measure(
        h, neighborhood_union(ctx, source_of(ctx.shadowed(), w), range_of(ctx.shadowed(), w)));
}

}  // namespace graphmeasure
