#pragma once

#include <map>
#include <utility>
#include <vector>

#include "graphmeasure/measure.hpp"

namespace graphmeasure {

/// Finite rational-linear combination of indicator functions of diagram
/// sets; the value at a diagram is the sum of the coefficients of the terms
/// whose support contains it.
struct SimpleFunction {
    struct Term {
        Rational coeff;
        std::vector<Diagram> support;  // sorted, unique
    };
    std::vector<Term> terms;

    static SimpleFunction indicator(std::vector<Diagram> support, Rational coeff = Rational(1));

    Rational value_at(const Diagram& d) const;
    std::vector<Diagram> support_union() const;

    SimpleFunction& operator+=(const SimpleFunction& o);
    SimpleFunction& operator-=(const SimpleFunction& o);
    friend SimpleFunction operator+(SimpleFunction a, const SimpleFunction& b) { return a += b; }
    friend SimpleFunction operator-(SimpleFunction a, const SimpleFunction& b) { return a -= b; }
    SimpleFunction scaled(const Rational& c) const;
};

/// Indicator product: cross terms (a·b, S ∩ T).
SimpleFunction product(const SimpleFunction& a, const SimpleFunction& b);

/// The constant function c on the active reduced diagram set.
SimpleFunction constant_function(const MeasureContext& ctx, const Rational& c);

/// Integral against the reduced graph measure: Σ aₙ·μ(Sₙ), exact. On a
/// finite diagram set every function is simple, so direct summation agrees
/// with the supremum definition for nonnegative functions.
Rational integrate(const MeasureContext& ctx, const SimpleFunction& g);

/// Left/right admissibility neighborhoods of a word under the reduced
/// diagram map: left collects the diagrams a word can continue into
/// (source == range of w), right the diagrams that can precede it
/// (range == source of w); generator mode restricts both to V ∪ E.
struct NeighborhoodSets {
    std::vector<Diagram> left;
    std::vector<Diagram> right;
};
NeighborhoodSets neighborhood_sets(const MeasureContext& ctx, const Word& w);
std::vector<Diagram> neighborhood_union(const MeasureContext& ctx, int source, int range);

/// g_w: the indicator of left ∪ right.
SimpleFunction g_w(const MeasureContext& ctx, const Word& w);

/// Monomial family. n >= 1 or n <= -1; n == 0 is reserved for the constant
/// term of polynomials. Support is the full reduced set for |n| == 1 and
/// V ∪ loop_r for |n| >= 2 (powers of non-loop paths vanish).
SimpleFunction monomial(const MeasureContext& ctx, int n);

/// Edge-term convention for the degree-one slot of polynomial integrals:
/// verbatim takes μ of the full neighborhood of every diagram;
/// endpoint_vertices values positive-length terms by the degree measure of
/// their endpoint vertex set instead.
enum class EdgeTermConvention { verbatim, endpoint_vertices };

/// Polynomial Σ aₙ·gₙ with a₀ the constant coefficient:
/// a₀·μ(D_r) + a₁·I(g₁) + (Σ_{k≥2} aₖ)·I(g₂).
Rational polynomial_integral(const MeasureContext& ctx, const std::vector<Rational>& coeffs,
                             EdgeTermConvention convention = EdgeTermConvention::verbatim);

/// Trigonometric polynomial: coefficients keyed by exponent, negative
/// exponents allowed; a₀·μ(D_r) + (a₁+a₋₁)·I(g₁) + (Σ_{|n|≥2} aₙ)·I(g₂).
Rational trigonometric_integral(const MeasureContext& ctx,
                                const std::map<int, Rational>& coeffs,
                                EdgeTermConvention convention = EdgeTermConvention::verbatim);

/// Powers of a fixed word: for non-loop w every power beyond the first
/// integrates to zero; for loop w all powers share the neighborhood
/// measure. coeffs are a₀..a_N.
Rational non_loop_truncation(const MeasureContext& ctx, const Word& w,
                             const std::vector<Rational>& coeffs);

/// Pointwise split into positive and negative parts, re-expressed as
/// disjoint-support simple functions (f = f⁺ - f⁻ on the full reduced set).
std::pair<SimpleFunction, SimpleFunction> split_parts(const MeasureContext& ctx,
                                                      const SimpleFunction& f);

/// Extended integral of an explicit word-supported simple function:
/// Σ aₙ·μ(Sₙ) against the extended measure. Exact.
Rational extended_integrate(const MeasureContext& ctx,
                            const std::vector<std::pair<Rational, std::vector<Word>>>& terms);

/// Truncated extended neighborhood integral I(g_w) = μ(S_l ∪ S_r) with the
/// word sets cut at max_len, reported stratum by stratum. Loops feed their
/// own powers back into both neighborhoods, so the strata of a loop never
/// die out and the integral is infinite; the report classifies that as
/// "diverging" when the last three strata all contribute, and "converged"
/// when the last two contribute nothing.
struct ExtendedReport {
    enum class Status { converged, diverging, inconclusive };
    Rational value;                 // partial sum up to max_len
    Status status = Status::inconclusive;
    std::vector<Rational> strata;   // contribution per word length, 0..max_len
};
ExtendedReport extended_neighborhood_integral(const MeasureContext& ctx, const Word& w,
                                              int max_len);

/// Truncated support of the extended monomial gₙ: every word for |n| == 1,
/// vertices and loop words for |n| >= 2.
std::vector<Word> extended_support(const MeasureContext& ctx, int n, int max_len);

/// Integral of g_w against the subgraph measure:
/// μ_{G^}(D_r(H^) ∩ (left ∪ right)).
Rational subgraph_integrate(const MeasureContext& ctx, const Graph& h, const Word& w);

}  // namespace graphmeasure
