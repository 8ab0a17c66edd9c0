#include "graphmeasure/measure.hpp"

#include <algorithm>
#include <set>

#include "graphmeasure/errors.hpp"

namespace graphmeasure {

MeasureContext::MeasureContext(Graph g, WeightMode wm, DiagramMode dm, DegreeConvention dc)
    : graph_(std::move(g)),
      shadowed_(graph_.shadowed()),
      diagrams_(enumerate_diagrams(graph_)),
      reduced_(enumerate_reduced_diagrams(shadowed_)),
      weight_mode_(wm),
      diagram_mode_(dm),
      degree_convention_(dc) {
    if (diagram_mode_ == DiagramMode::full) {
        active_ = reduced_.items();
    } else {
        for (const Diagram& d : reduced_.items())
            if (d.length() <= 1) active_.push_back(d);
    }
}

std::vector<Diagram> MeasureContext::reduced_loops() const {
    std::vector<Diagram> out;
    for (const Diagram& d : active_)
        if (d.length() >= 1 && d.source == d.range) out.push_back(d);
    return out;
}

Rational MeasureContext::degree_term(int v, const Graph& in) const {
    return Rational(in.degree_at(v), static_cast<std::int64_t>(graph_.vertex_count()));
}

Rational MeasureContext::degree_measure(const std::vector<int>& vertex_indices) const {
    std::set<int> seen;
    Rational total;
    for (int v : vertex_indices) {
        if (v < 0 || static_cast<std::size_t>(v) >= graph_.vertex_count())
            throw DomainError("vertex index out of range");
        if (seen.insert(v).second) total += degree_term(v, shadowed_);
    }
    return total;
}

Rational MeasureContext::degree_measure_ids(const std::vector<std::string>& vertex_ids) const {
    std::vector<int> idx;
    idx.reserve(vertex_ids.size());
    for (const std::string& id : vertex_ids) idx.push_back(graph_.vertex_index(id));
    return degree_measure(idx);
}

long long MeasureContext::diagram_length(const std::vector<Diagram>& s) const {
    long long total = 0;
    std::set<Diagram> seen;
    for (const Diagram& d : s)
        if (seen.insert(d).second) total += static_cast<long long>(d.length());
    return total;
}

Rational MeasureContext::weight_of(const Diagram& d) const {
    if (weight_mode_ == WeightMode::unweighted) return Rational(1);
    Rational w{1};
    for (int e : d.trace) w *= shadowed_.edge_weight(e);
    return w;
}

Rational MeasureContext::weighted_length(const std::vector<Diagram>& s) const {
    Rational total;
    std::set<Diagram> seen;
    for (const Diagram& d : s)
        if (seen.insert(d).second)
            total += weight_of(d) * Rational(static_cast<std::int64_t>(d.length()));
    return total;
}

MeasureContext::Breakdown MeasureContext::mu_reduced_breakdown(
    const std::vector<Diagram>& s) const {
    Breakdown b;
    std::set<Diagram> seen;
    for (const Diagram& d : s) {
        if (!reduced_.contains(d))
            throw DomainError("diagram '" + format_diagram(shadowed_, d) +
                              "' is outside the reduced diagram set");
        if (!seen.insert(d).second) continue;
        if (d.is_vertex_diagram())
            b.vertex_part += degree_term(d.source, shadowed_);
        else
            b.path_part += weight_of(d) * Rational(static_cast<std::int64_t>(d.length()));
    }
    b.total = b.vertex_part + b.path_part;
    return b;
}

Rational MeasureContext::mu_reduced(const std::vector<Diagram>& s) const {
    return mu_reduced_breakdown(s).total;
}

Rational MeasureContext::mu_plain(const std::vector<Diagram>& s) const {
    const Graph& degree_graph =
        degree_convention_ == DegreeConvention::shadowed_degrees ? shadowed_ : graph_;
    Rational total;
    std::set<Diagram> seen;
    for (const Diagram& d : s) {
        if (!diagrams_.contains(d))
            throw DomainError("diagram '" + format_diagram(graph_, d) +
                              "' is outside the diagram set");
        if (!seen.insert(d).second) continue;
        if (d.is_vertex_diagram())
            total += degree_term(d.source, degree_graph);
        else
            total += weight_of(d) * Rational(static_cast<std::int64_t>(d.length()));
    }
    return total;
}

void MeasureContext::require_full_subgraph(const Graph& h) const {
    std::set<std::string> hv(h.vertices().begin(), h.vertices().end());
    for (const std::string& v : h.vertices())
        if (!graph_.has_vertex(v)) throw DomainError("subgraph vertex '" + v + "' not in graph");
    // Full subgraph: exactly the ambient edges with both endpoints inside.
    std::set<std::string> he;
    for (const Edge& e : h.edges()) {
        he.insert(e.id);
        int idx = graph_.find_edge(e.id);
        if (idx < 0 || graph_.edges()[static_cast<std::size_t>(idx)] != e)
            throw DomainError("subgraph edge '" + e.id + "' does not match the graph");
    }
    for (const Edge& e : graph_.edges())
        if (hv.count(e.src) && hv.count(e.dst) && !he.count(e.id))
            throw DomainError("not a full subgraph: edge '" + e.id + "' is missing");
}

bool MeasureContext::in_subgraph_domain(const Graph& h, const Diagram& d) const {
    if (d.is_vertex_diagram())
        return h.has_vertex(graph_.vertices()[static_cast<std::size_t>(d.source)]);
    for (int e : d.trace) {
        const std::string& id = shadowed_.edges()[static_cast<std::size_t>(e)].id;
        if (!h.has_edge(Graph::base_id(id))) return false;
    }
    return true;
}

Rational MeasureContext::subgraph_measure(const Graph& h, const std::vector<Diagram>& s,
                                          bool degrees_in_subgraph) const {
    require_full_subgraph(h);
    if (h.vertex_count() == 0) {
        for (const Diagram& d : s)
            if (!reduced_.contains(d)) throw DomainError("diagram outside the reduced diagram set");
        return Rational(0);
    }
    Graph h_shadowed = h.shadowed();
    Rational total;
    std::set<Diagram> seen;
    for (const Diagram& d : s) {
        if (!reduced_.contains(d))
            throw DomainError("diagram '" + format_diagram(shadowed_, d) +
                              "' is outside the reduced diagram set");
        if (!seen.insert(d).second) continue;
        if (!in_subgraph_domain(h, d)) continue;
        if (d.is_vertex_diagram()) {
            const std::string& id = graph_.vertices()[static_cast<std::size_t>(d.source)];
            const Graph& deg_graph = degrees_in_subgraph ? h_shadowed : shadowed_;
            total += Rational(deg_graph.degree(id),
                              static_cast<std::int64_t>(h.vertex_count()));
        } else {
            total += weight_of(d) * Rational(static_cast<std::int64_t>(d.length()));
        }
    }
    return total;
}

Rational MeasureContext::restricted_measure(const Graph& h, const std::vector<Diagram>& s) const {
    require_full_subgraph(h);
    std::vector<Diagram> kept;
    for (const Diagram& d : s) {
        if (!reduced_.contains(d))
            throw DomainError("diagram '" + format_diagram(shadowed_, d) +
                              "' is outside the reduced diagram set");
        if (in_subgraph_domain(h, d)) kept.push_back(d);
    }
    return mu_reduced(kept);
}

Rational MeasureContext::extended_mu(const std::vector<Word>& words) const {
    std::set<Word> distinct(words.begin(), words.end());
    Rational total;
    for (const Word& w : distinct) {
        if (w.is_empty()) continue;  // μ(∅) = 0
        if (w.is_vertex()) {
            total += degree_term(w.vertex_index(), shadowed_);
        } else {
            Diagram d = reduced_diagram_of(shadowed_, w);
            total += weight_of(d) * Rational(static_cast<std::int64_t>(d.length()));
        }
    }
    return total;
}

Diagram MeasureContext::resolve_reduced(std::string_view word_literal) const {
    return reduced_diagram_of(shadowed_, parse_word(shadowed_, word_literal));
}

std::optional<EquivalenceCertificate> measure_spaces_equivalent(const Graph& g1, const Graph& g2,
                                                               WeightMode wm) {
    bool inverted = false;
    auto iso = find_isomorphism(g1, g2);
    Graph target = g2;
    if (!iso) {
        // A graph and its shadow generate the same shadowed graph, so an
        // isomorphism onto the shadow still induces a signed-edge bijection.
        target = g2.shadow();
        iso = find_isomorphism(g1, target);
        if (!iso) return std::nullopt;
        inverted = true;
    }

    Graph s1 = g1.shadowed();
    Graph s2 = g2.shadowed();
    const std::size_t m1 = g1.edge_count();

    // Signed-edge bijection E(g1^) -> E(g2^): forward edges follow the
    // isomorphism (toggled through the marker on the inverted route), and
    // shadow copies map to the partners of the forward images.
    std::vector<int> sigma(2 * m1, -1);
    for (std::size_t e = 0; e < m1; ++e) {
        const std::string& image_id =
            target.edges()[static_cast<std::size_t>(iso->edge_map[e])].id;
        sigma[e] = s2.edge_index(image_id);
        sigma[m1 + e] = s2.edge_index(Graph::inverse_id(image_id));
    }
    std::vector<int> vmap(g1.vertex_count());
    for (std::size_t v = 0; v < g1.vertex_count(); ++v) vmap[v] = iso->vertex_map[v];

    MeasureContext ctx1(g1, wm);
    MeasureContext ctx2(g2, wm);
    const DiagramSet& d1 = ctx1.reduced_diagrams();
    const DiagramSet& d2 = ctx2.reduced_diagrams();

    EquivalenceCertificate cert;
    cert.via_inversion = inverted;
    for (std::size_t v = 0; v < g1.vertex_count(); ++v)
        cert.vertex_map.emplace_back(g1.vertices()[v],
                                     g2.vertices()[static_cast<std::size_t>(vmap[v])]);
    for (std::size_t e = 0; e < sigma.size(); ++e)
        cert.signed_edge_map.emplace_back(s1.edges()[e].id,
                                          s2.edges()[static_cast<std::size_t>(sigma[e])].id);
    cert.singleton_count = d1.size();

    bool ok = d1.size() == d2.size();
    for (const Diagram& d : d1.items()) {
        if (!ok) break;
        Diagram image;
        image.source = vmap[static_cast<std::size_t>(d.source)];
        image.range = vmap[static_cast<std::size_t>(d.range)];
        for (int t : d.trace) image.trace.push_back(sigma[static_cast<std::size_t>(t)]);
        ok = d2.contains(image) && ctx1.mu_reduced({d}) == ctx2.mu_reduced({image});
    }
    cert.measure_preserving = ok;
    return cert;
}

}  // namespace graphmeasure
