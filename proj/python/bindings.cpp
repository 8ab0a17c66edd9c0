#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphmeasure/cli.hpp"
#include "graphmeasure/expr.hpp"
#include "graphmeasure/integration.hpp"
#include "graphmeasure/measure.hpp"

namespace py = pybind11;
using namespace graphmeasure;

namespace {

WeightMode weight_mode(bool weights) {
    return weights ? WeightMode::weighted : WeightMode::unweighted;
}

DiagramMode diagram_mode(const std::string& mode) {
    if (mode == "full") return DiagramMode::full;
    if (mode == "generator") return DiagramMode::generator;
    throw DomainError("mode must be 'full' or 'generator'");
}

std::vector<std::string> diagram_literals(const Graph& host, const std::vector<Diagram>& ds) {
    std::vector<std::string> out;
    out.reserve(ds.size());
    for (const Diagram& d : ds) out.push_back(format_diagram(host, d));
    return out;
}

std::vector<Diagram> resolve_set(const MeasureContext& ctx,
                                 const std::vector<std::string>& literals) {
    std::vector<Diagram> out;
    out.reserve(literals.size());
    for (const std::string& s : literals) out.push_back(ctx.resolve_reduced(s));
    return out;
}

std::vector<Word> resolve_words(const MeasureContext& ctx,
                                const std::vector<std::string>& literals) {
    std::vector<Word> out;
    out.reserve(literals.size());
    for (const std::string& s : literals) out.push_back(parse_word(ctx.shadowed(), s));
    return out;
}

}  // namespace

PYBIND11_MODULE(_graphmeasure, m) {
    m.doc() = "Exact measure spaces and integrals of finite directed graphs";

    py::register_exception<DomainError>(m, "GraphDomainError");
    py::register_exception<ParseError>(m, "GraphParseError");

    py::class_<Graph>(m, "Graph")
        .def_static("parse", &Graph::parse, py::arg("text"))
        .def("serialize", &Graph::serialize)
        .def("vertices", [](const Graph& g) { return g.vertices(); })
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::tuple<std::string, std::string, std::string, std::string>> out;
                 for (const Edge& e : g.edges())
                     out.emplace_back(e.id, e.src, e.dst, e.weight.str());
                 return out;
             })
        .def("in_degree", [](const Graph& g, const std::string& v) { return g.in_degree(v); })
        .def("out_degree", [](const Graph& g, const std::string& v) { return g.out_degree(v); })
        .def("degree", [](const Graph& g, const std::string& v) { return g.degree(v); })
        .def("shadow", &Graph::shadow)
        .def("shadowed", &Graph::shadowed)
        .def("full_subgraph", &Graph::full_subgraph, py::arg("vertices"))
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph " + std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.edge_count()) + " edges>";
        });

    py::class_<MeasureContext>(m, "MeasureContext")
        .def(py::init([](const Graph& g, const std::string& mode, bool weights) {
                 return MeasureContext(g, weight_mode(weights), diagram_mode(mode));
             }),
             py::arg("graph"), py::arg("mode") = "full", py::arg("weights") = true)
        .def("diagrams",
             [](const MeasureContext& ctx) {
                 return diagram_literals(ctx.graph(), ctx.diagrams().items());
             })
        .def("reduced_diagrams",
             [](const MeasureContext& ctx) {
                 return diagram_literals(ctx.shadowed(), ctx.reduced_diagrams().items());
             })
        .def("active_diagrams",
             [](const MeasureContext& ctx) {
                 return diagram_literals(ctx.shadowed(), ctx.active_reduced());
             })
        .def("degree_measure",
             [](const MeasureContext& ctx, const std::vector<std::string>& vs) {
                 return ctx.degree_measure_ids(vs).str();
             },
             py::arg("vertices"))
        .def("measure",
             [](const MeasureContext& ctx, const std::vector<std::string>& set) {
                 auto b = ctx.mu_reduced_breakdown(resolve_set(ctx, set));
                 py::dict out;
                 out["vertex_part"] = b.vertex_part.str();
                 out["path_part"] = b.path_part.str();
                 out["total"] = b.total.str();
                 return out;
             },
             py::arg("set"))
        .def("integrate",
             [](const MeasureContext& ctx, const std::string& expr_text) {
                 FunctionExpr e = parse_expression(ctx.shadowed(), expr_text);
                 SimpleFunction f = evaluate_expression(ctx, e);
                 py::dict out;
                 out["support"] = diagram_literals(ctx.shadowed(), f.support_union());
                 out["total"] = integrate(ctx, f).str();
                 return out;
             },
             py::arg("expr"))
        .def("monomial_integral",
             [](const MeasureContext& ctx, int n) {
                 return integrate(ctx, monomial(ctx, n)).str();
             },
             py::arg("n"))
        .def("polynomial_integral",
             [](const MeasureContext& ctx, const std::vector<std::string>& coeffs,
                bool endpoint_edge_terms) {
                 std::vector<Rational> a;
                 for (const std::string& c : coeffs) a.push_back(Rational::parse(c));
                 return polynomial_integral(ctx, a,
                                            endpoint_edge_terms
                                                ? EdgeTermConvention::endpoint_vertices
                                                : EdgeTermConvention::verbatim)
                     .str();
             },
             py::arg("coeffs"), py::arg("endpoint_edge_terms") = false)
        .def("extended_mu",
             [](const MeasureContext& ctx, const std::vector<std::string>& words) {
                 return ctx.extended_mu(resolve_words(ctx, words)).str();
             },
             py::arg("words"))
        .def("extended_report",
             [](const MeasureContext& ctx, const std::string& word, int max_len) {
                 ExtendedReport r = extended_neighborhood_integral(
                     ctx, parse_word(ctx.shadowed(), word), max_len);
                 py::dict out;
                 std::vector<std::string> strata;
                 for (const Rational& c : r.strata) strata.push_back(c.str());
                 out["strata"] = strata;
                 out["status"] = r.status == ExtendedReport::Status::converged   ? "converged"
                                 : r.status == ExtendedReport::Status::diverging ? "diverging"
                                                                                 : "inconclusive";
                 out["partial"] = r.value.str();
                 return out;
             },
             py::arg("word"), py::arg("max_len") = 8)
        .def("subgraph_measure",
             [](const MeasureContext& ctx, const std::vector<std::string>& vertices,
                const std::vector<std::string>& set, bool strict, bool degrees_in_subgraph) {
                 Graph h = ctx.graph().full_subgraph(vertices);
                 auto s = resolve_set(ctx, set);
                 Rational r = strict ? ctx.restricted_measure(h, s)
                                     : ctx.subgraph_measure(h, s, degrees_in_subgraph);
                 return r.str();
             },
             py::arg("vertices"), py::arg("set"), py::arg("strict") = false,
             py::arg("degrees_in_subgraph") = true);

    m.def("find_isomorphism",
          [](const Graph& g1, const Graph& g2) -> py::object {
              auto iso = find_isomorphism(g1, g2);
              if (!iso) return py::none();
              py::dict out;
              py::dict vm, em;
              for (std::size_t v = 0; v < g1.vertex_count(); ++v)
                  vm[py::str(g1.vertices()[v])] =
                      g2.vertices()[static_cast<std::size_t>(iso->vertex_map[v])];
              for (std::size_t e = 0; e < g1.edge_count(); ++e)
                  em[py::str(g1.edges()[e].id)] =
                      g2.edges()[static_cast<std::size_t>(iso->edge_map[e])].id;
              out["vertices"] = vm;
              out["edges"] = em;
              return out;
          },
          py::arg("g1"), py::arg("g2"));

    m.def("measure_equivalence",
          [](const Graph& g1, const Graph& g2, bool weights) -> py::object {
              auto cert = measure_spaces_equivalent(g1, g2, weight_mode(weights));
              if (!cert) return py::none();
              py::dict out;
              out["via_inversion"] = cert->via_inversion;
              out["measure_preserving"] = cert->measure_preserving;
              out["singletons"] = cert->singleton_count;
              py::dict vm, em;
              for (const auto& [a, b] : cert->vertex_map) vm[py::str(a)] = b;
              for (const auto& [a, b] : cert->signed_edge_map) em[py::str(a)] = b;
              out["vertex_map"] = vm;
              out["edge_map"] = em;
              return out;
          },
          py::arg("g1"), py::arg("g2"), py::arg("weights") = true);

    m.def("cli",
          [](const std::vector<std::string>& args) {
              CliResult r = cli_run(args);
              py::dict out;
              out["exit_code"] = r.exit_code;
              out["stdout"] = r.out;
              out["stderr"] = r.err;
              return out;
          },
          py::arg("args"));
}
