#include "graphmeasure/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphmeasure/errors.hpp"
#include "graphmeasure/expr.hpp"
#include "graphmeasure/integration.hpp"
#include "graphmeasure/measure.hpp"

namespace graphmeasure {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open graph file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CommonOptions {
    std::string graph_path;
    std::string mode = "full";
    std::string weights = "off";
    bool as_json = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_modes = true) {
    cmd->add_option("--graph", opts.graph_path, "graph file")->required();
    if (with_modes) {
        cmd->add_option("--mode", opts.mode, "diagram mode")
            ->check(CLI::IsMember({"full", "generator"}));
        cmd->add_option("--weights", opts.weights, "use file weights")
            ->check(CLI::IsMember({"on", "off"}));
    }
    cmd->add_flag("--json", opts.as_json, "emit JSON");
}

MeasureContext make_context(const CommonOptions& opts) {
    Graph g = Graph::parse(read_file(opts.graph_path));
    return MeasureContext(g,
                          opts.weights == "on" ? WeightMode::weighted : WeightMode::unweighted,
                          opts.mode == "generator" ? DiagramMode::generator : DiagramMode::full);
}

std::vector<std::string> split_set_literal(const std::string& text) {
    std::size_t open = text.find('{');
    std::size_t close = text.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw ParseError("set literal must be written as {a,b,c}", 1, 1);
    std::vector<std::string> items;
    std::string body = text.substr(open + 1, close - open - 1);
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string item = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
        std::size_t b = item.find_first_not_of(" \t");
        if (b != std::string::npos) {
            std::size_t e = item.find_last_not_of(" \t");
            items.push_back(item.substr(b, e - b + 1));
        } else if (comma != std::string::npos) {
            throw ParseError("empty element in set literal", 1, static_cast<int>(open + pos) + 2);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return items;
}

std::string join_diagrams(const Graph& g, const std::vector<Diagram>& ds) {
    std::string s;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (i) s += "; ";
        s += format_diagram(g, ds[i]);
    }
    return s;
}

json diagram_set_json(const Graph& g, const std::vector<Diagram>& items) {
    json out;
    out["diagrams"] = json::array();
    json by_length = json::object();
    json flagged = json::array();
    for (const Diagram& d : items) {
        std::string lit = format_diagram(g, d);
        out["diagrams"].push_back(lit);
        by_length[std::to_string(d.length())].push_back(lit);
        if (!trace_is_word(g, d)) flagged.push_back(lit);
    }
    out["by_length"] = std::move(by_length);
    out["flagged"] = std::move(flagged);
    return out;
}

void print_diagram_listing(std::ostream& os, const Graph& g, const std::vector<Diagram>& items) {
    for (const Diagram& d : items) {
        os << format_diagram(g, d);
        // The flag rides behind the format's comment character so the
        // literal part of every line still re-parses.
        if (!trace_is_word(g, d)) os << "  # trace is not itself a word";
        os << "\n";
    }
}

int run_diagrams(const CommonOptions& opts, bool reduced, std::ostream& os) {
    MeasureContext ctx = make_context(opts);
    const Graph& host = reduced ? ctx.shadowed() : ctx.graph();
    std::vector<Diagram> items = reduced ? ctx.active_reduced() : ctx.diagrams().items();
    if (opts.as_json)
        os << diagram_set_json(host, items).dump(2) << "\n";
    else
        print_diagram_listing(os, host, items);
    return 0;
}

int run_measure(const CommonOptions& opts, const std::string& set_literal, std::ostream& os) {
    MeasureContext ctx = make_context(opts);
    std::vector<Diagram> set;
    for (const std::string& item : split_set_literal(set_literal))
        set.push_back(ctx.resolve_reduced(item));
    auto breakdown = ctx.mu_reduced_breakdown(set);
    if (opts.as_json) {
        json out;
        out["set"] = json::array();
        for (const Diagram& d : set) out["set"].push_back(format_diagram(ctx.shadowed(), d));
        out["vertex_part"] = breakdown.vertex_part.str();
        out["path_part"] = breakdown.path_part.str();
        out["total"] = breakdown.total.str();
        os << out.dump(2) << "\n";
    } else {
        os << "set: " << join_diagrams(ctx.shadowed(), set) << "\n";
        os << "vertex_part: " << breakdown.vertex_part.str() << "\n";
        os << "path_part: " << breakdown.path_part.str() << "\n";
        os << "total: " << breakdown.total.str() << "\n";
    }
    return 0;
}

int run_integrate(const CommonOptions& opts, const std::string& expr_text, std::ostream& os) {
    MeasureContext ctx = make_context(opts);
    FunctionExpr expr = parse_expression(ctx.shadowed(), expr_text);
    SimpleFunction f = evaluate_expression(ctx, expr);
    Rational total = integrate(ctx, f);
    if (opts.as_json) {
        json out;
        out["support"] = json::array();
        for (const Diagram& d : f.support_union())
            out["support"].push_back(format_diagram(ctx.shadowed(), d));
        out["total"] = total.str();
        os << out.dump(2) << "\n";
    } else {
        os << "support: " << join_diagrams(ctx.shadowed(), f.support_union()) << "\n";
        os << "total: " << total.str() << "\n";
    }
    return 0;
}

int run_extended(const CommonOptions& opts, const std::string& set_literal,
                 const std::string& gw_literal, int max_len, std::ostream& os) {
    MeasureContext ctx = make_context(opts);
    if (!set_literal.empty()) {
        std::vector<Word> words;
        for (const std::string& item : split_set_literal(set_literal))
            words.push_back(parse_word(ctx.shadowed(), item));
        os << "total: " << ctx.extended_mu(words).str() << "\n";
        return 0;
    }
    Word w = parse_word(ctx.shadowed(), gw_literal);
    ExtendedReport report = extended_neighborhood_integral(ctx, w, max_len);
    for (std::size_t k = 0; k < report.strata.size(); ++k)
        os << "stratum " << k << ": " << report.strata[k].str() << "\n";
    const char* status = report.status == ExtendedReport::Status::converged     ? "converged"
                         : report.status == ExtendedReport::Status::diverging ? "diverging"
                                                                              : "inconclusive";
    os << "status: " << status << "\n";
    os << "partial: " << report.value.str() << "\n";
    return 0;
}

int run_shadow(const CommonOptions& opts, bool full, std::ostream& os) {
    Graph g = Graph::parse(read_file(opts.graph_path));
    os << (full ? g.shadowed() : g.shadow()).serialize();
    return 0;
}

int run_isocheck(const CommonOptions& opts, const std::string& other_path, std::ostream& os) {
    Graph g1 = Graph::parse(read_file(opts.graph_path));
    Graph g2 = Graph::parse(read_file(other_path));
    auto iso = find_isomorphism(g1, g2);
    auto cert = measure_spaces_equivalent(
        g1, g2, opts.weights == "on" ? WeightMode::weighted : WeightMode::unweighted);
    if (opts.as_json) {
        json out;
        out["isomorphic"] = iso.has_value();
        out["equivalent"] = cert.has_value() && cert->measure_preserving;
        if (cert) {
            out["via_inversion"] = cert->via_inversion;
            out["singletons"] = cert->singleton_count;
            json vm = json::object();
            for (const auto& [a, b] : cert->vertex_map) vm[a] = b;
            out["vertex_map"] = std::move(vm);
            json em = json::object();
            for (const auto& [a, b] : cert->signed_edge_map) em[a] = b;
            out["edge_map"] = std::move(em);
        }
        os << out.dump(2) << "\n";
    } else {
        os << "isomorphic: " << (iso ? "yes" : "no") << "\n";
        os << "equivalent: " << (cert && cert->measure_preserving ? "yes" : "no") << "\n";
        if (cert) {
            os << "via_inversion: " << (cert->via_inversion ? "yes" : "no") << "\n";
            os << "singletons: " << cert->singleton_count << "\n";
            for (const auto& [a, b] : cert->vertex_map) os << "vertex " << a << " -> " << b << "\n";
            for (const auto& [a, b] : cert->signed_edge_map)
                os << "edge " << a << " -> " << b << "\n";
        }
    }
    return 0;
}

int run_subgraph_measure(const CommonOptions& opts, const std::string& vertices_csv,
                         const std::string& set_literal, bool strict,
                         const std::string& degrees, std::ostream& os) {
    MeasureContext ctx = make_context(opts);
    std::vector<std::string> vs;
    std::size_t pos = 0;
    while (pos <= vertices_csv.size()) {
        std::size_t comma = vertices_csv.find(',', pos);
        std::string v =
            vertices_csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
        std::size_t b = v.find_first_not_of(" \t");
        if (b != std::string::npos) {
            std::size_t e = v.find_last_not_of(" \t");
            vs.push_back(v.substr(b, e - b + 1));
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    Graph h = ctx.graph().full_subgraph(vs);
    std::vector<Diagram> set;
    for (const std::string& item : split_set_literal(set_literal))
        set.push_back(ctx.resolve_reduced(item));
    Rational total = strict ? ctx.restricted_measure(h, set)
                            : ctx.subgraph_measure(h, set, degrees == "subgraph");
    os << "total: " << total.str() << "\n";
    return 0;
}

}  // namespace

CliResult cli_run(const std::vector<std::string>& args) {
    CliResult result;
    std::ostringstream out;

    CLI::App app{"graph measure spaces and graph integrals"};
    app.require_subcommand(1);

    CommonOptions diagrams_opts;
    CLI::App* diagrams_cmd = app.add_subcommand("diagrams", "enumerate the diagram set");
    add_common(diagrams_cmd, diagrams_opts);

    CommonOptions reduced_opts;
    CLI::App* reduced_cmd =
        app.add_subcommand("reduced-diagrams", "enumerate the reduced diagram set");
    add_common(reduced_cmd, reduced_opts);

    CommonOptions measure_opts;
    std::string measure_set;
    CLI::App* measure_cmd = app.add_subcommand("measure", "measure a diagram set");
    add_common(measure_cmd, measure_opts);
    measure_cmd->add_option("--set", measure_set, "set literal {w1,w2,...}")->required();

    CommonOptions integrate_opts;
    std::string integrate_expr;
    CLI::App* integrate_cmd = app.add_subcommand("integrate", "integrate a simple function");
    add_common(integrate_cmd, integrate_opts);
    integrate_cmd->add_option("--expr", integrate_expr, "function expression")->required();

    CommonOptions extended_opts;
    std::string extended_set, extended_gw;
    int extended_max_len = 8;
    CLI::App* extended_cmd =
        app.add_subcommand("extended-integrate", "integrate against the extended measure");
    add_common(extended_cmd, extended_opts);
    extended_cmd->add_option("--set", extended_set, "explicit word set {w1,w2,...}");
    extended_cmd->add_option("--gw", extended_gw, "neighborhood function of a word");
    extended_cmd->add_option("--max-len", extended_max_len, "truncation length");

    CommonOptions shadow_opts;
    bool shadow_full = false;
    CLI::App* shadow_cmd = app.add_subcommand("shadow", "emit the shadow graph");
    add_common(shadow_cmd, shadow_opts, /*with_modes=*/false);
    shadow_cmd->add_flag("--shadowed", shadow_full, "emit the shadowed graph instead");

    CommonOptions iso_opts;
    std::string iso_other;
    CLI::App* iso_cmd = app.add_subcommand("isocheck", "graph isomorphism and measure equivalence");
    add_common(iso_cmd, iso_opts);
    iso_cmd->add_option("--graph2", iso_other, "second graph file")->required();

    CommonOptions sub_opts;
    std::string sub_vertices, sub_set, sub_degrees = "subgraph";
    bool sub_strict = false;
    CLI::App* sub_cmd = app.add_subcommand("subgraph-measure", "measure against a full subgraph");
    add_common(sub_cmd, sub_opts);
    sub_cmd->add_option("--vertices", sub_vertices, "comma-separated vertex ids")->required();
    sub_cmd->add_option("--set", sub_set, "set literal {w1,w2,...}")->required();
    sub_cmd->add_flag("--strict", sub_strict, "strict restriction of the ambient measure");
    sub_cmd->add_option("--degrees", sub_degrees, "degree graph for the vertex part")
        ->check(CLI::IsMember({"subgraph", "parent"}));

    std::vector<std::string> argv = args;
    try {
        std::vector<const char*> raw;
        raw.push_back("graphmeasure");
        for (const std::string& a : argv) raw.push_back(a.c_str());
        app.parse(static_cast<int>(raw.size()), raw.data());

        if (extended_cmd->parsed() && extended_set.empty() == extended_gw.empty())
            throw CLI::ValidationError("extended-integrate",
                                       "exactly one of --set and --gw is required");

        int code = 0;
        if (diagrams_cmd->parsed())
            code = run_diagrams(diagrams_opts, false, out);
        else if (reduced_cmd->parsed())
            code = run_diagrams(reduced_opts, true, out);
        else if (measure_cmd->parsed())
            code = run_measure(measure_opts, measure_set, out);
        else if (integrate_cmd->parsed())
            code = run_integrate(integrate_opts, integrate_expr, out);
        else if (extended_cmd->parsed())
            code = run_extended(extended_opts, extended_set, extended_gw, extended_max_len, out);
        else if (shadow_cmd->parsed())
            code = run_shadow(shadow_opts, shadow_full, out);
        else if (iso_cmd->parsed())
            code = run_isocheck(iso_opts, iso_other, out);
        else if (sub_cmd->parsed())
            code = run_subgraph_measure(sub_opts, sub_vertices, sub_set, sub_strict, sub_degrees,
                                        out);
        result.exit_code = code;
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream help;
        help << app.help();
        result.out = help.str();
        result.exit_code = 0;
        return result;
    } catch (const CLI::ParseError& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 2;
        return result;
    } catch (const ParseError& e) {
        result.err = std::string("parse error: ") + e.what() + "\n";
        result.exit_code = 2;
        return result;
    } catch (const DomainError& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 1;
        return result;
    }
    result.out = out.str();
    return result;
}

}  // namespace graphmeasure
