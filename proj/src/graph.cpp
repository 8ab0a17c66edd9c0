#include "graphmeasure/graph.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace graphmeasure {

namespace {

constexpr std::string_view kInverseMarker = "^-1";

bool valid_plain_id(std::string_view id) {
    if (id.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); };
    if (!alpha(id[0])) return false;
    for (char c : id.substr(1))
        if (!alnum(c)) return false;
    return true;
}

}  // namespace

Graph::Graph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    build_indices();
}

void Graph::build_indices() {
    vertex_idx_.clear();
    edge_idx_.clear();
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!vertex_idx_.emplace(vertices_[i], static_cast<int>(i)).second)
            throw DomainError("duplicate vertex id '" + vertices_[i] + "'");
    }
    edge_src_.resize(edges_.size());
    edge_dst_.resize(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (!edge_idx_.emplace(e.id, static_cast<int>(i)).second)
            throw DomainError("duplicate edge id '" + e.id + "'");
        auto s = vertex_idx_.find(e.src);
        auto t = vertex_idx_.find(e.dst);
        if (s == vertex_idx_.end())
            throw DomainError("edge '" + e.id + "' has undeclared source '" + e.src + "'");
        if (t == vertex_idx_.end())
            throw DomainError("edge '" + e.id + "' has undeclared target '" + e.dst + "'");
        if (e.weight <= Rational(0) || e.weight > Rational(1))
            throw DomainError("edge '" + e.id + "' has weight " + e.weight.str() +
                              " outside (0,1]");
        edge_src_[i] = s->second;
        edge_dst_[i] = t->second;
    }
    out_edges_.assign(vertices_.size(), {});
    for (std::size_t i = 0; i < edges_.size(); ++i)
        out_edges_[static_cast<std::size_t>(edge_src_[i])].push_back(static_cast<int>(i));
    for (auto& outs : out_edges_)
        std::sort(outs.begin(), outs.end(),
                  [&](int a, int b) { return edge_sort_key(a) < edge_sort_key(b); });
}

int Graph::find_vertex(std::string_view id) const {
    auto it = vertex_idx_.find(id);
    return it == vertex_idx_.end() ? -1 : it->second;
}

int Graph::find_edge(std::string_view id) const {
    auto it = edge_idx_.find(id);
    return it == edge_idx_.end() ? -1 : it->second;
}

int Graph::vertex_index(std::string_view id) const {
    int i = find_vertex(id);
    if (i < 0) throw DomainError("unknown vertex '" + std::string(id) + "'");
    return i;
}

int Graph::edge_index(std::string_view id) const {
    int i = find_edge(id);
    if (i < 0) throw DomainError("unknown edge '" + std::string(id) + "'");
    return i;
}

int Graph::in_degree_at(int v) const {
    int n = 0;
    for (int t : edge_dst_)
        if (t == v) ++n;
    return n;
}

int Graph::out_degree_at(int v) const {
    int n = 0;
    for (int s : edge_src_)
        if (s == v) ++n;
    return n;
}

bool Graph::is_inverse_id(std::string_view id) {
    return id.size() > kInverseMarker.size() &&
           id.substr(id.size() - kInverseMarker.size()) == kInverseMarker;
}

std::string Graph::inverse_id(std::string_view id) {
    if (is_inverse_id(id)) return std::string(id.substr(0, id.size() - kInverseMarker.size()));
    return std::string(id) + std::string(kInverseMarker);
}

std::string Graph::base_id(std::string_view id) {
    if (is_inverse_id(id)) return std::string(id.substr(0, id.size() - kInverseMarker.size()));
    return std::string(id);
}

Graph Graph::shadow() const {
    std::vector<Edge> rev;
    rev.reserve(edges_.size());
    for (const Edge& e : edges_)
        rev.push_back(Edge{inverse_id(e.id), e.dst, e.src, e.weight});
    return Graph(vertices_, std::move(rev));
}

Graph Graph::shadowed() const {
    std::vector<Edge> all = edges_;
    all.reserve(edges_.size() * 2);
    for (const Edge& e : edges_)
        all.push_back(Edge{inverse_id(e.id), e.dst, e.src, e.weight});
    return Graph(vertices_, std::move(all));
}

Graph Graph::full_subgraph(const std::vector<std::string>& vs) const {
    std::set<int> keep;
    for (const std::string& v : vs) keep.insert(vertex_index(v));
    std::vector<std::string> sub_vertices;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (keep.count(static_cast<int>(i))) sub_vertices.push_back(vertices_[i]);
    std::vector<Edge> sub_edges;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (keep.count(edge_src_[i]) && keep.count(edge_dst_[i])) sub_edges.push_back(edges_[i]);
    return Graph(std::move(sub_vertices), std::move(sub_edges));
}

std::optional<int> Graph::inverse_edge(int e) const {
    int p = find_edge(inverse_id(edges_[static_cast<std::size_t>(e)].id));
    if (p < 0) return std::nullopt;
    return p;
}

std::pair<int, int> Graph::edge_sort_key(int e) const {
    const std::string& id = edges_[static_cast<std::size_t>(e)].id;
    if (!is_inverse_id(id)) return {e, 0};
    int base = find_edge(base_id(id));
    return {base >= 0 ? base : e, 1};
}

std::string Graph::serialize() const {
    std::ostringstream os;
    for (const std::string& v : vertices_) os << "vertex " << v << "\n";
    for (const Edge& e : edges_) {
        os << "edge " << e.id << " " << e.src << " " << e.dst;
        if (e.weight != Rational(1)) os << " weight " << e.weight.str();
        os << "\n";
    }
    return os.str();
}

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize_line(const std::string& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
               line[i] != '#')
            ++i;
        tokens.push_back(Token{line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

}  // namespace

Graph Graph::parse(std::string_view text) {
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::set<std::string> vertex_ids;
    std::set<std::string> edge_ids;

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<Token> tok = tokenize_line(line);
        if (tok.empty()) continue;

        auto fail = [&](const std::string& msg, const Token& at) -> ParseError {
            return ParseError(msg, lineno, at.column);
        };
        auto want_id = [&](const Token& t) {
            if (!valid_plain_id(t.text))
                throw fail("invalid identifier '" + t.text + "'", t);
        };

        // Edge ids may carry the derived inverse marker so that emitted
        // shadow graphs parse back; vertex ids stay plain.
        auto want_edge_id = [&](const Token& t) {
            std::string_view id = t.text;
            if (!valid_plain_id(Graph::is_inverse_id(id) ? Graph::base_id(id) : std::string(id)))
                throw fail("invalid identifier '" + t.text + "'", t);
        };

        if (tok[0].text == "vertex") {
            if (tok.size() != 2) throw fail("expected 'vertex <id>'", tok[0]);
            want_id(tok[1]);
            if (!vertex_ids.insert(tok[1].text).second)
                throw fail("duplicate vertex id '" + tok[1].text + "'", tok[1]);
            vertices.push_back(tok[1].text);
        } else if (tok[0].text == "edge") {
            if (tok.size() != 4 && tok.size() != 6)
                throw fail("expected 'edge <id> <src> <dst> [weight <p>/<q>]'", tok[0]);
            want_edge_id(tok[1]);
            want_id(tok[2]);
            want_id(tok[3]);
            if (!edge_ids.insert(tok[1].text).second)
                throw fail("duplicate edge id '" + tok[1].text + "'", tok[1]);
            if (!vertex_ids.count(tok[2].text))
                throw fail("unknown endpoint '" + tok[2].text + "'", tok[2]);
            if (!vertex_ids.count(tok[3].text))
                throw fail("unknown endpoint '" + tok[3].text + "'", tok[3]);
            Rational w{1};
            if (tok.size() == 6) {
                if (tok[4].text != "weight") throw fail("expected 'weight'", tok[4]);
                try {
                    w = Rational::parse(tok[5].text);
                } catch (const std::invalid_argument&) {
                    throw fail("malformed weight '" + tok[5].text + "'", tok[5]);
                }
                if (w <= Rational(0) || w > Rational(1))
                    throw fail("weight " + w.str() + " outside (0,1]", tok[5]);
            }
            edges.push_back(Edge{tok[1].text, tok[2].text, tok[3].text, w});
        } else {
            throw fail("expected 'vertex' or 'edge', got '" + tok[0].text + "'", tok[0]);
        }
    }
    return Graph(std::move(vertices), std::move(edges));
}

namespace {

// Per-vertex pruning signature: (in-degree, out-degree, loop count).
std::vector<std::array<int, 3>> vertex_signatures(const Graph& g) {
    std::vector<std::array<int, 3>> sig(g.vertex_count(), {0, 0, 0});
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        int s = g.edge_source(static_cast<int>(e));
        int t = g.edge_target(static_cast<int>(e));
        sig[static_cast<std::size_t>(t)][0]++;
        sig[static_cast<std::size_t>(s)][1]++;
        if (s == t) sig[static_cast<std::size_t>(s)][2]++;
    }
    return sig;
}

bool extend_vertex_map(const Graph& g1, const Graph& g2,
                       const std::vector<std::array<int, 3>>& sig1,
                       const std::vector<std::array<int, 3>>& sig2, std::size_t next,
                       std::vector<int>& map, std::vector<bool>& used) {
    if (next == g1.vertex_count()) return true;
    for (std::size_t cand = 0; cand < g2.vertex_count(); ++cand) {
        if (used[cand] || sig1[next] != sig2[cand]) continue;
        // Adjacency counts toward already-mapped vertices must agree.
        bool ok = true;
        for (std::size_t prior = 0; prior <= next && ok; ++prior) {
            int img = prior == next ? static_cast<int>(cand) : map[prior];
            if (img < 0) continue;
            int fwd1 = 0, bwd1 = 0, fwd2 = 0, bwd2 = 0;
            for (std::size_t e = 0; e < g1.edge_count(); ++e) {
                if (g1.edge_source(static_cast<int>(e)) == static_cast<int>(next) &&
                    g1.edge_target(static_cast<int>(e)) == static_cast<int>(prior))
                    ++fwd1;
                if (g1.edge_source(static_cast<int>(e)) == static_cast<int>(prior) &&
                    g1.edge_target(static_cast<int>(e)) == static_cast<int>(next))
                    ++bwd1;
            }
            for (std::size_t e = 0; e < g2.edge_count(); ++e) {
                if (g2.edge_source(static_cast<int>(e)) == static_cast<int>(cand) &&
                    g2.edge_target(static_cast<int>(e)) == img)
                    ++fwd2;
                if (g2.edge_source(static_cast<int>(e)) == img &&
                    g2.edge_target(static_cast<int>(e)) == static_cast<int>(cand))
                    ++bwd2;
            }
            ok = fwd1 == fwd2 && bwd1 == bwd2;
        }
        if (!ok) continue;
        map[next] = static_cast<int>(cand);
        used[cand] = true;
        if (extend_vertex_map(g1, g2, sig1, sig2, next + 1, map, used)) return true;
        map[next] = -1;
        used[cand] = false;
    }
    return false;
}

}  // namespace

std::optional<GraphIsomorphism> find_isomorphism(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
        return std::nullopt;

    auto sig1 = vertex_signatures(g1);
    auto sig2 = vertex_signatures(g2);
    {
        auto m1 = sig1;
        auto m2 = sig2;
        std::sort(m1.begin(), m1.end());
        std::sort(m2.begin(), m2.end());
        if (m1 != m2) return std::nullopt;
    }

    std::vector<int> vmap(g1.vertex_count(), -1);
    std::vector<bool> used(g2.vertex_count(), false);
    if (!extend_vertex_map(g1, g2, sig1, sig2, 0, vmap, used)) return std::nullopt;

    // Pair edges within each (source, target) class in declaration order.
    std::vector<int> emap(g1.edge_count(), -1);
    std::map<std::pair<int, int>, std::vector<int>> free2;
    for (std::size_t e = 0; e < g2.edge_count(); ++e)
        free2[{g2.edge_source(static_cast<int>(e)), g2.edge_target(static_cast<int>(e))}]
            .push_back(static_cast<int>(e));
    for (std::size_t e = 0; e < g1.edge_count(); ++e) {
        std::pair<int, int> key{vmap[static_cast<std::size_t>(g1.edge_source(static_cast<int>(e)))],
                                vmap[static_cast<std::size_t>(g1.edge_target(static_cast<int>(e)))]};
        auto it = free2.find(key);
        if (it == free2.end() || it->second.empty()) return std::nullopt;
        emap[e] = it->second.front();
        it->second.erase(it->second.begin());
    }
    return GraphIsomorphism{std::move(vmap), std::move(emap)};
}

}  // namespace graphmeasure
