#include "listpack/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "listpack/errors.hpp"

namespace listpack {

namespace {

std::string cycle_message(const std::vector<VertexId>& cycle) {
    std::ostringstream os;
    os << "graph is not bipartite; odd cycle:";
    for (VertexId v : cycle) os << ' ' << v;
    return os.str();
}

}  // namespace

NotBipartite::NotBipartite(std::vector<VertexId> cycle)
    : InputError(cycle_message(cycle)), cycle_(std::move(cycle)) {}

// ---------------------------------------------------------------- Label

Label Label::atom(std::uint32_t index) {
    Label l;
    l.kind_ = Kind::atom;
    l.first_ = index;
    return l;
}

Label Label::pair(Label left, Label right) {
    Label l;
    l.kind_ = Kind::pair;
    l.children_ = std::make_shared<const std::pair<Label, Label>>(std::move(left), std::move(right));
    return l;
}

Label Label::edge_of(VertexId u, VertexId v) {
    Label l;
    l.kind_ = Kind::edge_of;
    const Edge e = make_edge(u, v);
    l.first_ = e.u;
    l.second_ = e.v;
    return l;
}

std::uint32_t Label::index() const {
    if (kind_ != Kind::atom) throw InputError("label is not an atom");
    return first_;
}

const Label& Label::left() const {
    if (kind_ != Kind::pair) throw InputError("label is not a pair");
    return children_->first;
}

const Label& Label::right() const {
    if (kind_ != Kind::pair) throw InputError("label is not a pair");
    return children_->second;
}

Edge Label::edge() const {
    if (kind_ != Kind::edge_of) throw InputError("label is not an edge");
    return Edge{first_, second_};
}

std::string Label::to_string() const {
    switch (kind_) {
        case Kind::atom:
            return std::to_string(first_);
        case Kind::pair:
            return "(" + left().to_string() + "," + right().to_string() + ")";
        case Kind::edge_of:
            return std::to_string(first_) + "-" + std::to_string(second_);
    }
    return {};
}

bool operator==(const Label& a, const Label& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Label& a, const Label& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (a.kind_ == Label::Kind::pair) {
        if (auto c = a.left() <=> b.left(); c != 0) return c;
        return a.right() <=> b.right();
    }
    if (auto c = a.first_ <=> b.first_; c != 0) return c;
    return a.second_ <=> b.second_;
}

// ---------------------------------------------------------------- Graph

Graph::Graph(std::size_t order, std::vector<Edge> edges, std::vector<Label> labels)
    : adjacency_(order), labels_(std::move(labels)) {
    if (order == 0) throw InputError("graph must have at least one vertex");
    if (!labels_.empty() && labels_.size() != order)
        throw InputError("label count does not match vertex count");

    edges_.reserve(edges.size());
    for (const Edge& raw : edges) {
        if (raw.u == 0 || raw.v == 0 || raw.u > order || raw.v > order)
            throw InputError("edge " + std::to_string(raw.u) + "-" + std::to_string(raw.v) +
                             " has an endpoint outside 1.." + std::to_string(order));
        if (raw.u == raw.v) throw InputError("loop at vertex " + std::to_string(raw.u));
        edges_.push_back(make_edge(raw.u, raw.v));
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw InputError("duplicate edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));

    for (const Edge& e : edges_) {
        adjacency_[e.u - 1].push_back(e.v);
        adjacency_[e.v - 1].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!label_index_.emplace(labels_[i], static_cast<VertexId>(i + 1)).second)
            throw InputError("duplicate vertex label " + labels_[i].to_string());
    }
}

void Graph::check_vertex(VertexId v) const {
    if (v == 0 || v > order())
        throw InputError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(order()));
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    check_vertex(v);
    return adjacency_[v - 1];
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& nbrs : adjacency_) d = std::max(d, nbrs.size());
    return d;
}

bool Graph::adjacent(VertexId a, VertexId b) const {
    auto nbrs = neighbors(a);
    check_vertex(b);
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::optional<std::size_t> Graph::edge_index(VertexId a, VertexId b) const {
    const Edge e = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

Label Graph::label(VertexId v) const {
    check_vertex(v);
    return labels_.empty() ? Label::atom(v) : labels_[v - 1];
}

std::optional<VertexId> Graph::find_label(const Label& label) const {
    if (labels_.empty()) {
        if (label.kind() == Label::Kind::atom && label.index() >= 1 && label.index() <= order())
            return label.index();
        return std::nullopt;
    }
    auto it = label_index_.find(label);
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------------- Bipartition

bool Bipartition::in_x(VertexId v) const { return std::binary_search(x.begin(), x.end(), v); }
bool Bipartition::in_y(VertexId v) const { return std::binary_search(y.begin(), y.end(), v); }

bool is_bipartition_of(const Graph& g, const Bipartition& b) {
    if (b.x.size() + b.y.size() != g.order()) return false;
    if (!std::is_sorted(b.x.begin(), b.x.end()) || !std::is_sorted(b.y.begin(), b.y.end()))
        return false;
    for (VertexId v : g.vertices())
        if (b.in_x(v) == b.in_y(v)) return false;
    for (const Edge& e : g.edges())
        if (b.in_x(e.u) == b.in_x(e.v)) return false;
    return true;
}

// ---------------------------------------------------------------- constructors

Graph complete_graph(std::size_t n) {
    if (n == 0) throw InputError("complete_graph: n must be at least 1");
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (VertexId u = 1; u <= n; ++u)
        for (VertexId v = u + 1; v <= n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

std::pair<Graph, Bipartition> complete_bipartite(std::size_t n, std::size_t m) {
    if (n == 0 || m == 0) throw InputError("complete_bipartite: both sides must be nonempty");
    std::vector<Edge> edges;
    edges.reserve(n * m);
    Bipartition b;
    for (VertexId i = 1; i <= n; ++i) {
        b.x.push_back(i);
        for (VertexId j = 1; j <= m; ++j) edges.push_back({i, static_cast<VertexId>(n + j)});
    }
    for (VertexId j = 1; j <= m; ++j) b.y.push_back(static_cast<VertexId>(n + j));
    return {Graph(n + m, std::move(edges)), std::move(b)};
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId v = 1; v < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw InputError("cycle_graph: n must be at least 3");
    std::vector<Edge> edges;
    for (VertexId v = 1; v < n; ++v) edges.push_back({v, v + 1});
    edges.push_back({1, static_cast<VertexId>(n)});
    return Graph(n, std::move(edges));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const std::size_t hn = h.order();
    auto id = [hn](VertexId u, VertexId v) { return static_cast<VertexId>((u - 1) * hn + v); };

    std::vector<Edge> edges;
    edges.reserve(g.order() * h.edge_count() + h.order() * g.edge_count());
    for (VertexId u : g.vertices())
        for (const Edge& e : h.edges()) edges.push_back({id(u, e.u), id(u, e.v)});
    for (VertexId v : h.vertices())
        for (const Edge& e : g.edges()) edges.push_back({id(e.u, v), id(e.v, v)});

    std::vector<Label> labels;
    labels.reserve(g.order() * hn);
    for (VertexId u : g.vertices())
        for (VertexId v : h.vertices()) labels.push_back(Label::pair(g.label(u), h.label(v)));
    return Graph(g.order() * hn, std::move(edges), std::move(labels));
}

Graph line_graph(const Graph& g) {
    if (g.edge_count() == 0) throw InputError("line_graph: graph has no edges");
    const auto edges = g.edges();

    std::vector<Label> labels;
    labels.reserve(edges.size());
    for (const Edge& e : edges) labels.push_back(Label::edge_of(e.u, e.v));

    // Edges of L(G) come from pairs of G-edges sharing a vertex.
    std::vector<std::vector<VertexId>> incident(g.order() + 1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        incident[edges[i].u].push_back(static_cast<VertexId>(i + 1));
        incident[edges[i].v].push_back(static_cast<VertexId>(i + 1));
    }
    std::vector<Edge> out;
    for (const auto& inc : incident)
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b) out.push_back(make_edge(inc[a], inc[b]));
    // Simple G: two distinct edges share at most one endpoint, so no duplicates.
    return Graph(edges.size(), std::move(out), std::move(labels));
}

Bipartition bipartition(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> side(n + 1, -1);
    std::vector<VertexId> parent(n + 1, 0);
    std::vector<std::size_t> depth(n + 1, 0);

    for (VertexId root : g.vertices()) {
        if (side[root] != -1) continue;
        side[root] = 0;
        std::deque<VertexId> queue{root};
        while (!queue.empty()) {
            const VertexId u = queue.front();
            queue.pop_front();
            for (VertexId w : g.neighbors(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if (side[w] == side[u]) {
                    // Walk both BFS-tree paths up to their meeting point.
                    std::vector<VertexId> left{u}, right{w};
                    VertexId a = u, b = w;
                    while (depth[a] > depth[b]) left.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) right.push_back(b = parent[b]);
                    while (a != b) {
                        left.push_back(a = parent[a]);
                        right.push_back(b = parent[b]);
                    }
                    right.pop_back();
                    std::vector<VertexId> cycle(left.begin(), left.end());
                    cycle.insert(cycle.end(), right.rbegin(), right.rend());
                    throw NotBipartite(std::move(cycle));
                }
            }
        }
    }

    Bipartition b;
    for (VertexId v : g.vertices()) (side[v] == 0 ? b.x : b.y).push_back(v);
    return b;
}

}  // namespace listpack
