#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "listpack/graph_fwd.hpp"

namespace listpack {

/// Structured vertex label. Product vertices carry Pair labels built from the
/// factor labels; line-graph vertices carry EdgeOf labels of the source edge.
class Label {
  public:
    enum class Kind : std::uint8_t { atom, pair, edge_of };

    Label() = default;

    static Label atom(std::uint32_t index);
    static Label pair(Label left, Label right);
    /// Normalized so that edge().u < edge().v.
    static Label edge_of(VertexId u, VertexId v);

    Kind kind() const noexcept { return kind_; }
    std::uint32_t index() const;
    const Label& left() const;
    const Label& right() const;
    Edge edge() const;

    std::string to_string() const;

    friend bool operator==(const Label& a, const Label& b);
    friend std::strong_ordering operator<=>(const Label& a, const Label& b);

  private:
    Kind kind_{Kind::atom};
    std::uint32_t first_{0};
    std::uint32_t second_{0};
    std::shared_ptr<const std::pair<Label, Label>> children_;
};

/// Immutable simple undirected graph on vertices 1..n.
///
/// Adjacency is kept as sorted neighbor lists and the edge list is sorted
/// lexicographically, so two graphs compare equal exactly when they have the
/// same order and the same edge set.
class Graph {
  public:
    /// Throws InputError on n == 0, out-of-range endpoints, loops, duplicate
    /// edges or a label vector whose size is not n.
    Graph(std::size_t order, std::vector<Edge> edges, std::vector<Label> labels = {});

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    auto vertices() const noexcept {
        return std::views::iota(VertexId{1}, static_cast<VertexId>(order() + 1));
    }

    std::span<const VertexId> neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }
    std::size_t max_degree() const noexcept;
    bool adjacent(VertexId a, VertexId b) const;
    /// Position of edge {a,b} within edges(), if present.
    std::optional<std::size_t> edge_index(VertexId a, VertexId b) const;

    bool labeled() const noexcept { return !labels_.empty(); }
    /// Atom(v) for unlabeled graphs.
    Label label(VertexId v) const;
    std::optional<VertexId> find_label(const Label& label) const;

    bool operator==(const Graph& other) const {
        return order() == other.order() && edges_ == other.edges_;
    }

  private:
    void check_vertex(VertexId v) const;

    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<Edge> edges_;
    std::vector<Label> labels_;
    std::map<Label, VertexId> label_index_;
};

/// Two-sided vertex partition; both sides sorted ascending.
struct Bipartition {
    std::vector<VertexId> x;
    std::vector<VertexId> y;

    bool in_x(VertexId v) const;
    bool in_y(VertexId v) const;

    bool operator==(const Bipartition&) const = default;
};

/// True iff x and y partition V(g) and no edge lies inside one side.
bool is_bipartition_of(const Graph& g, const Bipartition& b);

Graph complete_graph(std::size_t n);
/// X = {1..n}, Y = {n+1..n+m}.
std::pair<Graph, Bipartition> complete_bipartite(std::size_t n, std::size_t m);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

/// Vertex (u,v) gets id (u-1)*|H| + v and label Pair(g.label(u), h.label(v)).
Graph cartesian_product(const Graph& g, const Graph& h);

/// One vertex per edge of g, in the order of g.edges(), labeled EdgeOf(u,v).
Graph line_graph(const Graph& g);

/// BFS 2-coloring in vertex order; the first vertex of every component goes
/// to X. Throws NotBipartite carrying an odd cycle.
Bipartition bipartition(const Graph& g);

}  // namespace listpack
