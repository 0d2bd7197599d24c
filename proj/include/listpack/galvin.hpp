#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "listpack/coloring.hpp"
#include "listpack/graph.hpp"

namespace listpack {

/// Edge -> color map, stored as a flat map sorted by edge.
///
/// palette_size is Δ for colorings produced by edge_color_bipartite (colors
/// then lie in [palette_size]); for list colorings it is the number of
/// distinct colors used.
class EdgeColoring {
  public:
    EdgeColoring() = default;
    EdgeColoring(std::vector<Edge> edges, std::vector<Color> colors, std::size_t palette_size);

    std::size_t size() const noexcept { return edges_.size(); }
    std::size_t palette_size() const noexcept { return palette_size_; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Color> colors() const noexcept { return colors_; }

    std::optional<Color> find(Edge e) const;
    /// Throws InputError if e is not colored.
    Color color(Edge e) const;

    bool operator==(const EdgeColoring&) const = default;

  private:
    std::vector<Edge> edges_;
    std::vector<Color> colors_;
    std::size_t palette_size_{0};
};

/// Edge -> allowed colors; lists sorted and duplicate-free.
class EdgeListAssignment {
  public:
    EdgeListAssignment() = default;
    EdgeListAssignment(std::vector<Edge> edges, std::vector<std::vector<Color>> lists);

    std::size_t size() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const std::vector<std::vector<Color>>& lists() const noexcept { return lists_; }
    std::span<const Color> list(Edge e) const;

    bool operator==(const EdgeListAssignment&) const = default;

  private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Color>> lists_;
};

/// Vertex preferences over incident edges derived from a proper base edge
/// coloring: X-side vertices prefer higher base colors, Y-side vertices
/// prefer lower ones. Strict because the base coloring is proper.
struct PreferenceSystem {
    EdgeColoring base;
    Bipartition sides;

    VertexId x_end(Edge e) const { return sides.in_x(e.u) ? e.u : e.v; }
    VertexId y_end(Edge e) const { return sides.in_x(e.u) ? e.v : e.u; }
    /// True iff `better` beats `worse` at their shared vertex `at`.
    bool prefers(VertexId at, Edge better, Edge worse) const;
};

/// Proper edge coloring with exactly Δ colors. Complete bipartite inputs use
/// c(x_i, y_j) = ((i + j - 2) mod max(n,m)) + 1 with i, j the ranks inside X
/// and Y; anything else goes through alternating-path recoloring.
EdgeColoring edge_color_bipartite(const Graph& g, const Bipartition& sides);

/// Deferred acceptance on the candidate set: X vertices propose in decreasing
/// base color, Y vertices keep the lowest-colored proposal. The result is a
/// kernel of the candidate set (see kernel_check). Throws on empty input.
std::vector<Edge> stable_matching(std::span<const Edge> candidates, const PreferenceSystem& prefs);

/// True iff `matching` is a matching inside `candidates` and every other
/// candidate is beaten at one of its endpoints by a matched edge.
bool kernel_check(std::span<const Edge> candidates, const PreferenceSystem& prefs,
                  std::span<const Edge> matching);

struct GalvinRound {
    Color color{0};
    std::vector<Edge> candidates;
    std::vector<Edge> matched;
    bool kernel_ok{false};
};

/// Instrumentation of one list_edge_color run. `deletions[i]` counts colors
/// removed from the list of g.edges()[i].
struct GalvinTrace {
    std::vector<GalvinRound> rounds;
    std::vector<std::size_t> deletions;
};

/// Colors every edge from its list so that incident edges differ. Requires
/// each list to hold at least Δ colors (throws InputError otherwise). Each
/// round takes the smallest color still present in some uncolored list,
/// colors a kernel of the edges offering it, and strikes that color from the
/// other candidates.
EdgeColoring list_edge_color(const Graph& g, const Bipartition& sides, const EdgeListAssignment& lists,
                             GalvinTrace* trace = nullptr);

/// Independent check through the line graph: the edge coloring must be proper
/// and, when lists are given, list-respecting. Violations name line-graph
/// vertices (1-based edge positions in g.edges()).
VerifyReport verify_edge_coloring(const Graph& g, const EdgeColoring& coloring,
                                  const EdgeListAssignment* lists = nullptr);

}  // namespace listpack
