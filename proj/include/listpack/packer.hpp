#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "listpack/coloring.hpp"
#include "listpack/galvin.hpp"
#include "listpack/graph.hpp"
#include "listpack/outcome.hpp"

namespace listpack {

/// An m-assignment on K_n, to be packed into m colorings.
struct PackRequest {
    std::size_t n{0};
    ListAssignment lists;
    std::size_t m{0};
};

/// Fixed correspondence between the vertices of K_n □ K_m and the edges of
/// K_{n,m}: Pair(i, j) <-> x_i y_j, where x_i = i and y_j = n + j.
class ProductEdgeMap {
  public:
    /// `product` must be K_n □ K_m as built by cartesian_product.
    ProductEdgeMap(const Graph& product, std::size_t n, std::size_t m);

    Edge edge_of(VertexId product_vertex) const { return edges_.at(product_vertex - 1); }
    VertexId vertex_of(Edge e) const;

    EdgeListAssignment to_edge_lists(const ListAssignment& product_lists) const;
    EdgeColoring to_edge_coloring(const Coloring& product_coloring) const;
    Coloring to_vertex_coloring(const EdgeColoring& edge_coloring) const;

  private:
    std::size_t n_;
    std::size_t m_;
    std::vector<Edge> edges_;             // by product vertex
    std::vector<VertexId> vertex_by_edge_;  // by (i-1)*m + (j-1)
};

/// Proper L-packing of K_n of size m for any m-assignment with m >= n:
/// lift the lists to K_n □ K_m, read that graph as the line graph of K_{n,m},
/// list-edge-color K_{n,m}, pull the colors back and split the layers.
///
/// Throws UnsupportedRegime for m < n, InputError for lists that are not an
/// m-assignment on n vertices, InternalError if the result fails verification.
Packing pack_complete(const PackRequest& request);

using ListColoringSolver = std::function<SearchOutcome<Coloring>(const Graph&, const ListAssignment&)>;

/// Packing of size k for an arbitrary graph through one list coloring of
/// g □ K_k. An absent result is conclusive only for exhaustive solvers.
/// Throws InternalError if the solver returns an invalid coloring.
SearchOutcome<Packing> pack_via_product(const Graph& g, const ListAssignment& lists, std::size_t k,
                                        const ListColoringSolver& solver);

}  // namespace listpack
