#include "listpack/packer.hpp"

#include "listpack/errors.hpp"

namespace listpack {

ProductEdgeMap::ProductEdgeMap(const Graph& product, std::size_t n, std::size_t m)
    : n_(n), m_(m), vertex_by_edge_(n * m, 0) {
    if (product.order() != n * m) throw InputError("product graph does not have n*m vertices");
    edges_.reserve(n * m);
    for (VertexId h : product.vertices()) {
        const Label label = product.label(h);
        if (label.kind() != Label::Kind::pair || label.left().kind() != Label::Kind::atom ||
            label.right().kind() != Label::Kind::atom)
            throw InputError("product vertex " + std::to_string(h) + " lacks a Pair(i,j) label");
        const std::size_t i = label.left().index();
        const std::size_t j = label.right().index();
        if (i < 1 || i > n || j < 1 || j > m)
            throw InputError("product label " + label.to_string() + " out of range");
        edges_.push_back({static_cast<VertexId>(i), static_cast<VertexId>(n + j)});
        vertex_by_edge_[(i - 1) * m + (j - 1)] = h;
    }
}

VertexId ProductEdgeMap::vertex_of(Edge e) const {
    e = make_edge(e.u, e.v);
    if (e.u < 1 || e.u > n_ || e.v <= n_ || e.v > n_ + m_)
        throw InputError("edge is not an edge of K_{n,m}");
    return vertex_by_edge_[(e.u - 1) * m_ + (e.v - n_ - 1)];
}

EdgeListAssignment ProductEdgeMap::to_edge_lists(const ListAssignment& product_lists) const {
    std::vector<std::vector<Color>> lists;
    lists.reserve(edges_.size());
    for (std::size_t h = 1; h <= edges_.size(); ++h) {
        auto l = product_lists.list(static_cast<VertexId>(h));
        lists.emplace_back(l.begin(), l.end());
    }
    return EdgeListAssignment(edges_, std::move(lists));
}

EdgeColoring ProductEdgeMap::to_edge_coloring(const Coloring& product_coloring) const {
    return EdgeColoring(edges_, product_coloring.values(), 0);
}

Coloring ProductEdgeMap::to_vertex_coloring(const EdgeColoring& edge_coloring) const {
    std::vector<Color> f;
    f.reserve(edges_.size());
    for (const Edge& e : edges_) f.push_back(edge_coloring.color(e));
    return Coloring(std::move(f));
}

Packing pack_complete(const PackRequest& request) {
    const std::size_t n = request.n;
    const std::size_t m = request.m;
    if (n == 0) throw InputError("pack_complete: n must be at least 1");
    if (request.lists.vertex_count() != n)
        throw InputError("pack_complete: expected lists for " + std::to_string(n) + " vertices, got " +
                         std::to_string(request.lists.vertex_count()));
    const auto size = request.lists.uniform_size();
    if (!size) throw InputError("pack_complete: lists do not all have the same size");
    if (*size != m)
        throw InputError("pack_complete: lists have " + std::to_string(*size) + " colors, packing size is " +
                         std::to_string(m));
    if (m < n)
        throw UnsupportedRegime("pack_complete: packing size " + std::to_string(m) + " is below n = " +
                                std::to_string(n) + "; use exhaustive search for this regime");

    const Graph kn = complete_graph(n);
    const LiftedInstance lifted = lift_lists(kn, request.lists, m);
    const ProductEdgeMap relabel(lifted.product, n, m);

    // Δ(K_{n,m}) = m = list size, so the kernel method applies.
    const auto [knm, sides] = complete_bipartite(n, m);
    const EdgeColoring edge_colors = list_edge_color(knm, sides, relabel.to_edge_lists(lifted.lists));
    const Coloring product_coloring = relabel.to_vertex_coloring(edge_colors);

    Packing packing = extract_packing(kn, m, lifted.product, product_coloring);
    const VerifyReport report = is_proper_packing(kn, request.lists, packing);
    if (!report.ok()) throw InternalError("pack_complete produced an invalid packing: " + report.summary());
    return packing;
}

SearchOutcome<Packing> pack_via_product(const Graph& g, const ListAssignment& lists, std::size_t k,
                                        const ListColoringSolver& solver) {
    if (k == 0) throw InputError("pack_via_product: k must be at least 1");
    if (lists.vertex_count() != g.order()) throw InputError("pack_via_product: lists do not cover the graph");
    if (lists.min_list_size() < k)
        throw InputError("pack_via_product: every list needs at least " + std::to_string(k) + " colors");

    const LiftedInstance lifted = lift_lists(g, lists, k);
    auto outcome = solver(lifted.product, lifted.lists);
    if (!outcome.is_found()) return {outcome.status, std::nullopt, outcome.nodes};

    const VerifyReport coloring_report = is_proper_coloring(lifted.product, lifted.lists, *outcome.value);
    if (!coloring_report.ok())
        throw InternalError("list-coloring solver returned an invalid coloring: " + coloring_report.summary());

    Packing packing = extract_packing(g, k, lifted.product, *outcome.value);
    const VerifyReport report = is_proper_packing(g, lists, packing);
    if (!report.ok()) throw InternalError("extracted packing failed verification: " + report.summary());
    return SearchOutcome<Packing>::found(std::move(packing), outcome.nodes);
}

}  // namespace listpack
