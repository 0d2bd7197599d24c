#include "listpack/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "listpack/errors.hpp"

namespace listpack {

// ---------------------------------------------------------------- ListAssignment

ListAssignment::ListAssignment(std::vector<std::vector<Color>> lists) : lists_(std::move(lists)) {
    for (std::size_t i = 0; i < lists_.size(); ++i) {
        auto& l = lists_[i];
        const std::string where = "list of vertex " + std::to_string(i + 1);
        if (l.empty()) throw InputError(where + " is empty");
        std::sort(l.begin(), l.end());
        if (l.front() == 0) throw InputError(where + " contains color 0; colors must be positive");
        if (std::adjacent_find(l.begin(), l.end()) != l.end())
            throw InputError(where + " repeats a color");
    }
}

ListAssignment ListAssignment::uniform(std::size_t n, std::vector<Color> list) {
    return ListAssignment(std::vector<std::vector<Color>>(n, std::move(list)));
}

ListAssignment ListAssignment::identical(std::size_t n, std::size_t k) {
    std::vector<Color> list(k);
    std::iota(list.begin(), list.end(), Color{1});
    return uniform(n, std::move(list));
}

std::span<const Color> ListAssignment::list(VertexId v) const {
    if (v == 0 || v > lists_.size())
        throw InputError("no list for vertex " + std::to_string(v));
    return lists_[v - 1];
}

bool ListAssignment::allows(VertexId v, Color c) const {
    auto l = list(v);
    return std::binary_search(l.begin(), l.end(), c);
}

std::optional<std::size_t> ListAssignment::uniform_size() const noexcept {
    if (lists_.empty()) return std::nullopt;
    const std::size_t k = lists_.front().size();
    for (const auto& l : lists_)
        if (l.size() != k) return std::nullopt;
    return k;
}

std::size_t ListAssignment::min_list_size() const noexcept {
    std::size_t k = lists_.empty() ? 0 : lists_.front().size();
    for (const auto& l : lists_) k = std::min(k, l.size());
    return k;
}

Color ListAssignment::max_color() const noexcept {
    Color c = 0;
    for (const auto& l : lists_) c = std::max(c, l.back());
    return c;
}

ListAssignment random_assignment(std::size_t n, std::size_t k, Color palette, std::mt19937_64& rng) {
    if (k > palette) throw InputError("random_assignment: palette smaller than list size");
    std::vector<Color> all(palette);
    std::iota(all.begin(), all.end(), Color{1});
    std::vector<std::vector<Color>> lists(n);
    for (auto& l : lists) {
        // Partial Fisher-Yates over the palette.
        for (std::size_t i = 0; i < k; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, all.size() - 1);
            std::swap(all[i], all[pick(rng)]);
        }
        l.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return ListAssignment(std::move(lists));
}

// ---------------------------------------------------------------- Packing

Packing::Packing(std::vector<Coloring> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw InputError("packing must contain at least one coloring");
    for (const auto& r : rows_)
        if (r.vertex_count() != rows_.front().vertex_count())
            throw InputError("packing rows cover different vertex sets");
}

std::vector<Color> Packing::column(VertexId v) const {
    std::vector<Color> col;
    col.reserve(rows_.size());
    for (const auto& r : rows_) col.push_back(r[v]);
    return col;
}

// ---------------------------------------------------------------- verification

std::string_view to_string(ViolationKind kind) noexcept {
    switch (kind) {
        case ViolationKind::not_in_list:
            return "NotInList";
        case ViolationKind::not_proper:
            return "NotProper";
        case ViolationKind::not_disjoint:
            return "NotDisjoint";
    }
    return "?";
}

std::string Violation::describe() const {
    std::ostringstream os;
    os << to_string(kind);
    if (kind == ViolationKind::not_proper)
        os << " at edge " << edge.u << '-' << edge.v;
    else
        os << " at vertex " << vertex;
    if (!indices.empty()) {
        os << " (coloring";
        os << (indices.size() > 1 ? "s" : "");
        for (std::size_t i : indices) os << ' ' << i;
        os << ')';
    }
    return os.str();
}

std::string VerifyReport::summary() const {
    if (ok()) return "ok";
    std::ostringstream os;
    os << violations.size() << " violation" << (violations.size() == 1 ? "" : "s");
    for (const auto& v : violations) os << "\n  " << v.describe();
    return os.str();
}

namespace {

void check_domain(const Graph& g, const ListAssignment& lists, std::size_t colored) {
    if (lists.vertex_count() != g.order())
        throw InputError("list assignment covers " + std::to_string(lists.vertex_count()) +
                         " vertices, graph has " + std::to_string(g.order()));
    if (colored != g.order())
        throw InputError("coloring covers " + std::to_string(colored) + " vertices, graph has " +
                         std::to_string(g.order()));
}

void append_coloring_violations(const Graph& g, const ListAssignment& lists, const Coloring& f,
                                std::vector<std::size_t> tag, std::vector<Violation>& out) {
    for (VertexId v : g.vertices())
        if (!lists.allows(v, f[v])) out.push_back({ViolationKind::not_in_list, v, {}, tag});
    for (const Edge& e : g.edges())
        if (f[e.u] == f[e.v]) out.push_back({ViolationKind::not_proper, 0, e, tag});
}

}  // namespace

VerifyReport is_proper_coloring(const Graph& g, const ListAssignment& lists, const Coloring& f) {
    check_domain(g, lists, f.vertex_count());
    VerifyReport report;
    append_coloring_violations(g, lists, f, {}, report.violations);
    return report;
}

VerifyReport is_proper_packing(const Graph& g, const ListAssignment& lists, const Packing& p) {
    check_domain(g, lists, p.vertex_count());
    VerifyReport report;
    for (std::size_t j = 1; j <= p.size(); ++j)
        append_coloring_violations(g, lists, p.row(j), {j}, report.violations);

    // Column injectivity: group row indices by color at each vertex, then
    // report every pair inside a group.
    std::vector<std::pair<Color, std::size_t>> column;
    for (VertexId v : g.vertices()) {
        column.clear();
        for (std::size_t j = 1; j <= p.size(); ++j) column.emplace_back(p.row(j)[v], j);
        std::sort(column.begin(), column.end());
        for (std::size_t lo = 0; lo < column.size();) {
            std::size_t hi = lo;
            while (hi < column.size() && column[hi].first == column[lo].first) ++hi;
            for (std::size_t a = lo; a < hi; ++a)
                for (std::size_t b = a + 1; b < hi; ++b)
                    report.violations.push_back(
                        {ViolationKind::not_disjoint, v, {}, {column[a].second, column[b].second}});
            lo = hi;
        }
    }
    return report;
}

// ---------------------------------------------------------------- product correspondence

LiftedInstance lift_lists(const Graph& g, const ListAssignment& lists, std::size_t k) {
    if (k == 0) throw InputError("lift_lists: k must be at least 1");
    if (lists.vertex_count() != g.order())
        throw InputError("lift_lists: list assignment does not cover the graph");
    Graph product = cartesian_product(g, complete_graph(k));
    std::vector<std::vector<Color>> lifted;
    lifted.reserve(g.order() * k);
    for (VertexId v : g.vertices())
        for (std::size_t j = 0; j < k; ++j) {
            auto l = lists.list(v);
            lifted.emplace_back(l.begin(), l.end());
        }
    return {std::move(product), ListAssignment(std::move(lifted))};
}

Packing extract_packing(const Graph& g, std::size_t k, const Graph& product, const Coloring& product_coloring) {
    if (k == 0) throw InputError("extract_packing: k must be at least 1");
    if (product.order() != g.order() * k || product_coloring.vertex_count() != product.order())
        throw InputError("extract_packing: coloring is not over a product with " + std::to_string(k) +
                         " layers");
    std::vector<std::vector<Color>> rows(k, std::vector<Color>(g.order()));
    for (VertexId v : g.vertices())
        for (std::size_t j = 1; j <= k; ++j) {
            const Label want = Label::pair(g.label(v), Label::atom(static_cast<std::uint32_t>(j)));
            auto h = product.find_label(want);
            if (!h) throw InputError("extract_packing: product has no vertex labeled " + want.to_string());
            rows[j - 1][v - 1] = product_coloring[*h];
        }
    std::vector<Coloring> colorings;
    colorings.reserve(k);
    for (auto& r : rows) colorings.emplace_back(std::move(r));
    return Packing(std::move(colorings));
}

Packing extract_packing(const Graph& g, std::size_t k, const Coloring& product_coloring) {
    if (k == 0) throw InputError("extract_packing: k must be at least 1");
    return extract_packing(g, k, cartesian_product(g, complete_graph(k)), product_coloring);
}

}  // namespace listpack
