#include <random>
#include <set>

#include "doctest.h"
#include "listpack/errors.hpp"
#include "listpack/packer.hpp"
#include "listpack/search.hpp"
#include "oracles.hpp"

using namespace listpack;

namespace {

std::vector<std::vector<Color>> as_rows(const Packing& p) {
    std::vector<std::vector<Color>> out;
    for (const auto& r : p.rows()) out.push_back(r.values());
    return out;
}

ListColoringSolver exhaustive() {
    return [](const Graph& g, const ListAssignment& l) { return solve_list_coloring(g, l); };
}

}  // namespace

TEST_CASE("pack_complete on K_1 is an injective selection") {
    const ListAssignment lists({{3, 8}});
    const Packing p = pack_complete({1, lists, 2});
    REQUIRE(p.size() == 2);
    const std::set<Color> picked{p.row(1)[1], p.row(2)[1]};
    CHECK(picked == std::set<Color>{3, 8});
    CHECK(is_proper_packing(complete_graph(1), lists, p).ok());
}

TEST_CASE("pack_complete on K_2 with identical lists") {
    const Packing p = pack_complete({2, ListAssignment::identical(2, 2), 2});
    const auto r = as_rows(p);
    CHECK((r == std::vector<std::vector<Color>>{{1, 2}, {2, 1}} || r == std::vector<std::vector<Color>>{{2, 1}, {1, 2}}));
}

TEST_CASE("pack_complete with identical lists gives Latin squares") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const Packing p = pack_complete({n, ListAssignment::identical(n, n), n});
        CHECK(oracle::is_latin_square(as_rows(p)));
    }
}

TEST_CASE("pack_complete rejects bad requests") {
    CHECK_THROWS_AS(pack_complete({3, ListAssignment::identical(3, 2), 2}), UnsupportedRegime);
    CHECK_THROWS_AS(pack_complete({2, ListAssignment({{1, 2}, {1, 2, 3}}), 2}), InputError);
    CHECK_THROWS_AS(pack_complete({2, ListAssignment::identical(2, 3), 2}), InputError);
    CHECK_THROWS_AS(pack_complete({3, ListAssignment::identical(2, 3), 3}), InputError);
}

TEST_CASE("pack_complete randomized: n <= 6, n <= m <= n+3, colors from [3m]") {
    std::mt19937_64 rng(0);
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t m = n; m <= n + 3; ++m)
            for (int trial = 0; trial < 50; ++trial) {
                const ListAssignment lists = random_assignment(n, m, static_cast<Color>(3 * m), rng);
                const Packing p = pack_complete({n, lists, m});
                CHECK(p.size() == m);
                for (const auto& f : p.rows()) CHECK(f.vertex_count() == n);
                CHECK(is_proper_packing(complete_graph(n), lists, p).ok());
            }
}

TEST_CASE("product/edge relabeling round-trips color data") {
    std::mt19937_64 rng(43);
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t m = 1; m <= 4; ++m) {
            const Graph product = cartesian_product(complete_graph(n), complete_graph(m));
            const ProductEdgeMap map(product, n, m);
            std::vector<Color> values(n * m);
            for (auto& v : values) v = static_cast<Color>(1 + rng() % 1000);
            const Coloring f(values);
            CHECK(map.to_vertex_coloring(map.to_edge_coloring(f)) == f);
            for (VertexId h : product.vertices()) CHECK(map.vertex_of(map.edge_of(h)) == h);
        }
    CHECK_THROWS_AS(ProductEdgeMap(cycle_graph(4), 2, 2), InputError);
}

TEST_CASE("truncating lists keeps pack_complete and exhaustive search in agreement") {
    std::mt19937_64 rng(47);
    for (std::size_t n = 1; n <= 3; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t m = n + 2;
            const ListAssignment full = random_assignment(n, m, static_cast<Color>(3 * m), rng);
            for (std::size_t mp = n; mp <= m; ++mp) {
                std::vector<std::vector<Color>> cut;
                for (const auto& l : full.lists()) cut.emplace_back(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(mp));
                const ListAssignment lists(cut);
                CHECK(is_proper_packing(complete_graph(n), lists, pack_complete({n, lists, mp})).ok());
                CHECK(solve_packing(complete_graph(n), lists, mp).is_found());
            }
        }
}

TEST_CASE("pack_via_product examples") {
    const auto k2 = pack_via_product(complete_graph(2), ListAssignment::identical(2, 2), 2, exhaustive());
    REQUIRE(k2.is_found());
    CHECK(is_proper_packing(complete_graph(2), ListAssignment::identical(2, 2), *k2.value).ok());

    CHECK(pack_via_product(complete_graph(3), ListAssignment::identical(3, 2), 2, exhaustive()).is_absent());

    std::mt19937_64 rng(53);
    const Graph p3 = path_graph(3);
    for (int trial = 0; trial < 30; ++trial) {
        const ListAssignment lists = random_assignment(3, 2, 4, rng);
        const bool via_product = pack_via_product(p3, lists, 2, exhaustive()).is_found();
        CHECK(via_product == solve_packing(p3, lists, 2).is_found());
    }

    CHECK_THROWS_AS(pack_via_product(complete_graph(2), ListAssignment::identical(2, 1), 2, exhaustive()), InputError);
}

TEST_CASE("pack_via_product surfaces a lying solver") {
    const ListColoringSolver liar = [](const Graph& g, const ListAssignment&) {
        return SearchOutcome<Coloring>::found(Coloring(std::vector<Color>(g.order(), 1)));
    };
    CHECK_THROWS_AS(pack_via_product(complete_graph(2), ListAssignment::identical(2, 2), 2, liar), InternalError);

    const ListColoringSolver gives_up = [](const Graph&, const ListAssignment&) {
        return SearchOutcome<Coloring>::exhausted();
    };
    CHECK(pack_via_product(complete_graph(2), ListAssignment::identical(2, 2), 2, gives_up).is_exhausted());
}
