#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "listpack/errors.hpp"
#include "listpack/search.hpp"
#include "oracles.hpp"

using namespace listpack;

namespace {

// The standard bad 2-assignment of K_{2,4}: every choice at x_1, x_2 is blocked by one y.
ListAssignment k24_bad() { return ListAssignment({{1, 2}, {3, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}); }

std::vector<Graph> small_graphs(std::size_t max_n) {
    std::vector<Graph> out;
    for (std::size_t n = 1; n <= max_n; ++n)
        for (auto& g : oracle::graphs_up_to_iso(n)) out.push_back(std::move(g));
    return out;
}

Graph drop_edge(const Graph& g, std::size_t index) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(index));
    return Graph(g.order(), edges);
}

}  // namespace

TEST_CASE("solve_list_coloring examples") {
    const auto k3 = solve_list_coloring(complete_graph(3), ListAssignment::identical(3, 3));
    REQUIRE(k3.is_found());
    CHECK(is_proper_coloring(complete_graph(3), ListAssignment::identical(3, 3), *k3.value).ok());
    CHECK(solve_list_coloring(complete_graph(3), ListAssignment::identical(3, 2)).is_absent());

    const Graph k24 = complete_bipartite(2, 4).first;
    CHECK(solve_list_coloring(k24, k24_bad()).is_absent());
    CHECK_FALSE(oracle::list_colorable(k24, k24_bad()));
    CHECK(solve_list_coloring(k24, ListAssignment::identical(6, 2)).is_found());
}

TEST_CASE("solve_list_coloring agrees with the brute-force oracle") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        const Graph g = oracle::random_graph(n, 0.5, rng);
        const std::size_t k = 1 + rng() % 3;
        const ListAssignment lists = random_assignment(n, k, static_cast<Color>(k + 2), rng);
        CHECK(solve_list_coloring(g, lists).is_found() == oracle::list_colorable(g, lists));
    }
}

TEST_CASE("solve_packing examples") {
    const Graph k3 = complete_graph(3);
    const auto latin = solve_packing(k3, ListAssignment::identical(3, 3), 3);
    REQUIRE(latin.is_found());
    CHECK(is_proper_packing(k3, ListAssignment::identical(3, 3), *latin.value).ok());
    CHECK(solve_packing(k3, ListAssignment::identical(3, 2), 2).is_absent());

    const Graph k24 = complete_bipartite(2, 4).first;
    CHECK(solve_packing(k24, k24_bad(), 2).is_absent());
    CHECK(solve_packing_lifted(k24, k24_bad(), 2).is_absent());
    CHECK_FALSE(oracle::packable(k24, k24_bad(), 2));

    CHECK_THROWS_AS(solve_packing(k3, ListAssignment::identical(3, 2), 3), InputError);
}

TEST_CASE("solve_packing agrees with the oracle and with the lifted route") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const Graph g = oracle::random_graph(n, 0.6, rng);
        const std::size_t k = 1 + rng() % 3;
        const ListAssignment lists = random_assignment(n, k, static_cast<Color>(k + 1 + rng() % 3), rng);
        const auto direct = solve_packing(g, lists, k);
        const auto lifted = solve_packing_lifted(g, lists, k);
        CHECK(direct.is_found() == oracle::packable(g, lists, k));
        CHECK(direct.status == lifted.status);
        if (direct.is_found()) CHECK(is_proper_packing(g, lists, *direct.value).ok());
        if (lifted.is_found()) CHECK(is_proper_packing(g, lists, *lifted.value).ok());
    }
}

TEST_CASE("canonical enumeration examples") {
    const auto one = enumerate_canonical_assignments(complete_graph(2), 1);
    CHECK(one == std::vector<ListAssignment>{ListAssignment({{1}, {1}}), ListAssignment({{1}, {2}})});

    const auto two = enumerate_canonical_assignments(complete_graph(2), 2);
    CHECK(two == std::vector<ListAssignment>{ListAssignment({{1, 2}, {1, 2}}), ListAssignment({{1, 2}, {1, 3}}),
                                             ListAssignment({{1, 2}, {3, 4}})});
    CHECK(enumerate_canonical_assignments(complete_graph(1), 3).size() == 1);
}

TEST_CASE("canonical enumeration hits each renaming class exactly once") {
    for (const auto& [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {4, 1}}) {
        CAPTURE(n);
        CAPTURE(k);
        const auto all = enumerate_canonical_assignments(Graph(n, {}), k);
        CHECK(all.size() == oracle::orbit_count(n, k));
        CHECK(std::is_sorted(all.begin(), all.end()));
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        for (const auto& a : all) {
            CHECK(is_canonical_assignment(a));
            CHECK(a.max_color() <= n * k);
            CHECK(a.uniform_size() == k);
        }
    }
}

TEST_CASE("is_canonical_assignment rejects non-minimal members") {
    CHECK_FALSE(is_canonical_assignment(ListAssignment({{1, 2}, {2, 3}})));
    CHECK_FALSE(is_canonical_assignment(ListAssignment({{2}, {1}})));
    CHECK_FALSE(is_canonical_assignment(ListAssignment({{1, 3}, {1, 3}})));
    CHECK(is_canonical_assignment(ListAssignment({{1, 2}, {1, 3}})));
}

TEST_CASE("for_each_canonical_assignment stops when asked") {
    std::size_t seen = 0;
    for_each_canonical_assignment(3, 2, [&](const ListAssignment&) { return ++seen < 4; });
    CHECK(seen == 4);
}

TEST_CASE("find_bad_assignment examples") {
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto bad = find_bad_assignment(complete_graph(n), n - 1);
        REQUIRE(bad.is_found());
        CHECK(*bad.value == ListAssignment::identical(n, n - 1));
        CHECK_FALSE(oracle::packable(complete_graph(n), *bad.value, n - 1));
    }
    CHECK(find_bad_assignment(complete_graph(3), 3).is_absent());
    CHECK(find_bad_assignment(path_graph(3), 2).is_absent());
}

TEST_CASE("chromatic_number examples") {
    CHECK(chromatic_number(Graph(3, {})) == 1);
    CHECK(chromatic_number(complete_graph(5)) == 5);
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(cycle_graph(6)) == 2);
    CHECK(chromatic_number(cartesian_product(complete_graph(3), complete_graph(5))) == 5);
    CHECK_THROWS_AS(chromatic_number(complete_graph(65)), InputError);
    CHECK_THROWS_AS(chromatic_number(complete_graph(12), SearchBudget{5, 300.0}), SearchExhausted);
}

TEST_CASE("chromatic_number agrees with the oracle") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_graph(1 + rng() % 7, 0.5, rng);
        CHECK(chromatic_number(g) == oracle::chromatic_number(g));
    }
}

TEST_CASE("list chromatic number examples") {
    const auto k3 = list_chromatic_number(complete_graph(3), 4);
    CHECK(k3.status == SearchStatus::found);
    CHECK(k3.value == 3);

    const auto c4 = list_chromatic_number(cycle_graph(4), 4);
    CHECK(c4.status == SearchStatus::found);
    CHECK(c4.value == 2);
    REQUIRE(c4.lower_witness);
    CHECK(solve_list_coloring(cycle_graph(4), *c4.lower_witness).is_absent());

    const auto single = list_chromatic_number(complete_graph(1), 4);
    CHECK(single.value == 1);
    CHECK_FALSE(single.lower_witness);
}

TEST_CASE("list chromatic number of K_{2,4} is 3") {
    const Graph k24 = complete_bipartite(2, 4).first;
    const auto r = list_chromatic_number(k24, 3);
    CHECK(r.status == SearchStatus::found);
    CHECK(r.value == 3);
    REQUIRE(r.lower_witness);
    CHECK_FALSE(oracle::list_colorable(k24, *r.lower_witness));
}

TEST_CASE("list packing number examples") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto r = list_packing_number(complete_graph(n), 4);
        CHECK(r.status == SearchStatus::found);
        CHECK(r.value == n);
        CHECK(r.color_cap == n * n);
        if (n > 1) {
            REQUIRE(r.lower_witness);
            CHECK_FALSE(oracle::packable(complete_graph(n), *r.lower_witness, n - 1));
        }
    }
    const auto p3 = list_packing_number(path_graph(3), 4);
    CHECK(p3.status == SearchStatus::found);
    REQUIRE(p3.lower_witness);
    CHECK_FALSE(oracle::packable(path_graph(3), *p3.lower_witness, p3.value - 1));
    std::size_t checked = 0;
    for (const auto& a : enumerate_canonical_assignments(path_graph(3), p3.value)) {
        CHECK(oracle::packable(path_graph(3), a, p3.value));
        ++checked;
    }
    CHECK(p3.upper_evidence == checked);

    const auto capped = list_packing_number(complete_graph(3), 2);
    CHECK(capped.status == SearchStatus::absent);
    CHECK(capped.lower_witness);
    CHECK_THROWS_AS(list_packing_number(Graph(max_scan_vertices + 1, {}), 2), InputError);
}

TEST_CASE("packability is invariant under color renaming") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const Graph g = oracle::random_graph(n, 0.6, rng);
        const std::size_t k = 1 + rng() % 3;
        const Color palette = static_cast<Color>(k + 2);
        const ListAssignment lists = random_assignment(n, k, palette, rng);
        std::vector<Color> perm(palette + 1);
        std::iota(perm.begin(), perm.end(), Color{0});
        std::shuffle(perm.begin() + 1, perm.end(), rng);
        const ListAssignment renamed = oracle::rename(lists, perm);
        CHECK(solve_packing(g, lists, k).status == solve_packing(g, renamed, k).status);
    }
}

TEST_CASE("list parameters are monotone under edge deletion") {
    for (const Graph& g : small_graphs(4)) {
        if (g.edge_count() == 0) continue;
        const auto whole_l = list_chromatic_number(g, 4);
        const auto whole_s = list_packing_number(g, 4);
        REQUIRE(whole_s.status == SearchStatus::found);
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            const Graph sub = drop_edge(g, i);
            CHECK(list_chromatic_number(sub, 4).value <= whole_l.value);
            CHECK(list_packing_number(sub, 4).value <= whole_s.value);
        }
    }
}

TEST_CASE("chi <= chi_l <= chi_star on small graphs") {
    for (const Graph& g : small_graphs(4)) {
        const std::size_t chi = chromatic_number(g);
        const auto l = list_chromatic_number(g, 4);
        const auto s = list_packing_number(g, 4);
        REQUIRE(l.status == SearchStatus::found);
        REQUIRE(s.status == SearchStatus::found);
        CHECK(chi == oracle::chromatic_number(g));
        CHECK(chi <= l.value);
        CHECK(l.value <= s.value);
    }
}

TEST_CASE("budget exhaustion is reported, never a verdict") {
    const SearchBudget tiny{1, 300.0};
    CHECK(solve_list_coloring(complete_graph(6), ListAssignment::identical(6, 5), tiny).is_exhausted());
    CHECK(solve_packing(complete_graph(4), ListAssignment::identical(4, 4), 4, tiny).is_exhausted());
    CHECK(list_packing_number(complete_graph(3), 4, tiny).status == SearchStatus::exhausted);
}
