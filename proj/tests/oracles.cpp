#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace listpack::oracle {

bool list_colorable(const Graph& g, const ListAssignment& lists) {
    const std::size_t n = g.order();
    std::vector<std::size_t> pos(n, 0);
    while (true) {
        bool proper = true;
        for (const Edge& e : g.edges())
            if (lists.list(e.u)[pos[e.u - 1]] == lists.list(e.v)[pos[e.v - 1]]) proper = false;
        if (proper) return true;
        std::size_t i = 0;
        while (i < n && ++pos[i] == lists.list(static_cast<VertexId>(i + 1)).size()) pos[i++] = 0;
        if (i == n) return false;
    }
}

namespace {

std::vector<std::vector<Color>> injective_tuples(std::span<const Color> list, std::size_t k) {
    std::vector<std::vector<Color>> out;
    std::vector<Color> cur;
    std::function<void()> rec = [&] {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (Color c : list)
            if (std::find(cur.begin(), cur.end(), c) == cur.end()) {
                cur.push_back(c);
                rec();
                cur.pop_back();
            }
    };
    rec();
    return out;
}

}  // namespace

bool packable(const Graph& g, const ListAssignment& lists, std::size_t k) {
    const std::size_t n = g.order();
    std::vector<std::vector<std::vector<Color>>> options;
    for (VertexId v : g.vertices()) options.push_back(injective_tuples(lists.list(v), k));
    std::vector<std::size_t> pos(n, 0);
    while (true) {
        bool ok = true;
        for (const Edge& e : g.edges())
            for (std::size_t j = 0; j < k; ++j)
                if (options[e.u - 1][pos[e.u - 1]][j] == options[e.v - 1][pos[e.v - 1]][j]) ok = false;
        if (ok) return true;
        std::size_t i = 0;
        while (i < n && ++pos[i] == options[i].size()) pos[i++] = 0;
        if (i == n) return false;
    }
}

std::size_t chromatic_number(const Graph& g) {
    const std::size_t n = g.order();
    for (std::size_t t = 1;; ++t) {
        std::vector<std::size_t> f(n, 0);
        while (true) {
            bool proper = true;
            for (const Edge& e : g.edges())
                if (f[e.u - 1] == f[e.v - 1]) proper = false;
            if (proper) return t;
            std::size_t i = 0;
            while (i < n && ++f[i] == t) f[i++] = 0;
            if (i == n) break;
        }
    }
}

std::vector<std::vector<Edge>> all_kernels(const std::vector<Edge>& candidates, const PreferenceSystem& prefs) {
    std::vector<std::vector<Edge>> out;
    const std::size_t f = candidates.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f); ++mask) {
        std::vector<Edge> m;
        for (std::size_t i = 0; i < f; ++i)
            if (mask >> i & 1) m.push_back(candidates[i]);
        std::set<VertexId> touched;
        bool matching = true;
        for (const Edge& e : m) matching = matching && touched.insert(e.u).second && touched.insert(e.v).second;
        if (!matching) continue;
        bool absorbing = true;
        for (std::size_t i = 0; i < f && absorbing; ++i) {
            if (mask >> i & 1) continue;
            const Edge e = candidates[i];
            bool hit = false;
            for (const Edge& s : m) {
                const VertexId shared = (s.u == e.u || s.u == e.v) ? s.u : (s.v == e.u || s.v == e.v) ? s.v : 0;
                if (shared != 0 && prefs.prefers(shared, s, e)) hit = true;
            }
            absorbing = hit;
        }
        if (absorbing) {
            std::sort(m.begin(), m.end());
            out.push_back(m);
        }
    }
    return out;
}

bool list_edge_colorable(const Graph& g, const EdgeListAssignment& lists) {
    const auto edges = g.edges();
    const std::size_t m = edges.size();
    std::vector<std::size_t> pos(m, 0);
    while (true) {
        bool proper = true;
        for (std::size_t a = 0; a < m && proper; ++a)
            for (std::size_t b = a + 1; b < m && proper; ++b) {
                const Edge p = edges[a], q = edges[b];
                const bool incident = p.u == q.u || p.u == q.v || p.v == q.u || p.v == q.v;
                if (incident && lists.list(p)[pos[a]] == lists.list(q)[pos[b]]) proper = false;
            }
        if (proper) return true;
        std::size_t i = 0;
        while (i < m && ++pos[i] == lists.list(edges[i]).size()) pos[i++] = 0;
        if (i == m) return false;
    }
}

std::size_t orbit_count(std::size_t n, std::size_t k) {
    const std::size_t ground = n * k;
    std::vector<std::vector<Color>> subsets;
    for (std::uint32_t mask = 0; mask < (1u << ground); ++mask)
        if (static_cast<std::size_t>(__builtin_popcount(mask)) == k) {
            std::vector<Color> s;
            for (std::size_t c = 0; c < ground; ++c)
                if (mask >> c & 1) s.push_back(static_cast<Color>(c + 1));
            subsets.push_back(s);
        }

    std::vector<std::vector<Color>> perms;
    std::vector<Color> p(ground + 1);
    std::iota(p.begin(), p.end(), Color{0});
    do perms.push_back(p);
    while (std::next_permutation(p.begin() + 1, p.end()));

    std::set<std::vector<std::vector<Color>>> classes;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        std::vector<std::vector<Color>> best;
        for (const auto& perm : perms) {
            std::vector<std::vector<Color>> image;
            for (std::size_t v = 0; v < n; ++v) {
                std::vector<Color> l;
                for (Color c : subsets[idx[v]]) l.push_back(perm[c]);
                std::sort(l.begin(), l.end());
                image.push_back(l);
            }
            if (best.empty() || image < best) best = image;
        }
        classes.insert(best);
        std::size_t i = 0;
        while (i < n && ++idx[i] == subsets.size()) idx[i++] = 0;
        if (i == n) break;
    }
    return classes.size();
}

std::vector<Violation> disjointness_violations(const Packing& p) {
    std::vector<Violation> out;
    for (VertexId v = 1; v <= p.vertex_count(); ++v)
        for (std::size_t i = 1; i <= p.size(); ++i)
            for (std::size_t j = i + 1; j <= p.size(); ++j)
                if (p.row(i)[v] == p.row(j)[v]) out.push_back({ViolationKind::not_disjoint, v, {}, {i, j}});
    return out;
}

bool is_latin_square(const std::vector<std::vector<Color>>& rows) {
    const std::size_t n = rows.size();
    std::set<Color> symbols;
    for (const auto& r : rows) {
        if (r.size() != n) return false;
        if (std::set<Color>(r.begin(), r.end()).size() != n) return false;
        symbols.insert(r.begin(), r.end());
    }
    if (symbols.size() != n) return false;
    for (std::size_t c = 0; c < n; ++c) {
        std::set<Color> col;
        for (const auto& r : rows) col.insert(r[c]);
        if (col.size() != n) return false;
    }
    return true;
}

std::vector<Graph> graphs_up_to_iso(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> slots;
    for (VertexId u = 1; u <= n; ++u)
        for (VertexId v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
    auto slot_of = [&](VertexId a, VertexId b) {
        const Edge e = make_edge(a, b);
        return static_cast<std::size_t>(std::find(slots.begin(), slots.end(), std::pair{e.u, e.v}) - slots.begin());
    };

    std::vector<VertexId> perm(n);
    std::set<std::uint32_t> seen;
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        std::uint32_t canon = mask;
        std::iota(perm.begin(), perm.end(), VertexId{1});
        do {
            std::uint32_t img = 0;
            for (std::size_t s = 0; s < slots.size(); ++s)
                if (mask >> s & 1) img |= 1u << slot_of(perm[slots[s].first - 1], perm[slots[s].second - 1]);
            canon = std::min(canon, img);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!seen.insert(canon).second) continue;
        std::vector<Edge> edges;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (canon >> s & 1) edges.push_back({slots[s].first, slots[s].second});
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (VertexId u = 1; u <= n; ++u)
        for (VertexId v = u + 1; v <= n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

std::pair<Graph, Bipartition> random_bipartite(std::size_t a, std::size_t b, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    Bipartition sides;
    for (VertexId x = 1; x <= a; ++x) sides.x.push_back(x);
    for (VertexId y = 1; y <= b; ++y) sides.y.push_back(static_cast<VertexId>(a + y));
    for (VertexId x : sides.x)
        for (VertexId y : sides.y)
            if (coin(rng)) edges.push_back({x, y});
    return {Graph(a + b, std::move(edges)), std::move(sides)};
}

ListAssignment rename(const ListAssignment& lists, const std::vector<Color>& perm) {
    std::vector<std::vector<Color>> out;
    for (const auto& l : lists.lists()) {
        std::vector<Color> r;
        for (Color c : l) r.push_back(perm.at(c));
        out.push_back(r);
    }
    return ListAssignment(std::move(out));
}

}  // namespace listpack::oracle
