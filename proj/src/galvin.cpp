#include "listpack/galvin.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "listpack/errors.hpp"

namespace listpack {

namespace {

std::string edge_name(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

template <typename T>
void sort_by_edge(std::vector<Edge>& edges, std::vector<T>& values, const char* what) {
    if (edges.size() != values.size()) throw InputError(std::string(what) + ": size mismatch");
    for (auto& e : edges) e = make_edge(e.u, e.v);
    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
    std::vector<Edge> se;
    std::vector<T> sv;
    se.reserve(edges.size());
    sv.reserve(edges.size());
    for (std::size_t i : order) {
        if (!se.empty() && se.back() == edges[i])
            throw InputError(std::string(what) + ": edge " + edge_name(edges[i]) + " appears twice");
        se.push_back(edges[i]);
        sv.push_back(std::move(values[i]));
    }
    edges = std::move(se);
    values = std::move(sv);
}

void require_bipartition(const Graph& g, const Bipartition& sides) {
    if (is_bipartition_of(g, sides)) return;
    bipartition(g);  // throws NotBipartite with a witness when applicable
    throw InputError("supplied bipartition does not match the graph");
}

}  // namespace

// ---------------------------------------------------------------- containers

EdgeColoring::EdgeColoring(std::vector<Edge> edges, std::vector<Color> colors, std::size_t palette_size)
    : edges_(std::move(edges)), colors_(std::move(colors)), palette_size_(palette_size) {
    sort_by_edge(edges_, colors_, "edge coloring");
    for (std::size_t i = 0; i < colors_.size(); ++i)
        if (colors_[i] == 0) throw InputError("edge " + edge_name(edges_[i]) + " has color 0");
}

std::optional<Color> EdgeColoring::find(Edge e) const {
    e = make_edge(e.u, e.v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return colors_[static_cast<std::size_t>(it - edges_.begin())];
}

Color EdgeColoring::color(Edge e) const {
    if (auto c = find(e)) return *c;
    throw InputError("edge " + edge_name(e) + " is not colored");
}

EdgeListAssignment::EdgeListAssignment(std::vector<Edge> edges, std::vector<std::vector<Color>> lists)
    : edges_(std::move(edges)), lists_(std::move(lists)) {
    sort_by_edge(edges_, lists_, "edge lists");
    for (std::size_t i = 0; i < lists_.size(); ++i) {
        auto& l = lists_[i];
        const std::string where = "list of edge " + edge_name(edges_[i]);
        if (l.empty()) throw InputError(where + " is empty");
        std::sort(l.begin(), l.end());
        if (l.front() == 0) throw InputError(where + " contains color 0");
        if (std::adjacent_find(l.begin(), l.end()) != l.end()) throw InputError(where + " repeats a color");
    }
}

std::span<const Color> EdgeListAssignment::list(Edge e) const {
    e = make_edge(e.u, e.v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) throw InputError("no list for edge " + edge_name(e));
    return lists_[static_cast<std::size_t>(it - edges_.begin())];
}

bool PreferenceSystem::prefers(VertexId at, Edge better, Edge worse) const {
    const Color b = base.color(better);
    const Color w = base.color(worse);
    return sides.in_x(at) ? b > w : b < w;
}

// ---------------------------------------------------------------- base coloring

EdgeColoring edge_color_bipartite(const Graph& g, const Bipartition& sides) {
    require_bipartition(g, sides);
    const std::size_t delta = g.max_degree();
    const auto edges = g.edges();
    std::vector<Color> colors(edges.size(), 0);

    if (g.edge_count() == sides.x.size() * sides.y.size() && g.edge_count() > 0) {
        const std::size_t modulus = std::max(sides.x.size(), sides.y.size());
        auto rank = [](const std::vector<VertexId>& side, VertexId v) {
            return static_cast<std::size_t>(std::lower_bound(side.begin(), side.end(), v) - side.begin()) + 1;
        };
        for (std::size_t k = 0; k < edges.size(); ++k) {
            const Edge e = edges[k];
            const VertexId x = sides.in_x(e.u) ? e.u : e.v;
            const VertexId y = sides.in_x(e.u) ? e.v : e.u;
            const std::size_t i = rank(sides.x, x);
            const std::size_t j = rank(sides.y, y);
            colors[k] = static_cast<Color>((i + j - 2) % modulus + 1);
        }
        return EdgeColoring({edges.begin(), edges.end()}, std::move(colors), delta);
    }

    // slot[v][c] = index of the edge at v colored c, or npos.
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::vector<std::size_t>> slot(g.order() + 1, std::vector<std::size_t>(delta + 1, npos));
    auto free_color = [&](VertexId v) {
        for (Color c = 1; c <= delta; ++c)
            if (slot[v][c] == npos) return c;
        throw InternalError("edge_color_bipartite: no free color at vertex " + std::to_string(v));
    };
    auto other = [&](std::size_t k, VertexId v) { return edges[k].u == v ? edges[k].v : edges[k].u; };

    for (std::size_t k = 0; k < edges.size(); ++k) {
        const VertexId a = edges[k].u;
        const VertexId b = edges[k].v;
        const Color alpha = free_color(a);
        const Color beta = free_color(b);
        if (slot[b][alpha] != npos) {
            // Swap alpha/beta along the alternating path leaving b on alpha.
            // In a bipartite graph this path cannot reach a.
            std::vector<std::size_t> path;
            VertexId cur = b;
            Color want = alpha;
            while (slot[cur][want] != npos) {
                const std::size_t e = slot[cur][want];
                path.push_back(e);
                cur = other(e, cur);
                want = want == alpha ? beta : alpha;
            }
            for (std::size_t e : path) {
                slot[edges[e].u][colors[e]] = npos;
                slot[edges[e].v][colors[e]] = npos;
            }
            for (std::size_t e : path) {
                colors[e] = colors[e] == alpha ? beta : alpha;
                slot[edges[e].u][colors[e]] = e;
                slot[edges[e].v][colors[e]] = e;
            }
        }
        colors[k] = alpha;
        slot[a][alpha] = k;
        slot[b][alpha] = k;
    }
    return EdgeColoring({edges.begin(), edges.end()}, std::move(colors), delta);
}

// ---------------------------------------------------------------- kernels

std::vector<Edge> stable_matching(std::span<const Edge> candidates, const PreferenceSystem& prefs) {
    if (candidates.empty()) throw InputError("stable_matching: candidate set is empty");

    std::map<VertexId, std::vector<Edge>> proposals;
    for (const Edge& e : candidates) proposals[prefs.x_end(e)].push_back(e);
    for (auto& [x, list] : proposals)
        std::sort(list.begin(), list.end(),
                  [&](Edge a, Edge b) { return prefs.base.color(a) > prefs.base.color(b); });

    std::map<VertexId, std::size_t> next;
    std::map<VertexId, Edge> held;
    std::deque<VertexId> free;
    for (const auto& [x, list] : proposals) free.push_back(x);

    while (!free.empty()) {
        const VertexId x = free.front();
        free.pop_front();
        std::size_t& pos = next[x];
        const auto& list = proposals[x];
        if (pos == list.size()) continue;  // rejected everywhere; stays unmatched
        const Edge e = list[pos++];
        const VertexId y = prefs.y_end(e);
        auto it = held.find(y);
        if (it == held.end()) {
            held.emplace(y, e);
        } else if (prefs.base.color(e) < prefs.base.color(it->second)) {
            free.push_back(prefs.x_end(it->second));
            it->second = e;
        } else {
            free.push_back(x);
        }
    }

    std::vector<Edge> matching;
    matching.reserve(held.size());
    for (const auto& [y, e] : held) matching.push_back(e);
    std::sort(matching.begin(), matching.end());
    return matching;
}

bool kernel_check(std::span<const Edge> candidates, const PreferenceSystem& prefs, std::span<const Edge> matching) {
    auto in = [](std::span<const Edge> set, Edge e) { return std::find(set.begin(), set.end(), e) != set.end(); };

    for (const Edge& m : matching)
        if (!in(candidates, m)) return false;
    for (std::size_t a = 0; a < matching.size(); ++a)
        for (std::size_t b = a + 1; b < matching.size(); ++b) {
            const Edge p = matching[a], q = matching[b];
            if (p.u == q.u || p.u == q.v || p.v == q.u || p.v == q.v) return false;
        }
    for (const Edge& e : candidates) {
        if (in(matching, e)) continue;
        const Color ce = prefs.base.color(e);
        bool absorbed = false;
        for (const Edge& m : matching) {
            const Color cm = prefs.base.color(m);
            if (prefs.x_end(m) == prefs.x_end(e) && cm > ce) absorbed = true;
            if (prefs.y_end(m) == prefs.y_end(e) && cm < ce) absorbed = true;
        }
        if (!absorbed) return false;
    }
    return true;
}

// ---------------------------------------------------------------- list edge coloring

EdgeColoring list_edge_color(const Graph& g, const Bipartition& sides, const EdgeListAssignment& lists,
                             GalvinTrace* trace) {
    require_bipartition(g, sides);
    const auto edges = g.edges();
    if (!std::equal(edges.begin(), edges.end(), lists.edges().begin(), lists.edges().end()))
        throw InputError("edge lists must cover exactly the edges of the graph");

    const std::size_t delta = g.max_degree();
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (lists.lists()[i].size() < delta)
            throw InputError("list of edge " + edge_name(edges[i]) + " has " +
                             std::to_string(lists.lists()[i].size()) + " colors; needs at least " +
                             std::to_string(delta));

    const PreferenceSystem prefs{edge_color_bipartite(g, sides), sides};
    std::vector<std::vector<Color>> remaining = lists.lists();
    std::vector<Color> colors(edges.size(), 0);
    std::vector<std::size_t> deletions(edges.size(), 0);
    if (trace) *trace = GalvinTrace{{}, {}};

    std::size_t uncolored = edges.size();
    while (uncolored > 0) {
        Color alpha = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (colors[i] != 0) continue;
            if (remaining[i].empty())
                throw InternalError("list of edge " + edge_name(edges[i]) + " ran out of colors");
            if (alpha == 0 || remaining[i].front() < alpha) alpha = remaining[i].front();
        }

        std::vector<std::size_t> offered;
        std::vector<Edge> candidates;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (colors[i] == 0 && std::binary_search(remaining[i].begin(), remaining[i].end(), alpha)) {
                offered.push_back(i);
                candidates.push_back(edges[i]);
            }

        std::vector<Edge> matched = stable_matching(candidates, prefs);
        const bool kernel_ok = kernel_check(candidates, prefs, matched);
        if (!kernel_ok) throw InternalError("stable matching is not a kernel for color " + std::to_string(alpha));
        if (matched.empty()) throw InternalError("round for color " + std::to_string(alpha) + " colored nothing");

        for (std::size_t i : offered) {
            if (std::binary_search(matched.begin(), matched.end(), edges[i])) {
                colors[i] = alpha;
                --uncolored;
            } else {
                auto& l = remaining[i];
                l.erase(std::lower_bound(l.begin(), l.end(), alpha));
                ++deletions[i];
            }
        }
        if (trace) trace->rounds.push_back({alpha, std::move(candidates), std::move(matched), kernel_ok});
    }

    if (trace) trace->deletions = std::move(deletions);
    const std::size_t used = std::set<Color>(colors.begin(), colors.end()).size();
    return EdgeColoring({edges.begin(), edges.end()}, std::move(colors), used);
}

VerifyReport verify_edge_coloring(const Graph& g, const EdgeColoring& coloring, const EdgeListAssignment* lists) {
    if (coloring.size() != g.edge_count())
        throw InputError("edge coloring covers " + std::to_string(coloring.size()) + " edges, graph has " +
                         std::to_string(g.edge_count()));
    if (g.edge_count() == 0) return {};
    const Graph lg = line_graph(g);
    std::vector<Color> f;
    std::vector<std::vector<Color>> allowed;
    for (VertexId v : lg.vertices()) {
        const Edge e = lg.label(v).edge();
        f.push_back(coloring.color(e));
        if (lists) {
            auto l = lists->list(e);
            allowed.emplace_back(l.begin(), l.end());
        } else {
            allowed.push_back({f.back()});
        }
    }
    return is_proper_coloring(lg, ListAssignment(std::move(allowed)), Coloring(std::move(f)));
}

}  // namespace listpack
