#include "listpack/search.hpp"

#include <algorithm>
#include <chrono>
#include <compare>

#include "listpack/errors.hpp"

namespace listpack {

namespace {

class BudgetMeter {
  public:
    explicit BudgetMeter(const SearchBudget& budget) : budget_(budget), start_(Clock::now()) {
        if (budget.node_limit == 0 || !(budget.time_limit > 0.0))
            throw InputError("search budget limits must be positive");
    }

    /// Counts one node; false once either limit has been hit.
    bool tick() {
        if (aborted_) return false;
        ++nodes_;
        if (nodes_ > budget_.node_limit) aborted_ = true;
        if ((nodes_ & 0x3ff) == 0 &&
            std::chrono::duration<double>(Clock::now() - start_).count() > budget_.time_limit)
            aborted_ = true;
        return !aborted_;
    }

    bool aborted() const noexcept { return aborted_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

  private:
    using Clock = std::chrono::steady_clock;
    SearchBudget budget_;
    Clock::time_point start_;
    std::uint64_t nodes_{0};
    bool aborted_{false};
};

void require_cover(const Graph& g, const ListAssignment& lists) {
    if (lists.vertex_count() != g.order())
        throw InputError("list assignment covers " + std::to_string(lists.vertex_count()) +
                         " vertices, graph has " + std::to_string(g.order()));
}

class ListColoringSearch {
  public:
    ListColoringSearch(const Graph& g, const ListAssignment& lists, const SearchBudget& budget)
        : g_(g), meter_(budget), domain_(lists.lists()), chosen_(g.order(), 0) {}

    bool run() { return assign(1); }
    const BudgetMeter& meter() const noexcept { return meter_; }
    Coloring coloring() const { return Coloring(chosen_); }

  private:
    bool assign(VertexId v) {
        if (v > g_.order()) return true;
        const std::vector<Color> options = domain_[v - 1];
        for (Color c : options) {
            if (!meter_.tick()) return false;
            chosen_[v - 1] = c;
            const std::size_t mark = trail_.size();
            bool wipeout = false;
            // Later neighbors are exactly the uncolored ones.
            for (VertexId w : g_.neighbors(v)) {
                if (w < v) continue;
                auto& d = domain_[w - 1];
                auto it = std::lower_bound(d.begin(), d.end(), c);
                if (it == d.end() || *it != c) continue;
                d.erase(it);
                trail_.emplace_back(w, c);
                if (d.empty()) {
                    wipeout = true;
                    break;
                }
            }
            if (!wipeout && assign(v + 1)) return true;
            if (meter_.aborted()) return false;
            while (trail_.size() > mark) {
                auto [w, removed] = trail_.back();
                trail_.pop_back();
                auto& d = domain_[w - 1];
                d.insert(std::lower_bound(d.begin(), d.end(), removed), removed);
            }
        }
        return false;
    }

    const Graph& g_;
    BudgetMeter meter_;
    std::vector<std::vector<Color>> domain_;
    std::vector<Color> chosen_;
    std::vector<std::pair<VertexId, Color>> trail_;
};

/// One injective k-tuple per vertex; position j of every tuple forms row j.
/// Rows are interchangeable, so vertex 1's tuple is fixed increasing.
class PackingSearch {
  public:
    PackingSearch(const Graph& g, const ListAssignment& lists, std::size_t k, const SearchBudget& budget)
        : g_(g), lists_(lists), k_(k), meter_(budget), tuple_(g.order(), std::vector<Color>(k, 0)) {}

    bool run() { return place(1, 0); }
    const BudgetMeter& meter() const noexcept { return meter_; }

    Packing packing() const {
        std::vector<Coloring> rows;
        for (std::size_t j = 0; j < k_; ++j) {
            std::vector<Color> row;
            for (const auto& t : tuple_) row.push_back(t[j]);
            rows.emplace_back(std::move(row));
        }
        return Packing(std::move(rows));
    }

  private:
    bool place(VertexId v, std::size_t j) {
        if (v > g_.order()) return true;
        if (j == k_) return place(v + 1, 0);
        auto& t = tuple_[v - 1];
        for (Color c : lists_.list(v)) {
            if (v == 1 && j > 0 && c <= t[j - 1]) continue;
            if (std::find(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(j), c) != t.begin() + static_cast<std::ptrdiff_t>(j))
                continue;
            bool clash = false;
            for (VertexId u : g_.neighbors(v)) {
                if (u >= v) break;
                if (tuple_[u - 1][j] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            if (!meter_.tick()) return false;
            t[j] = c;
            if (place(v, j + 1)) return true;
            if (meter_.aborted()) return false;
        }
        return false;
    }

    const Graph& g_;
    const ListAssignment& lists_;
    std::size_t k_;
    BudgetMeter meter_;
    std::vector<std::vector<Color>> tuple_;
};

void check_packing_request(const Graph& g, const ListAssignment& lists, std::size_t k) {
    require_cover(g, lists);
    if (k == 0) throw InputError("packing size must be at least 1");
    if (lists.min_list_size() < k)
        throw InputError("every list needs at least " + std::to_string(k) + " colors for a packing of size " +
                         std::to_string(k));
}

Packing certified(const Graph& g, const ListAssignment& lists, Packing p) {
    const VerifyReport report = is_proper_packing(g, lists, p);
    if (!report.ok()) throw InternalError("packing search produced an invalid packing: " + report.summary());
    return p;
}

// ---------------------------------------------------------------- canonical forms

/// Decides whether some color renaming maps the given lists (a prefix of an
/// assignment, lists sorted) to a lexicographically smaller sequence. Only
/// renamings sending first-seen colors onto the next fresh block need to be
/// tried: the least member of a class always has that shape.
class MinimalityCheck {
  public:
    explicit MinimalityCheck(const std::vector<std::vector<Color>>& lists) : lists_(lists), scratch_(lists.size()) {
        Color top = 0;
        for (const auto& l : lists) top = std::max(top, l.empty() ? Color{0} : l.back());
        image_.assign(top + 1, 0);
    }

    bool minimal() { return search(0); }

  private:
    struct Scratch {
        std::vector<Color> img;
        std::vector<Color> fresh;
    };

    bool search(std::size_t v) {
        if (v == lists_.size()) return true;
        const auto& list = lists_[v];
        auto& [img, fresh] = scratch_[v];
        img.clear();
        fresh.clear();
        for (Color c : list) (image_[c] ? img.push_back(image_[c]) : fresh.push_back(c));
        std::sort(img.begin(), img.end());
        for (std::size_t t = 0; t < fresh.size(); ++t) img.push_back(next_ + static_cast<Color>(t));

        const auto cmp = img <=> list;
        if (cmp < 0) return false;
        if (cmp > 0) return true;

        const Color base = next_;
        next_ += static_cast<Color>(fresh.size());
        bool ok = true;
        do {
            for (std::size_t t = 0; t < fresh.size(); ++t) image_[fresh[t]] = base + static_cast<Color>(t);
            ok = search(v + 1);
        } while (ok && std::next_permutation(fresh.begin(), fresh.end()));
        for (Color c : fresh) image_[c] = 0;
        next_ = base;
        return ok;
    }

    const std::vector<std::vector<Color>>& lists_;
    std::vector<Scratch> scratch_;
    std::vector<Color> image_;
    Color next_{1};
};

bool prefix_minimal(const std::vector<std::vector<Color>>& lists) { return MinimalityCheck(lists).minimal(); }

/// Generates least class members vertex by vertex. For the current prefix it
/// keeps every fresh-block renaming that maps the prefix onto itself; a new
/// list is accepted when none of those renamings makes it smaller.
class CanonicalEnumerator {
  public:
    CanonicalEnumerator(std::size_t n, std::size_t k, const std::function<bool(const ListAssignment&)>& visit)
        : n_(n), k_(k), visit_(visit), cache_(n * k + 1), survivors_(n + 1) {
        survivors_[0].push_back({std::vector<Color>(n * k + 1, 0), 1});
    }

    void run() { extend(0); }

  private:
    struct Renaming {
        std::vector<Color> image;  // 0 = not yet named
        Color next{1};
    };

    // Candidate lists at a vertex: any subset of the colors seen so far,
    // topped up with the next fresh colors.
    const std::vector<std::vector<Color>>& candidates(Color used) {
        auto& out = cache_[used];
        if (!out.empty()) return out;
        const std::size_t max_old = std::min<std::size_t>(k_, used);
        for (std::size_t s = 0; s <= max_old; ++s) {
            std::vector<bool> pick(used, false);
            std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(s), true);
            do {
                std::vector<Color> list;
                for (Color c = 1; c <= used; ++c)
                    if (pick[c - 1]) list.push_back(c);
                for (std::size_t t = 0; t < k_ - s; ++t) list.push_back(used + 1 + static_cast<Color>(t));
                out.push_back(std::move(list));
            } while (std::prev_permutation(pick.begin(), pick.end()));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Fills survivors_[depth + 1]; false if some renaming beats `list`.
    bool advance(std::size_t depth, const std::vector<Color>& list) {
        auto& next = survivors_[depth + 1];
        next.clear();
        for (const Renaming& r : survivors_[depth]) {
            img_.clear();
            fresh_.clear();
            for (Color c : list) (r.image[c] ? img_.push_back(r.image[c]) : fresh_.push_back(c));
            std::sort(img_.begin(), img_.end());
            for (std::size_t t = 0; t < fresh_.size(); ++t) img_.push_back(r.next + static_cast<Color>(t));
            const auto cmp = img_ <=> list;
            if (cmp < 0) return false;
            if (cmp > 0) continue;
            do {
                Renaming extended = r;
                for (std::size_t t = 0; t < fresh_.size(); ++t) extended.image[fresh_[t]] = r.next + static_cast<Color>(t);
                extended.next = r.next + static_cast<Color>(fresh_.size());
                next.push_back(std::move(extended));
            } while (std::next_permutation(fresh_.begin(), fresh_.end()));
        }
        return true;
    }

    void extend(Color used) {
        const std::size_t depth = current_.size();
        if (depth == n_) {
            if (!visit_(ListAssignment(current_))) stopped_ = true;
            return;
        }
        for (const auto& list : candidates(used)) {
            if (!advance(depth, list)) continue;
            current_.push_back(list);
            extend(std::max(used, list.back()));
            current_.pop_back();
            if (stopped_) return;
        }
    }

    std::size_t n_;
    std::size_t k_;
    const std::function<bool(const ListAssignment&)>& visit_;
    std::vector<std::vector<Color>> current_;
    // Candidate lists by number of colors seen; sized up front so references stay valid.
    std::vector<std::vector<std::vector<Color>>> cache_;
    std::vector<std::vector<Renaming>> survivors_;
    std::vector<Color> img_;
    std::vector<Color> fresh_;
    bool stopped_{false};
};

using LevelPredicate = std::function<SearchStatus(const ListAssignment&, std::size_t)>;

/// Least k <= k_max for which every canonical k-assignment satisfies the
/// predicate (found = satisfied, absent = violated).
ChiStarResult scan_levels(const Graph& g, std::size_t k_max, const LevelPredicate& holds) {
    if (g.order() > max_scan_vertices)
        throw InputError("exhaustive scans are limited to " + std::to_string(max_scan_vertices) + " vertices");
    if (k_max == 0) throw InputError("max k must be at least 1");

    ChiStarResult result;
    for (std::size_t k = 1; k <= k_max; ++k) {
        LevelSummary level{k, 0, false};
        std::optional<ListAssignment> witness;
        bool exhausted = false;
        for_each_canonical_assignment(g.order(), k, [&](const ListAssignment& lists) {
            ++level.assignments_checked;
            const SearchStatus s = holds(lists, k);
            if (s == SearchStatus::absent) {
                witness = lists;
                return false;
            }
            if (s == SearchStatus::exhausted) exhausted = true;
            return true;
        });
        level.bad_found = witness.has_value();
        result.levels.push_back(level);

        if (witness) {
            result.lower_witness = std::move(witness);
            continue;
        }
        if (exhausted) {
            result.status = SearchStatus::exhausted;
            return result;
        }
        result.status = SearchStatus::found;
        result.value = k;
        result.upper_evidence = level.assignments_checked;
        result.color_cap = static_cast<Color>(g.order() * k);
        return result;
    }
    result.status = SearchStatus::absent;
    result.color_cap = static_cast<Color>(g.order() * k_max);
    return result;
}

}  // namespace

// ---------------------------------------------------------------- public API

SearchOutcome<Coloring> solve_list_coloring(const Graph& g, const ListAssignment& lists, const SearchBudget& budget) {
    require_cover(g, lists);
    ListColoringSearch search(g, lists, budget);
    const bool ok = search.run();
    const std::uint64_t nodes = search.meter().nodes();
    if (search.meter().aborted()) return SearchOutcome<Coloring>::exhausted(nodes);
    if (!ok) return SearchOutcome<Coloring>::absent(nodes);
    Coloring f = search.coloring();
    const VerifyReport report = is_proper_coloring(g, lists, f);
    if (!report.ok()) throw InternalError("list coloring search produced an invalid coloring: " + report.summary());
    return SearchOutcome<Coloring>::found(std::move(f), nodes);
}

SearchOutcome<Packing> solve_packing(const Graph& g, const ListAssignment& lists, std::size_t k,
                                     const SearchBudget& budget) {
    check_packing_request(g, lists, k);
    PackingSearch search(g, lists, k, budget);
    const bool ok = search.run();
    const std::uint64_t nodes = search.meter().nodes();
    if (search.meter().aborted()) return SearchOutcome<Packing>::exhausted(nodes);
    if (!ok) return SearchOutcome<Packing>::absent(nodes);
    return SearchOutcome<Packing>::found(certified(g, lists, search.packing()), nodes);
}

SearchOutcome<Packing> solve_packing_lifted(const Graph& g, const ListAssignment& lists, std::size_t k,
                                            const SearchBudget& budget) {
    check_packing_request(g, lists, k);
    const LiftedInstance lifted = lift_lists(g, lists, k);
    auto coloring = solve_list_coloring(lifted.product, lifted.lists, budget);
    if (!coloring.is_found()) return {coloring.status, std::nullopt, coloring.nodes};
    Packing p = extract_packing(g, k, lifted.product, *coloring.value);
    return SearchOutcome<Packing>::found(certified(g, lists, std::move(p)), coloring.nodes);
}

void for_each_canonical_assignment(std::size_t n, std::size_t k,
                                   const std::function<bool(const ListAssignment&)>& visit) {
    if (n == 0 || k == 0) throw InputError("canonical enumeration needs n >= 1 and k >= 1");
    CanonicalEnumerator(n, k, visit).run();
}

std::vector<ListAssignment> enumerate_canonical_assignments(const Graph& g, std::size_t k) {
    std::vector<ListAssignment> out;
    for_each_canonical_assignment(g.order(), k, [&](const ListAssignment& l) {
        out.push_back(l);
        return true;
    });
    return out;
}

bool is_canonical_assignment(const ListAssignment& lists) {
    if (!lists.uniform_size()) return false;
    return prefix_minimal(lists.lists());
}

SearchOutcome<ListAssignment> find_bad_assignment(const Graph& g, std::size_t k, const SearchBudget& budget) {
    std::optional<ListAssignment> witness;
    bool exhausted = false;
    std::uint64_t nodes = 0;
    for_each_canonical_assignment(g.order(), k, [&](const ListAssignment& lists) {
        auto outcome = solve_packing(g, lists, k, budget);
        nodes += outcome.nodes;
        if (outcome.is_absent()) {
            witness = lists;
            return false;
        }
        if (outcome.is_exhausted()) exhausted = true;
        return true;
    });
    if (witness) return SearchOutcome<ListAssignment>::found(std::move(*witness), nodes);
    if (exhausted) return SearchOutcome<ListAssignment>::exhausted(nodes);
    return SearchOutcome<ListAssignment>::absent(nodes);
}

std::size_t chromatic_number(const Graph& g, const SearchBudget& budget) {
    if (g.order() > 64) throw InputError("chromatic_number is limited to 64 vertices");
    for (std::size_t t = 1; t <= g.order(); ++t) {
        auto outcome = solve_list_coloring(g, ListAssignment::identical(g.order(), t), budget);
        if (outcome.is_found()) return t;
        if (outcome.is_exhausted())
            throw SearchExhausted("chromatic_number: budget exhausted while testing " + std::to_string(t) + " colors");
    }
    throw InternalError("chromatic_number: no coloring with n colors");
}

ChiStarResult list_chromatic_number(const Graph& g, std::size_t k_max, const SearchBudget& budget) {
    return scan_levels(g, k_max, [&](const ListAssignment& lists, std::size_t) {
        return solve_list_coloring(g, lists, budget).status;
    });
}

ChiStarResult list_packing_number(const Graph& g, std::size_t k_max, const SearchBudget& budget) {
    return scan_levels(g, k_max, [&](const ListAssignment& lists, std::size_t k) {
        return solve_packing(g, lists, k, budget).status;
    });
}

}  // namespace listpack
