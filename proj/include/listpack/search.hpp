#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "listpack/coloring.hpp"
#include "listpack/graph.hpp"
#include "listpack/outcome.hpp"

namespace listpack {

/// Per-search limits. Hitting either one yields SearchStatus::exhausted,
/// never a wrong verdict.
struct SearchBudget {
    std::uint64_t node_limit{200'000'000};
    double time_limit{300.0};  // seconds
};

/// Backtracking in vertex order with forward checking. A found coloring has
/// already been re-verified.
SearchOutcome<Coloring> solve_list_coloring(const Graph& g, const ListAssignment& lists,
                                            const SearchBudget& budget = {});

/// Size-k proper packing, searched directly as one injective k-tuple per
/// vertex with row-wise properness. Requires every list to hold >= k colors.
SearchOutcome<Packing> solve_packing(const Graph& g, const ListAssignment& lists, std::size_t k,
                                     const SearchBudget& budget = {});

/// Same question answered by list-coloring g □ K_k under the lifted lists and
/// extracting the layers.
SearchOutcome<Packing> solve_packing_lifted(const Graph& g, const ListAssignment& lists, std::size_t k,
                                            const SearchBudget& budget = {});

/// Visits one representative per color-renaming class of k-assignments on n
/// vertices: the lexicographically least member of the class, comparing the
/// sequence of sorted lists. Colors used never exceed n*k. Visiting stops
/// early when the visitor returns false.
void for_each_canonical_assignment(std::size_t n, std::size_t k,
                                   const std::function<bool(const ListAssignment&)>& visit);

std::vector<ListAssignment> enumerate_canonical_assignments(const Graph& g, std::size_t k);

/// True iff `lists` is the representative for_each_canonical_assignment
/// would produce for its class.
bool is_canonical_assignment(const ListAssignment& lists);

/// First canonical k-assignment that admits no proper packing of size k.
/// absent: every canonical k-assignment packs. exhausted: some instance hit
/// the budget and no witness was found.
SearchOutcome<ListAssignment> find_bad_assignment(const Graph& g, std::size_t k,
                                                  const SearchBudget& budget = {});

/// Least t admitting a proper t-coloring. Throws SearchExhausted on budget
/// abort and InputError above 64 vertices.
std::size_t chromatic_number(const Graph& g, const SearchBudget& budget = {});

/// Per-level tally from a χ_ℓ or χ*_ℓ scan.
struct LevelSummary {
    std::size_t k{0};
    std::uint64_t assignments_checked{0};
    bool bad_found{false};
};

/// Certificate for χ_ℓ or χ*_ℓ.
///
/// status == found: `value` is exact; `lower_witness` (absent when value is 1)
/// is a (value-1)-assignment failing the property; `upper_evidence` counts
/// the canonical value-assignments that all satisfied it.
/// status == absent: every k <= k_max has a witness, so the true value
/// exceeds k_max; `lower_witness` is the k_max witness.
/// status == exhausted: some search ran out of budget.
struct ChiStarResult {
    SearchStatus status{SearchStatus::exhausted};
    std::size_t value{0};
    std::optional<ListAssignment> lower_witness;
    std::uint64_t upper_evidence{0};
    Color color_cap{0};  // n * value: the ground set quantified over
    std::vector<LevelSummary> levels;
};

/// Vertex-count guard for the canonical scans below.
inline constexpr std::size_t max_scan_vertices = 8;

ChiStarResult list_chromatic_number(const Graph& g, std::size_t k_max, const SearchBudget& budget = {});
ChiStarResult list_packing_number(const Graph& g, std::size_t k_max, const SearchBudget& budget = {});

}  // namespace listpack
