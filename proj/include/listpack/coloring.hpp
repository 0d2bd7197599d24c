#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "listpack/graph.hpp"

namespace listpack {

/// Colors are opaque positive integers; nothing assumes contiguity.
using Color = std::uint32_t;

/// A list of allowed colors per vertex. Lists are stored sorted; construction
/// rejects empty lists, color 0 and repeated colors.
class ListAssignment {
  public:
    ListAssignment() = default;
    explicit ListAssignment(std::vector<std::vector<Color>> lists);

    /// Same list at each of n vertices.
    static ListAssignment uniform(std::size_t n, std::vector<Color> list);
    /// The list {1..k} at each of n vertices.
    static ListAssignment identical(std::size_t n, std::size_t k);

    std::size_t vertex_count() const noexcept { return lists_.size(); }
    std::span<const Color> list(VertexId v) const;
    bool allows(VertexId v, Color c) const;

    /// k when every list has exactly k colors.
    std::optional<std::size_t> uniform_size() const noexcept;
    std::size_t min_list_size() const noexcept;
    Color max_color() const noexcept;

    const std::vector<std::vector<Color>>& lists() const noexcept { return lists_; }

    bool operator==(const ListAssignment&) const = default;
    auto operator<=>(const ListAssignment&) const = default;

  private:
    std::vector<std::vector<Color>> lists_;
};

/// Random k-assignment: each list is k distinct colors drawn uniformly from [palette].
ListAssignment random_assignment(std::size_t n, std::size_t k, Color palette, std::mt19937_64& rng);

/// A total vertex -> color map. Properness and list membership are checked
/// separately.
class Coloring {
  public:
    Coloring() = default;
    explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {}

    std::size_t vertex_count() const noexcept { return colors_.size(); }
    Color operator[](VertexId v) const { return colors_.at(v - 1); }
    const std::vector<Color>& values() const noexcept { return colors_; }

    bool operator==(const Coloring&) const = default;

  private:
    std::vector<Color> colors_;
};

/// Ordered collection of k >= 1 colorings over the same vertex set. Row order
/// carries no meaning beyond reproducible output.
class Packing {
  public:
    explicit Packing(std::vector<Coloring> rows);

    std::size_t size() const noexcept { return rows_.size(); }
    std::size_t vertex_count() const noexcept { return rows_.front().vertex_count(); }
    /// 1-based row access: row(j) is f_j.
    const Coloring& row(std::size_t j) const { return rows_.at(j - 1); }
    const std::vector<Coloring>& rows() const noexcept { return rows_; }
    /// Colors at v across all rows, in row order.
    std::vector<Color> column(VertexId v) const;

    bool operator==(const Packing&) const = default;

  private:
    std::vector<Coloring> rows_;
};

enum class ViolationKind { not_in_list, not_proper, not_disjoint };

std::string_view to_string(ViolationKind kind) noexcept;

/// One concrete defect. `vertex` is set for not_in_list/not_disjoint, `edge`
/// for not_proper. `indices` are 1-based coloring indices (empty when a
/// single coloring is checked).
struct Violation {
    ViolationKind kind{ViolationKind::not_in_list};
    VertexId vertex{0};
    Edge edge{};
    std::vector<std::size_t> indices;

    std::string describe() const;

    bool operator==(const Violation&) const = default;
    auto operator<=>(const Violation&) const = default;
};

struct VerifyReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    std::string summary() const;
};

/// Throws InputError if the coloring or lists do not cover exactly V(g).
VerifyReport is_proper_coloring(const Graph& g, const ListAssignment& lists, const Coloring& f);
VerifyReport is_proper_packing(const Graph& g, const ListAssignment& lists, const Packing& p);

struct LiftedInstance {
    Graph product;         // g □ K_k
    ListAssignment lists;  // lists(Pair(v_i, u_j)) = L(v_i)
};

LiftedInstance lift_lists(const Graph& g, const ListAssignment& lists, std::size_t k);

/// f_j(v_i) = f(Pair(v_i, u_j)), located through the product's labels. Pure
/// reindexing: nothing is verified. Throws InputError when the product does
/// not carry the expected Pair labels.
Packing extract_packing(const Graph& g, std::size_t k, const Graph& product, const Coloring& product_coloring);
/// Same, against the canonical product g □ K_k.
Packing extract_packing(const Graph& g, std::size_t k, const Coloring& product_coloring);

}  // namespace listpack
