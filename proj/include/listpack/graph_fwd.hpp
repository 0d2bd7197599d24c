#pragma once

#include <compare>
#include <cstdint>

namespace listpack {

/// 1-based vertex identifier.
using VertexId = std::uint32_t;

/// Undirected edge, always stored with u < v.
struct Edge {
    VertexId u{0};
    VertexId v{0};

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId a, VertexId b) noexcept {
    return a < b ? Edge{a, b} : Edge{b, a};
}

class Graph;
class Label;
struct Bipartition;

}  // namespace listpack
