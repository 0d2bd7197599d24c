#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

namespace listpack {

/// Tri-state verdict of an exhaustive search. `absent` always means the
/// search space was fully explored; `exhausted` means the budget ran out.
enum class SearchStatus { found, absent, exhausted };

constexpr std::string_view to_string(SearchStatus s) noexcept {
    switch (s) {
        case SearchStatus::found:
            return "found";
        case SearchStatus::absent:
            return "absent";
        case SearchStatus::exhausted:
            return "exhausted";
    }
    return "?";
}

template <typename T>
struct SearchOutcome {
    SearchStatus status{SearchStatus::absent};
    std::optional<T> value;
    std::uint64_t nodes{0};

    static SearchOutcome found(T v, std::uint64_t nodes = 0) {
        return {SearchStatus::found, std::move(v), nodes};
    }
    static SearchOutcome absent(std::uint64_t nodes = 0) {
        return {SearchStatus::absent, std::nullopt, nodes};
    }
    static SearchOutcome exhausted(std::uint64_t nodes = 0) {
        return {SearchStatus::exhausted, std::nullopt, nodes};
    }

    bool is_found() const noexcept { return status == SearchStatus::found; }
    bool is_absent() const noexcept { return status == SearchStatus::absent; }
    bool is_exhausted() const noexcept { return status == SearchStatus::exhausted; }
};

}  // namespace listpack
