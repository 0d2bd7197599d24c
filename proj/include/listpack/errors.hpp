#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "listpack/graph_fwd.hpp"

namespace listpack {

/// Malformed or out-of-contract input supplied by a caller.
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by bipartition(); carries an odd cycle as the witness.
class NotBipartite : public InputError {
  public:
    explicit NotBipartite(std::vector<VertexId> cycle);

    const std::vector<VertexId>& cycle() const noexcept { return cycle_; }

  private:
    std::vector<VertexId> cycle_;
};

/// The request lies outside the regime an algorithm is proven for (e.g. m < n).
class UnsupportedRegime : public InputError {
  public:
    using InputError::InputError;
};

/// An algorithmic guarantee was violated. Never expected; surfaced loudly.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// A search ran out of budget before reaching a verdict.
class SearchExhausted : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace listpack
