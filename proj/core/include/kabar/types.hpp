#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace kabar {

using NodeId = std::uint32_t;
using BlockId = std::int32_t;
using EdgeWeight = std::int64_t;

inline constexpr BlockId kInvalidBlock = -1;

/// A single node relocation.
struct Move {
  NodeId node = 0;
  BlockId to = kInvalidBlock;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Thrown when an internal consistency check fails (cached cut drifts from
/// a recount, a model prediction does not match the applied delta, ...).
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

/// Thrown when a model is applied to a partition it no longer describes, or
/// when a cycle would violate block capacities.
class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kabar
