#pragma once

#include <cstdint>

#include "maxleaf/digraph.hpp"

namespace maxleaf {

inline constexpr int kDefaultExactLimit = 20;

struct ExactResult {
  int maxleaf = 0;
  Outbranching witness;
  std::uint64_t explored = 0;  // candidate internal sets tested
};

/// Exhaustive optimum. Internal sets I containing the root are tried by
/// increasing size; I works when D[I] is reachable from the root and every
/// vertex outside I has an in-neighbour in I. Throws PreconditionError above
/// `limit` vertices (at most 63) and InfeasibleInstance if some vertex is
/// unreachable.
ExactResult maxleaf_exact(const RootedDigraph& d, int limit = kDefaultExactLimit);

}  // namespace maxleaf
