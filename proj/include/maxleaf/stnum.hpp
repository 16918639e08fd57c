#pragma once

#include <vector>

#include "maxleaf/digraph.hpp"

namespace maxleaf {

/// Linear order of V - r such that every vertex outside N+(r) has an
/// in-neighbour on each side of it.
struct RRNumbering {
  std::vector<Vertex> order;
  std::vector<int> position;  // position[root] == -1

  static RRNumbering from_order(int vertex_count, std::vector<Vertex> order);
  RRNumbering reversed() const;
  std::string to_text() const;
};

/// Deletes in-arcs until every vertex other than the root has indegree at
/// most 2, keeping the digraph 2-connected. For each vertex of indegree >= 3
/// the last arcs of two internally disjoint root paths are kept.
/// Throws PreconditionError unless the input is normalized and 2-connected.
RootedDigraph reduce_indegrees(const RootedDigraph& d);

/// Throws PreconditionError unless the input is normalized and 2-connected.
RRNumbering rr_numbering(const RootedDigraph& d);

bool validate_numbering(const RootedDigraph& d, const RRNumbering& sigma);

/// The two acyclic spanning subdigraphs induced by a numbering: arcs out of
/// the root plus arcs increasing (forward) or decreasing (backward) in it.
struct NumberingSplit {
  RootedDigraph forward;
  RootedDigraph backward;

  const RootedDigraph& larger() const;
};

/// Throws PreconditionError if sigma is not a valid numbering of d.
NumberingSplit split(const RootedDigraph& d, const RRNumbering& sigma);

}  // namespace maxleaf
