#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "maxleaf/digraph.hpp"

namespace maxleaf {

// Every payload is expressed in the vertex ids of the digraph *before* the
// step. `ReductionStep::kept[v']` is the pre-step id of post-step vertex v'.

/// Arcs removed while restoring the standing assumptions.
struct ArcDeletion {
  std::vector<Arc> arcs;
};

/// Root of outdegree 1 absorbed into its unique outneighbour, which becomes
/// the new root.
struct RootMerge {
  Vertex old_root = kNoVertex;
  Vertex absorbed = kNoVertex;
};

/// Rule (1): cutvertex x deleted, shortcuts (v,z) for v in N-(x), z in N+(x)-v.
struct CutvertexRemoval {
  Vertex x = kNoVertex;
  std::vector<Vertex> in;
  std::vector<Vertex> out;
};

/// Rule (2): bipath (u,x,y,z,t); x and y merge into the vertex that keeps x's
/// position.
struct BipathContraction {
  std::array<Vertex, 5> path{};
};

/// Rule (3): arc (y,x) deleted because N-(x)-y cuts y from the root.
struct RedundantArc {
  Arc arc;
};

using StepAction =
    std::variant<ArcDeletion, RootMerge, CutvertexRemoval, BipathContraction, RedundantArc>;

struct ReductionStep {
  StepAction action;
  int vertex_count_before = 0;
  std::vector<Vertex> kept;

  std::string describe() const;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;

  void append(std::vector<ReductionStep> more);
  /// One line per step, for debugging only.
  std::string to_text() const;
};

/// A derived digraph together with the steps that produced it.
struct Transformed {
  RootedDigraph graph;
  std::vector<ReductionStep> steps;
};

// Primitive transformations. Each produces exactly one step and performs no
// re-normalization; preconditions beyond index validity are the caller's job.
Transformed delete_arcs(const RootedDigraph& d, std::vector<Arc> arcs);
Transformed merge_root(const RootedDigraph& d);
Transformed remove_cutvertex(const RootedDigraph& d, Vertex x);
Transformed contract_bipath(const RootedDigraph& d, const std::array<Vertex, 5>& path);
Transformed remove_arc(const RootedDigraph& d, Arc arc);

/// Re-applies a recorded step to the digraph it was recorded on.
RootedDigraph replay_step(const RootedDigraph& before, const ReductionStep& step);
RootedDigraph replay(const RootedDigraph& original, const ReductionTrace& trace);

/// Turns an outbranching of the post-step digraph into one of the pre-step
/// digraph with at least as many leaves.
Outbranching lift_step(const Outbranching& after, const ReductionStep& step);

/// Lifts an outbranching of `reduced` back through the whole trace. Throws
/// PreconditionError if `t` does not verify on `reduced`.
Outbranching lift(const RootedDigraph& reduced, const Outbranching& t,
                  const ReductionTrace& trace);

}  // namespace maxleaf
