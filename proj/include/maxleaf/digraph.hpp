#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace maxleaf {

using Vertex = int;
inline constexpr Vertex kNoVertex = -1;

struct Arc {
  Vertex tail = kNoVertex;
  Vertex head = kNoVertex;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Loopless digraph with a distinguished root. Arcs are deduplicated and both
/// adjacency directions are kept sorted by vertex id. Immutable once built;
/// every transformation produces a new value.
///
/// `origin()` maps each vertex to the id it had in the digraph the user
/// supplied, so reports can speak in input coordinates after vertices have
/// been removed or merged.
class RootedDigraph {
 public:
  RootedDigraph() = default;

  /// Throws PreconditionError on a loop, an endpoint out of range, a root out
  /// of range or n < 1. Parallel arcs collapse silently.
  static RootedDigraph build(int n, Vertex root, std::span<const Arc> arcs);

  /// Same as build, but carries an explicit origin map and generation.
  static RootedDigraph derive(int n, Vertex root, std::span<const Arc> arcs,
                              std::vector<Vertex> origin, std::uint64_t generation);

  int vertex_count() const noexcept { return static_cast<int>(out_.size()); }
  std::size_t arc_count() const noexcept { return arc_count_; }
  Vertex root() const noexcept { return root_; }
  std::uint64_t generation() const noexcept { return generation_; }

  std::span<const Vertex> out(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in(Vertex v) const { return in_[v]; }
  int outdegree(Vertex v) const { return static_cast<int>(out_[v].size()); }
  int indegree(Vertex v) const { return static_cast<int>(in_[v].size()); }
  bool has_arc(Vertex u, Vertex v) const;

  std::span<const Vertex> origin() const noexcept { return origin_; }

  /// All arcs, sorted lexicographically.
  std::vector<Arc> arcs() const;

  bool operator==(const RootedDigraph& other) const;

 private:
  Vertex root_ = 0;
  std::size_t arc_count_ = 0;
  std::uint64_t generation_ = 0;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<Vertex> origin_;
};

/// Spanning out-tree rooted at `root`, stored as a parent array. parent[root]
/// is kNoVertex.
class Outbranching {
 public:
  Outbranching() = default;
  Outbranching(Vertex root, std::vector<Vertex> parent)
      : root_(root), parent_(std::move(parent)) {}

  Vertex root() const noexcept { return root_; }
  int vertex_count() const noexcept { return static_cast<int>(parent_.size()); }
  Vertex parent(Vertex v) const { return parent_[v]; }
  std::span<const Vertex> parents() const noexcept { return parent_; }

  /// Vertices with no child. A lone root counts as a leaf.
  std::vector<Vertex> leaves() const;
  int leaf_count() const;
  std::vector<std::vector<Vertex>> children() const;
  std::vector<Arc> arcs() const;

  friend bool operator==(const Outbranching&, const Outbranching&) = default;

 private:
  Vertex root_ = 0;
  std::vector<Vertex> parent_;
};

struct Verification {
  bool ok = false;
  int leaf_count = 0;
  std::string reason;
};

Verification verify_outbranching(const RootedDigraph& d, const Outbranching& t);

/// Vertices reachable from the root in D - removed, as a membership mask.
/// Throws PreconditionError if `removed` contains the root.
std::vector<bool> reachable(const RootedDigraph& d, std::span<const Vertex> removed = {});

bool is_connected(const RootedDigraph& d);

/// Completes a partial out-tree to a spanning outbranching. `parent` holds
/// kNoVertex for vertices not yet attached; attached vertices must already
/// hang off the root. New vertices are hung from internal tree vertices when
/// possible, so the leaf count never drops. Throws InfeasibleInstance if some
/// vertex is unreachable.
Outbranching extend_to_spanning(const RootedDigraph& d, std::vector<Vertex> parent);

/// Immediate dominator of each vertex with respect to the root; kNoVertex for
/// the root and for unreachable vertices.
std::vector<Vertex> immediate_dominators(const RootedDigraph& d);

/// Smallest-id vertex x != r whose removal disconnects some other vertex from
/// the root, if any.
std::optional<Vertex> find_cutvertex(const RootedDigraph& d);

/// All cutvertices in increasing id order.
std::vector<Vertex> cutvertices(const RootedDigraph& d);

bool is_2connected(const RootedDigraph& d);

/// Up to `limit` internally vertex-disjoint root-to-target paths, each listed
/// from the root to the target. Unit-capacity augmenting paths on the split
/// graph.
std::vector<std::vector<Vertex>> disjoint_paths(const RootedDigraph& d, Vertex target,
                                                int limit = 2);

struct Classification {
  std::vector<bool> special;
  std::vector<bool> nice;
  std::vector<Arc> simple_arcs;

  int special_count() const;
  int nice_count() const;
};

/// Simple arcs lie on no 2-circuit; a vertex is nice if it has a simple in-arc
/// and special if it is nice or has indegree >= 3. The root is never flagged.
Classification classify(const RootedDigraph& d);

/// Forward-checks the standing assumptions: no arc into r, no arc from x != r
/// into N+(r), and outdegree(r) >= 2 unless n <= 2.
bool is_normalized(const RootedDigraph& d);

bool is_acyclic(const RootedDigraph& d);

/// Topological order of all vertices, or empty if the digraph has a cycle.
std::vector<Vertex> topological_order(const RootedDigraph& d);

std::string to_dot(const RootedDigraph& d);
std::string to_dot(const RootedDigraph& d, const Outbranching& t);

}  // namespace maxleaf
