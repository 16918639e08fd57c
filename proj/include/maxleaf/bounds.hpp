#pragma once

#include <span>
#include <utility>
#include <vector>

#include "maxleaf/digraph.hpp"
#include "maxleaf/stnum.hpp"

namespace maxleaf {

using Edge = std::pair<int, int>;

/// Vertex cover of an undirected graph with no isolated vertex and at least
/// one edge, of size at most a third of the vertex count. Greedy: take a
/// vertex of maximum remaining degree while it is >= 2, otherwise one
/// endpoint of a remaining edge. Isolated vertices are ignored.
std::vector<int> vertex_cover_third(int n, std::span<const Edge> edges);

/// Given a bipartite graph A+B with every a of degree exactly 2 (edges are
/// (a, b) index pairs), returns X subset of B dominating A with
/// 3|X| <= |A| + |B|.
std::vector<int> dominate_bipartite(int a_count, int b_count, std::span<const Edge> edges);

/// Sets built while proving the acyclic bound, exposed for tests.
struct DominationScaffold {
  RootedDigraph trimmed;  // indegrees cut to at most 2
  Vertex sink = kNoVertex;
  std::vector<Vertex> z, y, a, b, x, c;
};

/// Throws PreconditionError unless d is acyclic, connected and has no arc into
/// r or from a non-root vertex into N+(r).
DominationScaffold domination_scaffold(const RootedDigraph& d);

/// Outbranching of an acyclic digraph whose internal vertices lie in the
/// scaffold's set C. With l vertices of indegree >= 2 and d = outdeg(r) >= 1 it
/// has at least (l + d - 1)/3 + 1 leaves.
Outbranching acyclic_many_leaves(const RootedDigraph& d);

/// leaves >= (l + d - 1)/3 + 1, in integers.
bool meets_acyclic_bound(int leaves, int l, int root_degree);

/// Splits d along a numbering and returns the acyclic tree of the part with
/// more vertices of indegree >= 2 (forward on a tie). Requires d normalized
/// and 2-connected.
Outbranching bound1_tree(const RootedDigraph& d);

/// Intermediate data of the nice-vertex bound.
struct TransverseDecomposition {
  RRNumbering sigma;
  RootedDigraph trimmed;              // one forward and one backward in-arc per vertex
  Outbranching forward_tree;          // T_f
  Outbranching backward_tree;         // T_b
  std::vector<Arc> forward_transverse;   // arcs of T_f transverse to T_b
  std::vector<Arc> backward_transverse;  // arcs of T_b transverse to T_f
  bool chose_forward = true;          // tree whose transverse arcs are used
  std::vector<Arc> left, right;       // split of the chosen transverse arcs
  bool chose_left = true;
  RootedDigraph combined;             // opposite tree plus the larger side
};

TransverseDecomposition transverse_decomposition(const RootedDigraph& d);

/// Outbranching with at least nice/24 leaves. Requires d normalized and
/// 2-connected.
Outbranching bound2_tree(const RootedDigraph& d);

}  // namespace maxleaf
