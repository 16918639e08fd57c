#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "maxleaf/digraph.hpp"
#include "maxleaf/trace.hpp"

namespace maxleaf {

/// Restores the standing assumptions: deletes arcs into the root and arcs
/// (x,y) with x != r and y in N+(r), and absorbs a root of outdegree 1 into
/// its outneighbour while n > 2. The returned steps are the normalization note;
/// empty when the input was already normalized.
Transformed normalize(const RootedDigraph& d);

enum class Rule0 { kPass, kFalse };

/// Rule (0): FALSE iff some vertex is unreachable from the root.
Rule0 rule0(const RootedDigraph& d);

/// Rule (1) at cutvertex x, followed by re-normalization.
Transformed apply_rule1(const RootedDigraph& d, Vertex x);

using Bipath = std::array<Vertex, 5>;

/// True iff (u,x,y,z,t) are distinct and the arcs incident to x, y, z are
/// exactly the double links between consecutive path vertices.
bool is_bipath(const RootedDigraph& d, const Bipath& p);

/// First length-4 bipath by increasing id of its middle vertex.
std::optional<Bipath> find_bipath(const RootedDigraph& d);

/// Rule (2): contracts x and y of the bipath, then re-normalizes.
Transformed apply_rule2(const RootedDigraph& d, const Bipath& p);

/// True iff y is an in-neighbour of x and N-(x) - y cuts y from the root.
bool rule3_applies(const RootedDigraph& d, Vertex x, Vertex y);

/// First (y,x) arc deletable by Rule (3), scanning x then y by increasing id.
std::optional<Arc> find_rule3_arc(const RootedDigraph& d);

/// Rule (3): deletes arc (y,x), then re-normalizes.
Transformed apply_rule3(const RootedDigraph& d, Vertex x, Vertex y);

struct Kernel {
  RootedDigraph reduced;
  ReductionTrace trace;
};

/// Normalizes, then applies Rules (1)-(3) until none applies: Rule (1) to
/// exhaustion, then Rule (3), then Rule (2), repeating. Throws
/// InfeasibleInstance if Rule (0) fails.
Kernel kernelize(const RootedDigraph& d);

/// Normalizes and applies only Rule (1) to exhaustion. The result is
/// 2-connected whenever Rule (0) passes.
Kernel exhaust_rule1(const RootedDigraph& d);

/// (3k-2)(30k-2).
std::int64_t kernel_threshold(int k);

/// Outbranching with at least indegree(x) leaves on a Rule-(3)-reduced
/// digraph, built from root-to-u paths that avoid N-(x) - u.
Outbranching large_indegree_witness(const RootedDigraph& d, Vertex x);

enum class Verdict { kTrueWithWitness, kFalse, kReduced };

struct KernelDecision {
  Verdict verdict = Verdict::kFalse;
  std::optional<Outbranching> witness;  // on the input digraph
  RootedDigraph reduced;
  ReductionTrace trace;
  int k = 0;
};

/// Kernel decision procedure for "is there an outbranching with >= k leaves".
KernelDecision decide(const RootedDigraph& d, int k);

}  // namespace maxleaf
