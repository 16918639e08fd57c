#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "maxleaf/digraph.hpp"

namespace maxleaf {

/// Maximal path of non-special vertices. anchors[0] is the special
/// in-neighbour of vertices.front(), anchors[1] that of vertices.back(); a
/// single-vertex component lists both of its in-neighbours.
struct WeakBipath {
  std::vector<Vertex> vertices;
  std::array<Vertex, 2> anchors{kNoVertex, kNoVertex};
};

/// Throws PreconditionError unless d is normalized and 2-connected, and
/// InvariantViolation if a non-special vertex breaks the two-circuit pattern.
std::vector<WeakBipath> weak_bipaths(const RootedDigraph& d);

/// Outbranching with at least h - l leaves: grows a tree through at most one
/// non-special component per special vertex, then extends it.
Outbranching majbound_tree(const RootedDigraph& d);

/// Non-negative rational, compared exactly.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Fraction& a, const Fraction& b) { return a.num * b.den == b.num * a.den; }
  friend auto operator<=>(const Fraction& a, const Fraction& b) { return a.num * b.den <=> b.num * a.den; }
  std::string to_string() const;
};

struct ApproxReport {
  int l = 0;  // special vertices of the 2-connected digraph
  int h = 0;  // non-special components
  int leaves_bound1 = 0;
  int leaves_bound2 = 0;
  int leaves_majbound = 0;
  int chosen = 0;  // 0 bound1, 1 bound2, 2 majbound
  int leaves = 0;  // of the lifted tree
  Fraction lower;  // max(l/30, h - l)
  int upper = 0;   // l + 2h

  std::string chosen_name() const;
  std::string to_text() const;
};

struct Approximation {
  Outbranching tree;  // on the input digraph
  ApproxReport report;
};

/// Factor-92 approximation. Throws InfeasibleInstance if some vertex is
/// unreachable from the root.
Approximation approximate(const RootedDigraph& d0);

/// Best constructive witness on the fully reduced digraph, lifted back.
Outbranching sqrt_opt_tree(const RootedDigraph& d);

}  // namespace maxleaf
