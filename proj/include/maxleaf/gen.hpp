#pragma once

#include <cstdint>
#include <string>

#include "maxleaf/digraph.hpp"

namespace maxleaf {

/// Tight kernel family: l rows of 3(l-1) double-linked vertices, 3l(l-1)+1
/// vertices in total. Throws PreconditionError for l < 2.
RootedDigraph gen_t_l(int l);

/// 2-connected digraph with root outdegree 3, 3k-2 vertices of indegree >= 2
/// and maxleaf k+2: k layers of three vertices, each vertex of a layer fed by
/// two consecutive vertices of the previous one, closed by a final vertex.
RootedDigraph gen_boloney(int k);

/// Planted random arborescence plus extra arcs sampled with probability p,
/// never into the root or from a non-root vertex into N+(r). With n >= 3 the
/// root gets two planted children. `oriented` skips arcs whose reverse exists.
RootedDigraph gen_random(int n, double p, std::uint64_t seed, bool oriented = false);

/// r -> 1..k.
RootedDigraph gen_star(int k);

/// r -> 1 -> ... -> n-1.
RootedDigraph gen_dipath(int n);

/// Two anchors s, t fed from two root children a, b (arcs a->s, b->s, a->t,
/// b->t), joined by a chain of `length` double-linked vertices.
RootedDigraph gen_bipath_chain(int length);

enum class Family { kTl, kBoloney, kRandom, kStar, kDipath, kBipathChain };

struct GenSpec {
  Family family = Family::kRandom;
  int size = 2;
  double p = 0.3;
  std::uint64_t seed = 0;
  bool oriented = false;
};

/// Throws PreconditionError on an unknown name.
Family parse_family(const std::string& name);
std::string family_name(Family f);

RootedDigraph generate(const GenSpec& spec);

}  // namespace maxleaf
