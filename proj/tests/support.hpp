#pragma once

#include <initializer_list>
#include <vector>

#include "maxleaf/digraph.hpp"
#include "maxleaf/gen.hpp"
#include "maxleaf/reduce.hpp"

namespace maxleaf::testing {

inline RootedDigraph graph(int n, std::initializer_list<Arc> arcs, Vertex root = 0) {
  std::vector<Arc> a(arcs);
  return RootedDigraph::build(n, root, a);
}

/// Random normalized, rule-0-passing digraph; sizes and densities cycle with
/// the seed so a loop over seeds covers a spread of shapes.
inline RootedDigraph random_instance(std::uint64_t seed, int min_n, int max_n) {
  const int n = min_n + static_cast<int>(seed % static_cast<std::uint64_t>(max_n - min_n + 1));
  const double p = 0.1 + 0.05 * static_cast<double>((seed / 7) % 8);
  return gen_random(n, p, seed);
}

/// 2-connected instance obtained by exhausting Rule (1); nullopt when the
/// result is too small to be interesting.
inline std::optional<RootedDigraph> random_2connected(std::uint64_t seed, int min_n, int max_n) {
  auto k = exhaust_rule1(random_instance(seed, min_n, max_n));
  if (k.reduced.vertex_count() < 4) return std::nullopt;
  return k.reduced;
}

/// x cuts some vertex from the root, by direct reachability.
inline std::vector<Vertex> brute_cutvertices(const RootedDigraph& d) {
  std::vector<Vertex> cuts;
  const auto base = reachable(d);
  for (Vertex x = 0; x < d.vertex_count(); ++x) {
    if (x == d.root()) continue;
    const Vertex removed[] = {x};
    const auto r = reachable(d, removed);
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
      if (v != x && base[v] && !r[v]) {
        cuts.push_back(x);
        break;
      }
    }
  }
  return cuts;
}

}  // namespace maxleaf::testing
