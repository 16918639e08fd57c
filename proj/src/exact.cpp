#include "maxleaf/exact.hpp"

#include <bit>

#include "maxleaf/errors.hpp"

namespace maxleaf {
namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

}  // namespace

ExactResult maxleaf_exact(const RootedDigraph& d, int limit) {
  const int n = d.vertex_count();
  if (limit > 63) throw PreconditionError("exact limit above 63");
  if (n > limit) {
    throw PreconditionError("exact search limited to " + std::to_string(limit) + " vertices, got " +
                            std::to_string(n));
  }
  if (!is_connected(d)) throw InfeasibleInstance("some vertex is unreachable from the root");
  const Vertex r = d.root();
  ExactResult res;
  if (n == 1) {
    res.maxleaf = 1;
    res.witness = Outbranching(r, {kNoVertex});
    return res;
  }

  std::vector<Mask> out(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : d.out(v)) out[v] |= bit(w);
  }
  const Mask all = n == 64 ? ~Mask{0} : (bit(n) - 1);

  // Internal sets are the root plus `size` other vertices; a leafless tree
  // would need every vertex internal, so size stays below n - 1.
  std::vector<Vertex> others;
  for (Vertex v = 0; v < n; ++v) {
    if (v != r) others.push_back(v);
  }
  const int m = static_cast<int>(others.size());
  auto expand = [&](Mask compact) {
    Mask s = bit(r);
    while (compact) {
      s |= bit(others[std::countr_zero(compact)]);
      compact &= compact - 1;
    }
    return s;
  };

  for (int size = 0; size < m; ++size) {
    Mask pick = size == 0 ? 0 : (Mask{1} << size) - 1;
    const Mask stop = Mask{1} << m;
    while (pick < stop) {
      ++res.explored;
      const Mask internal = expand(pick);
      // Reach inside D[I] from r, then check domination of the rest.
      Mask reached = bit(r);
      Mask frontier = reached;
      while (frontier) {
        const Vertex v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const Mask fresh = out[v] & internal & ~reached;
        reached |= fresh;
        frontier |= fresh;
      }
      if (reached == internal) {
        Mask dominated = internal;
        for (Mask s = internal; s; s &= s - 1) dominated |= out[std::countr_zero(s)];
        if (dominated == all) {
          std::vector<Vertex> parent(n, kNoVertex);
          std::vector<bool> inside(n, false);
          for (Vertex v = 0; v < n; ++v) inside[v] = (internal >> v) & 1;
          // BFS inside I, then hang every other vertex from some member of I.
          std::vector<Vertex> queue{r};
          std::vector<bool> seen(n, false);
          seen[r] = true;
          for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            for (Vertex w : d.out(queue[qi])) {
              if (inside[w] && !seen[w]) {
                seen[w] = true;
                parent[w] = queue[qi];
                queue.push_back(w);
              }
            }
          }
          for (Vertex v = 0; v < n; ++v) {
            if (inside[v]) continue;
            for (Vertex u : d.in(v)) {
              if (inside[u]) {
                parent[v] = u;
                break;
              }
            }
          }
          res.witness = Outbranching(r, std::move(parent));
          res.maxleaf = res.witness.leaf_count();
          if (res.maxleaf < n - 1 - size) throw InvariantViolation("exact witness has too few leaves");
          return res;
        }
      }
      if (pick == 0) break;
      // Next subset of the same size (Gosper).
      const Mask low = pick & -pick;
      const Mask ripple = pick + low;
      pick = (((ripple ^ pick) >> 2) / low) | ripple;
    }
  }
  throw InvariantViolation("no internal set found");
}

}  // namespace maxleaf
