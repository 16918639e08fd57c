#include <algorithm>
#include <random>

#include "doctest.h"
#include "maxleaf/bounds.hpp"
#include "maxleaf/errors.hpp"
#include "maxleaf/exact.hpp"
#include "support.hpp"

using namespace maxleaf;
using maxleaf::testing::graph;
using maxleaf::testing::random_2connected;

namespace {

bool covers(std::span<const Edge> edges, const std::vector<int>& cover) {
  return std::ranges::all_of(edges, [&](const Edge& e) {
    return std::ranges::find(cover, e.first) != cover.end() ||
           std::ranges::find(cover, e.second) != cover.end();
  });
}

int min_cover_size(int n, std::span<const Edge> edges) {
  int best = n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const bool ok = std::ranges::all_of(
        edges, [&](const Edge& e) { return ((mask >> e.first) & 1) || ((mask >> e.second) & 1); });
    if (ok) best = std::min(best, std::popcount(mask));
  }
  return best;
}

int indegree_at_least(const RootedDigraph& d, int k) {
  int c = 0;
  for (Vertex v = 0; v < d.vertex_count(); ++v) c += d.indegree(v) >= k;
  return c;
}

}  // namespace

TEST_CASE("vertex cover examples") {
  const std::vector<Edge> triangle{{0, 1}, {1, 2}, {0, 2}};
  const auto c = vertex_cover_third(3, triangle);
  CHECK(covers(triangle, c));
  CHECK(c.size() <= 2);
  const std::vector<Edge> single{{0, 1}};
  CHECK(vertex_cover_third(2, single).size() == 1);
  CHECK(vertex_cover_third(4, {}).empty());
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(vertex_cover_third(2, loop), PreconditionError);
}

TEST_CASE("vertex cover against the exact minimum") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng() % 10);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 3 == 0) edges.emplace_back(u, v);
      }
    }
    const auto c = vertex_cover_third(n, edges);
    CHECK(covers(edges, c));
    CHECK(3 * c.size() <= static_cast<std::size_t>(n) + edges.size());
    CHECK(static_cast<int>(c.size()) >= min_cover_size(n, edges));
  }
}

TEST_CASE("bipartite domination") {
  const std::vector<Edge> one{{0, 0}, {0, 1}};
  CHECK(dominate_bipartite(1, 2, one).size() == 1);

  const std::vector<Edge> tri{{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 0}, {2, 2}};
  CHECK(dominate_bipartite(3, 3, tri).size() <= 2);

  const std::vector<Edge> bad{{0, 0}};
  CHECK_THROWS_AS(dominate_bipartite(1, 2, bad), PreconditionError);

  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    const int a = 1 + static_cast<int>(rng() % 8);
    const int b = 2 + static_cast<int>(rng() % 8);
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i) {
      const int x = static_cast<int>(rng() % b);
      int y = static_cast<int>(rng() % (b - 1));
      if (y >= x) ++y;
      edges.emplace_back(i, x);
      edges.emplace_back(i, y);
    }
    const auto s = dominate_bipartite(a, b, edges);
    CHECK(3 * static_cast<int>(s.size()) <= a + b);
    for (int i = 0; i < a; ++i) {
      bool hit = false;
      for (auto [x, y] : edges) hit = hit || (x == i && std::ranges::find(s, y) != s.end());
      CHECK(hit);
    }
  }
}

TEST_CASE("acyclic many leaves on a star and on split parts") {
  const auto star = acyclic_many_leaves(gen_star(6));
  CHECK(star.leaf_count() == 6);
  CHECK(meets_acyclic_bound(star.leaf_count(), 0, 6));
  CHECK_THROWS_AS(acyclic_many_leaves(graph(3, {{0, 1}, {1, 2}, {2, 1}})), PreconditionError);
  CHECK(acyclic_many_leaves(graph(1, {})).leaf_count() == 1);

  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto d = random_2connected(seed, 5, 14);
    if (!d) continue;
    const auto parts = split(*d, rr_numbering(*d));
    for (const auto* g : {&parts.forward, &parts.backward}) {
      const auto t = acyclic_many_leaves(*g);
      CHECK(verify_outbranching(*g, t).ok);
      CHECK(meets_acyclic_bound(t.leaf_count(), indegree_at_least(*g, 2), g->outdegree(g->root())));

      const auto s = domination_scaffold(*g);
      // C strongly dominates V - r and obeys the counting bound.
      for (Vertex v = 0; v < g->vertex_count(); ++v) {
        if (v == g->root()) continue;
        const auto in = s.trimmed.in(v);
        CHECK(std::ranges::any_of(in, [&](Vertex u) { return std::ranges::binary_search(s.c, u); }));
      }
      const int l = indegree_at_least(*g, 2);
      const int n = g->vertex_count();
      CHECK(3 * static_cast<int>(s.c.size()) <= 3 * (n - 1) - (l + g->outdegree(g->root()) - 1));
    }
  }
}

TEST_CASE("bound1 and bound2 trees") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto d = random_2connected(seed, 5, 13);
    if (!d) continue;
    const auto cls = classify(*d);
    const int l3 = indegree_at_least(*d, 3);
    const int nice = cls.nice_count();
    const int opt = maxleaf_exact(*d).maxleaf;

    const auto t1 = bound1_tree(*d);
    CHECK(verify_outbranching(*d, t1).ok);
    CHECK(6 * t1.leaf_count() >= l3);
    CHECK(t1.leaf_count() <= opt);

    const auto t2 = bound2_tree(*d);
    CHECK(verify_outbranching(*d, t2).ok);
    CHECK(24 * t2.leaf_count() >= nice);
    CHECK(t2.leaf_count() <= opt);
    ++checked;
  }
  CHECK(checked > 80);
  CHECK_THROWS_AS(bound1_tree(graph(4, {{0, 1}, {0, 2}, {1, 3}})), PreconditionError);
  CHECK_THROWS_AS(bound2_tree(graph(4, {{0, 1}, {0, 2}, {1, 3}})), PreconditionError);
}

TEST_CASE("transverse decomposition invariants") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto d = random_2connected(seed, 5, 14);
    if (!d) continue;
    const auto td = transverse_decomposition(*d);
    CHECK(verify_outbranching(*d, td.forward_tree).ok);
    CHECK(verify_outbranching(*d, td.backward_tree).ok);
    CHECK(is_acyclic(td.combined));

    auto ancestor = [](const Outbranching& t, Vertex a, Vertex b) {
      for (Vertex v = b; v != kNoVertex; v = t.parent(v)) {
        if (v == a) return true;
      }
      return false;
    };
    for (const Arc& a : td.forward_transverse) {
      CHECK_FALSE(ancestor(td.backward_tree, a.tail, a.head));
      CHECK_FALSE(ancestor(td.backward_tree, a.head, a.tail));
    }
    for (const Arc& a : td.backward_transverse) {
      CHECK_FALSE(ancestor(td.forward_tree, a.tail, a.head));
      CHECK_FALSE(ancestor(td.forward_tree, a.head, a.tail));
    }
    // Every nice vertex outside N+(r) touches a transverse arc.
    const auto cls = classify(*d);
    for (Vertex v = 0; v < d->vertex_count(); ++v) {
      if (!cls.nice[v] || d->has_arc(d->root(), v)) continue;
      auto touches = [&](const std::vector<Arc>& arcs) {
        return std::ranges::any_of(arcs, [&](const Arc& a) { return a.tail == v || a.head == v; });
      };
      CHECK((touches(td.forward_transverse) || touches(td.backward_transverse)));
    }
    const auto& chosen = td.chose_forward ? td.forward_transverse : td.backward_transverse;
    CHECK(td.left.size() + td.right.size() == chosen.size());
    CHECK(std::max(td.left.size(), td.right.size()) == (td.chose_left ? td.left.size() : td.right.size()));
  }
}
