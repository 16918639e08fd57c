#include <algorithm>

#include "doctest.h"
#include "maxleaf/digraph.hpp"
#include "maxleaf/errors.hpp"
#include "support.hpp"

using namespace maxleaf;
using maxleaf::testing::graph;

TEST_CASE("build validates and deduplicates") {
  CHECK_THROWS_AS(graph(0, {}), PreconditionError);
  CHECK_THROWS_AS(graph(2, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(graph(2, {{0, 2}}), PreconditionError);
  CHECK_THROWS_AS(graph(2, {}, 5), PreconditionError);

  const auto d = graph(4, {{0, 2}, {0, 1}, {0, 1}, {2, 3}, {1, 3}});
  CHECK(d.arc_count() == 4);
  CHECK(d.outdegree(0) == 2);
  CHECK(d.out(0)[0] == 1);
  CHECK(d.in(3)[0] == 1);
  CHECK(d.in(3)[1] == 2);
  CHECK(d.has_arc(2, 3));
  CHECK_FALSE(d.has_arc(3, 2));
  CHECK(d.origin()[3] == 3);
  CHECK(d == graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
}

TEST_CASE("outbranching leaves") {
  CHECK(Outbranching(0, {kNoVertex}).leaf_count() == 1);
  const Outbranching t(0, {kNoVertex, 0, 0, 1});
  CHECK(t.leaves() == std::vector<Vertex>{2, 3});
  CHECK(t.children()[0] == std::vector<Vertex>{1, 2});
  CHECK(t.arcs().size() == 3);
}

TEST_CASE("verify_outbranching rejects malformed trees") {
  const auto d = graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 1}});
  CHECK(verify_outbranching(d, Outbranching(0, {kNoVertex, 0, 0, 1})).ok);
  CHECK(verify_outbranching(d, Outbranching(0, {kNoVertex, 0, 0, 1})).leaf_count == 2);
  CHECK_FALSE(verify_outbranching(d, Outbranching(0, {kNoVertex, 0, 0})).ok);
  CHECK_FALSE(verify_outbranching(d, Outbranching(1, {0, kNoVertex, 0, 1})).ok);
  CHECK_FALSE(verify_outbranching(d, Outbranching(0, {kNoVertex, 0, 1, 1})).ok);
  CHECK_FALSE(verify_outbranching(d, Outbranching(0, {kNoVertex, 3, 0, 1})).ok);
  CHECK_FALSE(verify_outbranching(d, Outbranching(0, {kNoVertex, 0, kNoVertex, 1})).ok);
}

TEST_CASE("reachability and connectivity") {
  const auto d = graph(5, {{0, 1}, {1, 2}, {0, 3}, {4, 3}});
  CHECK_FALSE(is_connected(d));
  const Vertex cut[] = {1};
  const auto r = reachable(d, cut);
  CHECK(r[0]);
  CHECK_FALSE(r[2]);
  CHECK(r[3]);
  const Vertex bad[] = {0};
  CHECK_THROWS_AS(reachable(d, bad), PreconditionError);
}

TEST_CASE("dominators and cutvertices") {
  const auto d = graph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}});
  const auto idom = immediate_dominators(d);
  CHECK(idom[0] == kNoVertex);
  CHECK(idom[3] == 0);
  CHECK(idom[4] == 3);
  CHECK(cutvertices(d) == std::vector<Vertex>{3});
  CHECK(find_cutvertex(d) == 3);
  CHECK_FALSE(is_2connected(d));
  CHECK(is_2connected(graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})));
}

TEST_CASE("cutvertices agree with brute force on random digraphs") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto d = maxleaf::testing::random_instance(seed, 2, 12);
    CHECK(cutvertices(d) == maxleaf::testing::brute_cutvertices(d));
  }
}

TEST_CASE("disjoint paths certify 2-connectivity") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto d = maxleaf::testing::random_instance(seed, 3, 12);
    bool all_two = true;
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
      if (v == d.root() || d.has_arc(d.root(), v)) continue;
      const auto paths = disjoint_paths(d, v, 2);
      std::vector<int> used(d.vertex_count(), 0);
      for (const auto& p : paths) {
        REQUIRE(p.size() >= 2);
        CHECK(p.front() == d.root());
        CHECK(p.back() == v);
        for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(d.has_arc(p[i], p[i + 1]));
        for (std::size_t i = 1; i + 1 < p.size(); ++i) ++used[p[i]];
      }
      CHECK(std::ranges::all_of(used, [](int c) { return c <= 1; }));
      all_two = all_two && paths.size() == 2;
    }
    CHECK(all_two == is_2connected(d));
  }
}

TEST_CASE("extend_to_spanning keeps leaves") {
  const auto d = graph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {1, 4}});
  const auto t = extend_to_spanning(d, {kNoVertex, 0, 0, kNoVertex, kNoVertex});
  CHECK(verify_outbranching(d, t).ok);
  CHECK(t.leaf_count() >= 2);
  CHECK_THROWS_AS(extend_to_spanning(graph(3, {{0, 1}}), {kNoVertex, kNoVertex, kNoVertex}),
                  InfeasibleInstance);
}

TEST_CASE("classify simple, nice and special vertices") {
  // 1 <-> 3 is a 2-circuit; 2 -> 3 is simple; 4 has three in-neighbours.
  const auto d = graph(5, {{0, 1}, {0, 2}, {1, 3}, {3, 1}, {2, 3}, {1, 4}, {2, 4}, {3, 4}});
  const auto c = classify(d);
  CHECK(c.nice[3]);
  CHECK(c.special[3]);
  CHECK(c.special[4]);
  CHECK(c.nice[2]);  // root arcs are simple
  CHECK_FALSE(c.special[0]);
  CHECK(std::ranges::find(c.simple_arcs, Arc{2, 3}) != c.simple_arcs.end());
  CHECK(std::ranges::find(c.simple_arcs, Arc{1, 3}) == c.simple_arcs.end());
}

TEST_CASE("normalization checks, topological order and DOT") {
  CHECK(is_normalized(graph(3, {{0, 1}, {0, 2}, {1, 2}})) == false);
  CHECK(is_normalized(graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})));
  CHECK(is_normalized(graph(2, {{0, 1}})));
  CHECK_FALSE(is_normalized(graph(3, {{0, 1}, {1, 2}})));

  const auto dag = graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(is_acyclic(dag));
  const auto order = topological_order(dag);
  REQUIRE(order.size() == 4);
  CHECK(order.front() == 0);
  CHECK(order.back() == 3);
  CHECK_FALSE(is_acyclic(graph(3, {{0, 1}, {1, 2}, {2, 1}})));
  CHECK(topological_order(graph(3, {{0, 1}, {1, 2}, {2, 1}})).empty());

  const auto dot = to_dot(dag, Outbranching(0, {kNoVertex, 0, 0, 1}));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("1 -> 3") != std::string::npos);
}
