#include "doctest.h"
#include "maxleaf/errors.hpp"
#include "maxleaf/stnum.hpp"
#include "support.hpp"

using namespace maxleaf;
using maxleaf::testing::graph;
using maxleaf::testing::random_2connected;

TEST_CASE("numbering of a small 2-connected digraph") {
  // 3 and 4 both need an in-neighbour on each side.
  const auto d = graph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}});
  const auto s = rr_numbering(d);
  CHECK(validate_numbering(d, s));
  CHECK(s.order.size() == 4);
  CHECK(s.position[0] == -1);
  CHECK(validate_numbering(d, s.reversed()));
  CHECK_FALSE(validate_numbering(d, RRNumbering::from_order(5, {1, 2, 3, 4})));
  CHECK(validate_numbering(d, RRNumbering::from_order(5, {1, 3, 4, 2})));
  CHECK_THROWS_AS(RRNumbering::from_order(5, {1, 1, 3, 4}), PreconditionError);
  CHECK(s.to_text().size() == 7);
}

TEST_CASE("rr_numbering rejects inputs outside its domain") {
  CHECK_THROWS_AS(rr_numbering(graph(4, {{0, 1}, {0, 2}, {1, 3}})), PreconditionError);
  CHECK_THROWS_AS(rr_numbering(graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {1, 3}})),
                  PreconditionError);
}

TEST_CASE("trivial sizes") {
  CHECK(rr_numbering(graph(1, {})).order.empty());
  CHECK(rr_numbering(graph(2, {{0, 1}})).order == std::vector<Vertex>{1});
  CHECK(rr_numbering(gen_star(4)).order.size() == 4);
}

TEST_CASE("indegree reduction keeps 2-connectivity") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto d = random_2connected(seed, 5, 14);
    if (!d) continue;
    const auto r = reduce_indegrees(*d);
    CHECK(is_2connected(r));
    for (Vertex v = 0; v < r.vertex_count(); ++v) {
      if (v != r.root()) CHECK(r.indegree(v) <= 2);
    }
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("numbering and split on random 2-connected digraphs") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto d = random_2connected(seed, 5, 14);
    if (!d) continue;
    const auto s = rr_numbering(*d);
    REQUIRE(validate_numbering(*d, s));
    const auto parts = split(*d, s);
    for (const auto* g : {&parts.forward, &parts.backward}) {
      CHECK(is_acyclic(*g));
      CHECK(is_connected(*g));
      CHECK(g->vertex_count() == d->vertex_count());
    }
    const auto dr = static_cast<std::size_t>(d->outdegree(d->root()));
    CHECK(parts.forward.arc_count() + parts.backward.arc_count() == d->arc_count() + dr);
    const std::size_t larger = std::max(parts.forward.arc_count(), parts.backward.arc_count()) - dr;
    CHECK(2 * larger >= d->arc_count() - dr);
    ++checked;
  }
  CHECK(checked > 80);
}

TEST_CASE("split rejects an invalid numbering") {
  const auto d = graph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}});
  CHECK_THROWS_AS(split(d, RRNumbering::from_order(5, {1, 2, 3, 4})), PreconditionError);
}
