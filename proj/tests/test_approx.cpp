#include <cmath>

#include "doctest.h"
#include "maxleaf/approx.hpp"
#include "maxleaf/errors.hpp"
#include "maxleaf/exact.hpp"
#include "support.hpp"

using namespace maxleaf;
using maxleaf::testing::graph;
using maxleaf::testing::random_2connected;
using maxleaf::testing::random_instance;

TEST_CASE("weak bipaths") {
  CHECK(weak_bipaths(gen_boloney(3)).empty());

  const auto chain = weak_bipaths(gen_bipath_chain(3));
  REQUIRE(chain.size() == 1);
  CHECK(chain[0].vertices.size() == 3);
  CHECK(chain[0].anchors[0] == 3);
  CHECK(chain[0].anchors[1] == 4);

  const auto single = weak_bipaths(gen_bipath_chain(1));
  REQUIRE(single.size() == 1);
  CHECK(single[0].vertices == std::vector<Vertex>{5});

  CHECK_THROWS_AS(weak_bipaths(graph(4, {{0, 1}, {0, 2}, {1, 3}})), PreconditionError);
}

TEST_CASE("weak bipaths match a definition-level recount") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto d = random_2connected(seed, 5, 14);
    if (!d) continue;
    const auto cls = classify(*d);
    std::vector<int> hits(d->vertex_count(), 0);
    for (const auto& p : weak_bipaths(*d)) {
      for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        const Vertex v = p.vertices[i];
        ++hits[v];
        CHECK_FALSE(cls.special[v]);
        if (i + 1 < p.vertices.size()) {
          CHECK(d->has_arc(v, p.vertices[i + 1]));
          CHECK(d->has_arc(p.vertices[i + 1], v));
        }
      }
      CHECK(cls.special[p.anchors[0]] == (p.anchors[0] != d->root()));
      CHECK(d->has_arc(p.anchors[0], p.vertices.front()));
      CHECK(d->has_arc(p.anchors[1], p.vertices.back()));
    }
    for (Vertex v = 0; v < d->vertex_count(); ++v) {
      CHECK(hits[v] == ((v == d->root() || cls.special[v]) ? 0 : 1));
    }
  }
}

TEST_CASE("majbound tree") {
  // Root children 1, 2 feed anchors 3, 4; nine single-vertex components
  // hang between the anchors, so l = 4 and h = 9.
  std::vector<Arc> arcs{{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}};
  for (Vertex c = 5; c < 14; ++c) {
    arcs.push_back({3, c});
    arcs.push_back({c, 3});
    arcs.push_back({4, c});
    arcs.push_back({c, 4});
  }
  const auto d = RootedDigraph::build(14, 0, arcs);
  CHECK(classify(d).special_count() == 4);
  CHECK(weak_bipaths(d).size() == 9);
  const auto t = majbound_tree(d);
  CHECK(verify_outbranching(d, t).ok);
  CHECK(t.leaf_count() >= 5);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = random_2connected(seed, 5, 13);
    if (!g) continue;
    const int l = classify(*g).special_count();
    const int h = static_cast<int>(weak_bipaths(*g).size());
    const auto m = majbound_tree(*g);
    CHECK(verify_outbranching(*g, m).ok);
    CHECK(m.leaf_count() >= h - l);
    CHECK(m.leaf_count() <= maxleaf_exact(*g).maxleaf);
  }
}

TEST_CASE("approximate") {
  const auto star = approximate(gen_star(5));
  CHECK(star.report.leaves == 5);
  CHECK(verify_outbranching(gen_star(5), star.tree).ok);
  CHECK_THROWS_AS(approximate(graph(3, {{0, 1}, {2, 1}})), InfeasibleInstance);

  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto d = random_instance(seed, 2, 12);
    const auto a = approximate(d);
    const auto check = verify_outbranching(d, a.tree);
    CHECK(check.ok);
    CHECK(check.leaf_count == a.report.leaves);
    const int opt = maxleaf_exact(d).maxleaf;
    CHECK(Fraction{a.report.leaves, 1} >= a.report.lower);
    CHECK(a.report.leaves <= opt);
    CHECK(92 * a.report.leaves >= opt);
  }
}

TEST_CASE("report text and fractions") {
  const auto a = approximate(gen_boloney(3));
  const auto text = a.report.to_text();
  CHECK(text.find("l=10\n") != std::string::npos);
  CHECK(text.find("lower=1/3\n") != std::string::npos);
  CHECK(text.find("chosen=") != std::string::npos);
  CHECK(Fraction{2, 4} == Fraction{1, 2});
  CHECK(Fraction{1, 3} < Fraction{1, 2});
  CHECK(Fraction{6, 1}.to_string() == "6");
}

TEST_CASE("sqrt-OPT tree") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto d = random_instance(seed, 2, 14);
    const auto t = sqrt_opt_tree(d);
    CHECK(verify_outbranching(d, t).ok);
    const int m = kernelize(d).reduced.vertex_count();
    CHECK(t.leaf_count() >= static_cast<int>(std::floor(std::sqrt(m / 90.0))));
  }
}
