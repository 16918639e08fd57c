#include "maxleaf/approx.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "maxleaf/bounds.hpp"
#include "maxleaf/errors.hpp"
#include "maxleaf/reduce.hpp"

namespace maxleaf {
namespace {

void require_normalized_2connected(const RootedDigraph& d) {
  if (d.indegree(d.root()) != 0) throw PreconditionError("arc into the root");
  for (Vertex y : d.out(d.root())) {
    if (d.indegree(y) != 1) throw PreconditionError("non-root arc into an outneighbour of the root");
  }
  if (!is_2connected(d)) throw PreconditionError("digraph is not 2-connected");
}

}  // namespace

std::vector<WeakBipath> weak_bipaths(const RootedDigraph& d) {
  require_normalized_2connected(d);
  const int n = d.vertex_count();
  const auto cls = classify(d);
  auto plain = [&](Vertex v) { return v != d.root() && !cls.special[v]; };

  for (Vertex v = 0; v < n; ++v) {
    if (!plain(v)) continue;
    if (d.indegree(v) != 2) {
      throw InvariantViolation("non-special vertex " + std::to_string(v) + " lacks indegree two");
    }
    for (Vertex u : d.in(v)) {
      if (!d.has_arc(v, u)) throw InvariantViolation("non-special vertex with a simple in-arc");
    }
  }
  auto plain_nbrs = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex u : d.in(v)) {
      if (plain(u)) out.push_back(u);
    }
    return out;
  };

  std::vector<WeakBipath> result;
  std::vector<bool> seen(n, false);
  for (Vertex start = 0; start < n; ++start) {
    if (!plain(start) || seen[start] || plain_nbrs(start).size() > 1) continue;
    WeakBipath p;
    Vertex prev = kNoVertex;
    for (Vertex cur = start; cur != kNoVertex;) {
      seen[cur] = true;
      p.vertices.push_back(cur);
      Vertex next = kNoVertex;
      for (Vertex u : plain_nbrs(cur)) {
        if (u != prev) next = u;
      }
      prev = cur;
      cur = next;
    }
    auto anchor_of = [&](Vertex end, Vertex inside) {
      for (Vertex u : d.in(end)) {
        if (u != inside) return u;
      }
      return kNoVertex;
    };
    if (p.vertices.size() == 1) {
      p.anchors = {d.in(start)[0], d.in(start)[1]};
    } else {
      p.anchors = {anchor_of(p.vertices.front(), p.vertices[1]),
                   anchor_of(p.vertices.back(), p.vertices[p.vertices.size() - 2])};
    }
    result.push_back(std::move(p));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (plain(v) && !seen[v]) throw InvariantViolation("non-special vertices form a cycle");
  }
  return result;
}

Outbranching majbound_tree(const RootedDigraph& d) {
  require_normalized_2connected(d);
  const int n = d.vertex_count();
  const Vertex r = d.root();
  const auto cls = classify(d);
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<bool> in_tree(n, false);
  in_tree[r] = true;
  int missing = cls.special_count();

  // Each round adds one special vertex through a path whose other new
  // vertices are non-special and consecutive, hence in a single component.
  while (missing > 0) {
    std::vector<Vertex> via(n, kNoVertex);
    std::vector<bool> seen(in_tree);
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < n; ++v) {
      if (in_tree[v]) queue.push_back(v);
    }
    Vertex found = kNoVertex;
    for (std::size_t qi = 0; qi < queue.size() && found == kNoVertex; ++qi) {
      for (Vertex w : d.out(queue[qi])) {
        if (seen[w]) continue;
        seen[w] = true;
        via[w] = queue[qi];
        if (cls.special[w]) {
          found = w;
          break;
        }
        queue.push_back(w);
      }
    }
    if (found == kNoVertex) throw InvariantViolation("special vertex unreachable");
    for (Vertex w = found; !in_tree[w]; w = via[w]) {
      in_tree[w] = true;
      parent[w] = via[w];
    }
    --missing;
  }
  return extend_to_spanning(d, std::move(parent));
}

std::string Fraction::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string ApproxReport::chosen_name() const {
  static const char* names[] = {"bound1", "bound2", "majbound"};
  return names[chosen];
}

std::string ApproxReport::to_text() const {
  std::ostringstream os;
  os << "l=" << l << "\n"
     << "h=" << h << "\n"
     << "leaves_bound1=" << leaves_bound1 << "\n"
     << "leaves_bound2=" << leaves_bound2 << "\n"
     << "leaves_majbound=" << leaves_majbound << "\n"
     << "chosen=" << chosen_name() << "\n"
     << "leaves=" << leaves << "\n"
     << "lower=" << lower.to_string() << "\n"
     << "upper=" << upper << "\n";
  return os.str();
}

Approximation approximate(const RootedDigraph& d0) {
  const Kernel k = exhaust_rule1(d0);
  const RootedDigraph& d = k.reduced;
  ApproxReport rep;
  rep.l = classify(d).special_count();
  rep.h = static_cast<int>(weak_bipaths(d).size());

  std::array<Outbranching, 3> trees{bound1_tree(d), bound2_tree(d), majbound_tree(d)};
  rep.leaves_bound1 = trees[0].leaf_count();
  rep.leaves_bound2 = trees[1].leaf_count();
  rep.leaves_majbound = trees[2].leaf_count();
  for (int i = 1; i < 3; ++i) {
    if (trees[i].leaf_count() > trees[rep.chosen].leaf_count()) rep.chosen = i;
  }
  const Fraction by_specials{rep.l, 30};
  const Fraction by_components{std::max(rep.h - rep.l, 0), 1};
  rep.lower = std::max(by_specials, by_components);
  const auto g = std::gcd(rep.lower.num, rep.lower.den);
  rep.lower = {rep.lower.num / g, rep.lower.den / g};
  rep.upper = rep.l + 2 * rep.h;

  Outbranching tree = lift(d, trees[rep.chosen], k.trace);
  const auto check = verify_outbranching(d0, tree);
  if (!check.ok) throw InvariantViolation("lifted tree does not verify: " + check.reason);
  rep.leaves = check.leaf_count;
  return {std::move(tree), rep};
}

Outbranching sqrt_opt_tree(const RootedDigraph& d) {
  const Kernel k = kernelize(d);
  const RootedDigraph& reduced = k.reduced;
  std::vector<Outbranching> candidates;
  if (reduced.vertex_count() <= 2) {
    candidates.push_back(extend_to_spanning(reduced, std::vector<Vertex>(reduced.vertex_count(), kNoVertex)));
  } else {
    Vertex hub = kNoVertex;
    for (Vertex v = 0; v < reduced.vertex_count(); ++v) {
      if (v != reduced.root() && (hub == kNoVertex || reduced.indegree(v) > reduced.indegree(hub))) hub = v;
    }
    candidates.push_back(large_indegree_witness(reduced, hub));
    candidates.push_back(bound1_tree(reduced));
    candidates.push_back(bound2_tree(reduced));
    candidates.push_back(majbound_tree(reduced));
  }
  auto best = std::ranges::max_element(candidates, {}, [](const Outbranching& t) { return t.leaf_count(); });
  return lift(reduced, *best, k.trace);
}

}  // namespace maxleaf
