#include "maxleaf/reduce.hpp"

#include <algorithm>

#include "maxleaf/bounds.hpp"
#include "maxleaf/errors.hpp"

namespace maxleaf {
namespace {

void renormalize_into(Transformed& t) {
  auto n = normalize(t.graph);
  t.graph = std::move(n.graph);
  t.steps.insert(t.steps.end(), std::make_move_iterator(n.steps.begin()),
                 std::make_move_iterator(n.steps.end()));
}

bool in_span(std::span<const Vertex> s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

}  // namespace

Transformed normalize(const RootedDigraph& d) {
  Transformed result{d, {}};
  while (true) {
    const RootedDigraph& cur = result.graph;
    const Vertex r = cur.root();
    std::vector<Arc> doomed;
    for (Vertex u : cur.in(r)) doomed.push_back({u, r});
    for (Vertex y : cur.out(r)) {
      for (Vertex x : cur.in(y)) {
        if (x != r) doomed.push_back({x, y});
      }
    }
    if (!doomed.empty()) {
      auto t = delete_arcs(cur, std::move(doomed));
      result.graph = std::move(t.graph);
      result.steps.push_back(std::move(t.steps.front()));
      continue;
    }
    if (cur.outdegree(r) == 1 && cur.vertex_count() > 2) {
      auto t = merge_root(cur);
      result.graph = std::move(t.graph);
      result.steps.push_back(std::move(t.steps.front()));
      continue;
    }
    break;
  }
  return result;
}

Rule0 rule0(const RootedDigraph& d) { return is_connected(d) ? Rule0::kPass : Rule0::kFalse; }

Transformed apply_rule1(const RootedDigraph& d, Vertex x) {
  if (x < 0 || x >= d.vertex_count() || x == d.root()) {
    throw PreconditionError("rule 1 needs a non-root vertex");
  }
  const auto cuts = cutvertices(d);
  if (!std::binary_search(cuts.begin(), cuts.end(), x)) {
    throw PreconditionError("vertex " + std::to_string(x) + " is not a cutvertex");
  }
  auto t = remove_cutvertex(d, x);
  renormalize_into(t);
  return t;
}

bool is_bipath(const RootedDigraph& d, const Bipath& p) {
  const int n = d.vertex_count();
  for (Vertex v : p) {
    if (v < 0 || v >= n) return false;
  }
  auto sorted = p;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int i = 1; i <= 3; ++i) {
    std::array<Vertex, 2> expected{p[i - 1], p[i + 1]};
    std::sort(expected.begin(), expected.end());
    const auto in = d.in(p[i]);
    const auto out = d.out(p[i]);
    if (!std::equal(in.begin(), in.end(), expected.begin(), expected.end())) return false;
    if (!std::equal(out.begin(), out.end(), expected.begin(), expected.end())) return false;
  }
  return true;
}

std::optional<Bipath> find_bipath(const RootedDigraph& d) {
  // A vertex is "linked" when its in- and out-neighbourhoods coincide and have
  // size two: exactly the shape of a bipath's internal vertex.
  auto linked = [&](Vertex v) {
    return d.indegree(v) == 2 && std::ranges::equal(d.in(v), d.out(v));
  };
  auto other = [&](Vertex v, Vertex not_this) {
    return d.in(v)[0] == not_this ? d.in(v)[1] : d.in(v)[0];
  };
  for (Vertex y = 0; y < d.vertex_count(); ++y) {
    if (!linked(y)) continue;
    const Vertex x = d.in(y)[0];
    const Vertex z = d.in(y)[1];
    if (!linked(x) || !linked(z)) continue;
    Bipath p{other(x, y), x, y, z, other(z, y)};
    if (is_bipath(d, p)) return p;
  }
  return std::nullopt;
}

Transformed apply_rule2(const RootedDigraph& d, const Bipath& p) {
  if (!is_bipath(d, p)) throw PreconditionError("not a bipath of length 4");
  auto t = contract_bipath(d, p);
  renormalize_into(t);
  return t;
}

bool rule3_applies(const RootedDigraph& d, Vertex x, Vertex y) {
  if (x < 0 || x >= d.vertex_count() || y < 0 || y >= d.vertex_count()) return false;
  const auto in = d.in(x);
  if (!in_span(in, y) || in.size() < 2) return false;
  std::vector<Vertex> removed;
  for (Vertex v : in) {
    if (v == y) continue;
    if (v == d.root()) return false;  // a cut never contains the root
    removed.push_back(v);
  }
  return !reachable(d, removed)[y];
}

std::optional<Arc> find_rule3_arc(const RootedDigraph& d) {
  for (Vertex x = 0; x < d.vertex_count(); ++x) {
    for (Vertex y : d.in(x)) {
      if (rule3_applies(d, x, y)) return Arc{y, x};
    }
  }
  return std::nullopt;
}

Transformed apply_rule3(const RootedDigraph& d, Vertex x, Vertex y) {
  if (!rule3_applies(d, x, y)) {
    throw PreconditionError("rule 3 does not apply to arc (" + std::to_string(y) + "," +
                            std::to_string(x) + ")");
  }
  auto t = remove_arc(d, {y, x});
  renormalize_into(t);
  return t;
}

Kernel exhaust_rule1(const RootedDigraph& d) {
  auto norm = normalize(d);
  Kernel k{std::move(norm.graph), {std::move(norm.steps)}};
  if (rule0(k.reduced) == Rule0::kFalse) {
    throw InfeasibleInstance("some vertex is unreachable from the root");
  }
  while (auto x = find_cutvertex(k.reduced)) {
    auto t = apply_rule1(k.reduced, *x);
    k.reduced = std::move(t.graph);
    k.trace.append(std::move(t.steps));
  }
  return k;
}

Kernel kernelize(const RootedDigraph& d) {
  Kernel k = exhaust_rule1(d);
  while (true) {
    Transformed t;
    if (auto x = find_cutvertex(k.reduced)) {
      t = apply_rule1(k.reduced, *x);
    } else if (auto a = find_rule3_arc(k.reduced)) {
      t = apply_rule3(k.reduced, a->head, a->tail);
    } else if (auto p = find_bipath(k.reduced)) {
      t = apply_rule2(k.reduced, *p);
    } else {
      break;
    }
    k.reduced = std::move(t.graph);
    k.trace.append(std::move(t.steps));
  }
  return k;
}

std::int64_t kernel_threshold(int k) {
  return (3 * static_cast<std::int64_t>(k) - 2) * (30 * static_cast<std::int64_t>(k) - 2);
}

Outbranching large_indegree_witness(const RootedDigraph& d, Vertex x) {
  const int n = d.vertex_count();
  if (x < 0 || x >= n || x == d.root()) throw PreconditionError("witness vertex out of range");
  const auto in = d.in(x);
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<bool> in_union(n, false);
  in_union[d.root()] = true;

  for (Vertex u : in) {
    std::vector<Vertex> blocked;
    for (Vertex v : in) {
      if (v != u && v != d.root()) blocked.push_back(v);
    }
    if (in.size() >= 2 && std::ranges::find(in, d.root()) != in.end() && u != d.root()) {
      throw PreconditionError("root among several in-neighbours; digraph is not normalized");
    }
    // BFS from the root avoiding N-(x) - u.
    std::vector<bool> forbidden(n, false);
    for (Vertex b : blocked) forbidden[b] = true;
    std::vector<Vertex> via(n, kNoVertex);
    std::vector<bool> seen(n, false);
    std::vector<Vertex> queue{d.root()};
    seen[d.root()] = true;
    for (std::size_t qi = 0; qi < queue.size() && !seen[u]; ++qi) {
      for (Vertex w : d.out(queue[qi])) {
        if (!seen[w] && !forbidden[w]) {
          seen[w] = true;
          via[w] = queue[qi];
          queue.push_back(w);
        }
      }
    }
    if (!seen[u]) {
      throw PreconditionError("in-neighbour " + std::to_string(u) +
                              " is cut from the root by the others; apply rule 3 first");
    }
    // Merge the path into the union, reusing parents already fixed so the
    // union stays a tree; in-neighbours of x never get children.
    std::vector<Vertex> path;
    for (Vertex w = u; w != d.root(); w = via[w]) path.push_back(w);
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      if (in_union[*it]) continue;
      in_union[*it] = true;
      parent[*it] = via[*it];
      // The predecessor might have been reached differently by an earlier
      // path; either way it is already in the union.
    }
  }
  return extend_to_spanning(d, std::move(parent));
}

KernelDecision decide(const RootedDigraph& d, int k) {
  if (k < 1) throw PreconditionError("k must be positive");
  KernelDecision result;
  result.k = k;
  auto norm = normalize(d);
  if (rule0(norm.graph) == Rule0::kFalse) {
    result.verdict = Verdict::kFalse;
    result.reduced = std::move(norm.graph);
    result.trace.steps = std::move(norm.steps);
    return result;
  }
  Kernel kernel = kernelize(d);
  result.reduced = kernel.reduced;
  result.trace = kernel.trace;
  const RootedDigraph& reduced = kernel.reduced;

  auto accept = [&](const Outbranching& on_reduced) {
    auto lifted = lift(reduced, on_reduced, kernel.trace);
    const auto check = verify_outbranching(d, lifted);
    if (!check.ok || check.leaf_count < k) {
      throw InvariantViolation("decide produced a witness that does not certify k");
    }
    result.verdict = Verdict::kTrueWithWitness;
    result.witness = std::move(lifted);
  };

  if (k == 1) {
    accept(extend_to_spanning(reduced, std::vector<Vertex>(reduced.vertex_count(), kNoVertex)));
    return result;
  }
  Vertex hub = kNoVertex;
  for (Vertex v = 0; v < reduced.vertex_count(); ++v) {
    if (hub == kNoVertex || reduced.indegree(v) > reduced.indegree(hub)) hub = v;
  }
  if (hub != kNoVertex && reduced.indegree(hub) >= k) {
    accept(large_indegree_witness(reduced, hub));
    return result;
  }
  if (reduced.vertex_count() >= kernel_threshold(k)) {
    auto best = bound1_tree(reduced);
    auto second = bound2_tree(reduced);
    if (second.leaf_count() > best.leaf_count()) best = std::move(second);
    accept(best);
    return result;
  }
  result.verdict = Verdict::kReduced;
  return result;
}

}  // namespace maxleaf
