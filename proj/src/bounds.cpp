#include "maxleaf/bounds.hpp"

#include <algorithm>

#include "maxleaf/errors.hpp"

namespace maxleaf {
namespace {

void require_acyclic_normalized(const RootedDigraph& d) {
  const Vertex r = d.root();
  if (d.indegree(r) != 0) throw PreconditionError("arc into the root");
  for (Vertex y : d.out(r)) {
    if (d.indegree(y) != 1) throw PreconditionError("non-root arc into an outneighbour of the root");
  }
  if (!is_acyclic(d)) throw PreconditionError("digraph has a cycle");
  if (!is_connected(d)) throw PreconditionError("digraph is not connected");
}

Outbranching trivial_tree(const RootedDigraph& d) {
  return extend_to_spanning(d, std::vector<Vertex>(d.vertex_count(), kNoVertex));
}

// Preorder entry/exit times with children visited by increasing id.
struct Drawing {
  std::vector<int> enter, leave;

  explicit Drawing(const Outbranching& t) : enter(t.vertex_count()), leave(t.vertex_count()) {
    const auto kids = t.children();
    int clock = 0;
    std::vector<std::pair<Vertex, std::size_t>> stack{{t.root(), 0}};
    enter[t.root()] = clock++;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < kids[v].size()) {
        const Vertex c = kids[v][i++];
        enter[c] = clock++;
        stack.push_back({c, 0});
      } else {
        leave[v] = clock;
        stack.pop_back();
      }
    }
  }

  bool ancestor(Vertex a, Vertex b) const {
    return enter[a] <= enter[b] && leave[b] <= leave[a];
  }
};

}  // namespace

std::vector<int> vertex_cover_third(int n, std::span<const Edge> edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v) {
      throw PreconditionError("edge out of range or loop");
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(adj[v].size());
  std::vector<bool> gone(n, false);
  std::vector<int> cover;
  auto take = [&](int v) {
    cover.push_back(v);
    gone[v] = true;
    for (int w : adj[v]) {
      if (!gone[w]) --degree[w];
    }
    degree[v] = 0;
  };
  while (true) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!gone[v] && (best < 0 || degree[v] > degree[best])) best = v;
    }
    if (best < 0 || degree[best] == 0) break;
    if (degree[best] >= 2) {
      take(best);
      continue;
    }
    // Only a matching remains: one endpoint per edge.
    take(best);
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

std::vector<int> dominate_bipartite(int a_count, int b_count, std::span<const Edge> edges) {
  std::vector<std::vector<int>> nbrs(a_count);
  for (auto [a, b] : edges) {
    if (a < 0 || a >= a_count || b < 0 || b >= b_count) throw PreconditionError("edge out of range");
    nbrs[a].push_back(b);
  }
  std::vector<Edge> conflict;
  for (auto& n : nbrs) {
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
    if (n.size() != 2) throw PreconditionError("every vertex of A needs exactly two neighbours");
    conflict.emplace_back(n[0], n[1]);
  }
  std::sort(conflict.begin(), conflict.end());
  conflict.erase(std::unique(conflict.begin(), conflict.end()), conflict.end());
  return vertex_cover_third(b_count, conflict);
}

DominationScaffold domination_scaffold(const RootedDigraph& d) {
  require_acyclic_normalized(d);
  const int n = d.vertex_count();
  const Vertex r = d.root();
  DominationScaffold s;
  std::vector<Arc> kept;
  for (Vertex v = 0; v < n; ++v) {
    const auto in = d.in(v);
    for (std::size_t i = 0; i < in.size() && i < 2; ++i) kept.push_back({in[i], v});
  }
  s.trimmed = RootedDigraph::build(n, r, kept);
  const RootedDigraph& t = s.trimmed;

  for (Vertex v = 0; v < n && s.sink == kNoVertex; ++v) {
    if (t.outdegree(v) == 0) s.sink = v;
  }
  std::vector<bool> in_y(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (v != r && t.indegree(v) == 1) {
      s.z.push_back(v);
      in_y[t.in(v)[0]] = true;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in_y[v]) s.y.push_back(v);
  }
  std::vector<int> b_index(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (!in_y[v] && v != s.sink && v != r) {
      b_index[v] = static_cast<int>(s.b.size());
      s.b.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    if (t.indegree(v) != 2) continue;
    const auto in = t.in(v);
    if (in_y[in[0]] || in_y[in[1]]) continue;
    const int a = static_cast<int>(s.a.size());
    s.a.push_back(v);
    for (Vertex u : in) {
      if (b_index[u] < 0) throw InvariantViolation("in-neighbour outside B");
      edges.emplace_back(a, b_index[u]);
    }
  }
  if (!s.a.empty()) {
    for (int i : dominate_bipartite(static_cast<int>(s.a.size()), static_cast<int>(s.b.size()), edges)) {
      s.x.push_back(s.b[i]);
    }
  }
  std::ranges::set_union(s.x, s.y, std::back_inserter(s.c));
  return s;
}

Outbranching acyclic_many_leaves(const RootedDigraph& d) {
  const int n = d.vertex_count();
  if (n == 1) {
    if (d.arc_count() != 0) throw PreconditionError("digraph has a cycle");
    return Outbranching(d.root(), {kNoVertex});
  }
  const auto scaffold = domination_scaffold(d);
  std::vector<bool> in_c(n, false);
  for (Vertex v : scaffold.c) in_c[v] = true;
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<bool> has_child(n, false);
  for (Vertex v : topological_order(d)) {
    if (v == d.root()) continue;
    Vertex chosen = kNoVertex;
    for (Vertex u : d.in(v)) {
      if (!in_c[u]) continue;
      if (chosen == kNoVertex || (has_child[u] && !has_child[chosen])) chosen = u;
    }
    if (chosen == kNoVertex) throw InvariantViolation("C does not dominate " + std::to_string(v));
    parent[v] = chosen;
    has_child[chosen] = true;
  }
  return Outbranching(d.root(), std::move(parent));
}

bool meets_acyclic_bound(int leaves, int l, int root_degree) {
  return 3 * static_cast<std::int64_t>(leaves) >= static_cast<std::int64_t>(l) + root_degree - 1 + 3;
}

Outbranching bound1_tree(const RootedDigraph& d) {
  if (!is_2connected(d)) throw PreconditionError("digraph is not 2-connected");
  if (d.vertex_count() <= 2) return trivial_tree(d);
  const auto parts = split(d, rr_numbering(d));
  return acyclic_many_leaves(parts.larger());
}

TransverseDecomposition transverse_decomposition(const RootedDigraph& d) {
  const int n = d.vertex_count();
  const Vertex r = d.root();
  TransverseDecomposition td;
  td.sigma = rr_numbering(d);
  const auto& pos = td.sigma.position;
  const auto cls = classify(d);

  std::vector<Vertex> fwd(n, kNoVertex);
  std::vector<Vertex> bwd(n, kNoVertex);
  std::vector<Arc> kept;
  for (Vertex v = 0; v < n; ++v) {
    if (v == r) continue;
    if (d.has_arc(r, v)) {
      fwd[v] = bwd[v] = r;
      kept.push_back({r, v});
      continue;
    }
    Vertex first_fwd = kNoVertex;
    Vertex first_bwd = kNoVertex;
    for (Vertex u : d.in(v)) {
      Vertex& slot = pos[u] < pos[v] ? first_fwd : first_bwd;
      if (slot == kNoVertex) slot = u;
    }
    fwd[v] = first_fwd;
    bwd[v] = first_bwd;
    if (cls.nice[v]) {
      for (Vertex u : d.in(v)) {
        if (d.has_arc(v, u)) continue;
        (pos[u] < pos[v] ? fwd[v] : bwd[v]) = u;
        break;
      }
    }
    kept.push_back({fwd[v], v});
    kept.push_back({bwd[v], v});
  }
  td.trimmed = RootedDigraph::build(n, r, kept);
  td.forward_tree = Outbranching(r, fwd);
  td.backward_tree = Outbranching(r, bwd);

  const Drawing draw_f(td.forward_tree);
  const Drawing draw_b(td.backward_tree);
  for (Vertex v = 0; v < n; ++v) {
    if (v == r || fwd[v] == r) continue;
    if (!draw_b.ancestor(v, fwd[v])) td.forward_transverse.push_back({fwd[v], v});
    if (!draw_f.ancestor(v, bwd[v])) td.backward_transverse.push_back({bwd[v], v});
  }
  td.chose_forward = td.forward_transverse.size() >= td.backward_transverse.size();
  const auto& chosen = td.chose_forward ? td.forward_transverse : td.backward_transverse;
  const Outbranching& opposite = td.chose_forward ? td.backward_tree : td.forward_tree;
  const Drawing& draw = td.chose_forward ? draw_b : draw_f;
  for (const Arc& a : chosen) {
    (draw.enter[a.head] < draw.enter[a.tail] ? td.left : td.right).push_back(a);
  }
  td.chose_left = td.left.size() >= td.right.size();
  auto arcs = opposite.arcs();
  const auto& side = td.chose_left ? td.left : td.right;
  arcs.insert(arcs.end(), side.begin(), side.end());
  td.combined = RootedDigraph::build(n, r, arcs);
  return td;
}

Outbranching bound2_tree(const RootedDigraph& d) {
  if (!is_2connected(d)) throw PreconditionError("digraph is not 2-connected");
  if (d.vertex_count() <= 2) return trivial_tree(d);
  return acyclic_many_leaves(transverse_decomposition(d).combined);
}

}  // namespace maxleaf
