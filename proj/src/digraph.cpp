#include "maxleaf/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "maxleaf/errors.hpp"

namespace maxleaf {

RootedDigraph RootedDigraph::build(int n, Vertex root, std::span<const Arc> arcs) {
  std::vector<Vertex> origin(std::max(n, 0));
  std::iota(origin.begin(), origin.end(), 0);
  return derive(n, root, arcs, std::move(origin), 0);
}

RootedDigraph RootedDigraph::derive(int n, Vertex root, std::span<const Arc> arcs,
                                    std::vector<Vertex> origin, std::uint64_t generation) {
  if (n < 1) throw PreconditionError("vertex count must be positive");
  if (root < 0 || root >= n) {
    throw PreconditionError("root " + std::to_string(root) + " out of range");
  }
  if (static_cast<int>(origin.size()) != n) throw PreconditionError("origin map size mismatch");

  RootedDigraph d;
  d.root_ = root;
  d.generation_ = generation;
  d.origin_ = std::move(origin);
  d.out_.assign(n, {});
  d.in_.assign(n, {});
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      throw PreconditionError("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                              ") out of range");
    }
    if (a.tail == a.head) {
      throw PreconditionError("loop (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                              ")");
    }
    d.out_[a.tail].push_back(a.head);
  }
  for (Vertex u = 0; u < n; ++u) {
    auto& o = d.out_[u];
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
    d.arc_count_ += o.size();
    for (Vertex v : o) d.in_[v].push_back(u);
  }
  // in_ lists are filled in increasing tail order, hence already sorted.
  return d;
}

bool RootedDigraph::has_arc(Vertex u, Vertex v) const {
  const auto& o = out_[u];
  return std::binary_search(o.begin(), o.end(), v);
}

std::vector<Arc> RootedDigraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : out_[u]) result.push_back({u, v});
  }
  return result;
}

bool RootedDigraph::operator==(const RootedDigraph& other) const {
  return root_ == other.root_ && out_ == other.out_;
}

std::vector<std::vector<Vertex>> Outbranching::children() const {
  std::vector<std::vector<Vertex>> kids(parent_.size());
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (parent_[v] != kNoVertex) kids[parent_[v]].push_back(v);
  }
  return kids;
}

std::vector<Vertex> Outbranching::leaves() const {
  std::vector<bool> has_child(parent_.size(), false);
  for (Vertex p : parent_) {
    if (p != kNoVertex) has_child[p] = true;
  }
  std::vector<Vertex> result;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (!has_child[v]) result.push_back(v);
  }
  return result;
}

int Outbranching::leaf_count() const { return static_cast<int>(leaves().size()); }

std::vector<Arc> Outbranching::arcs() const {
  std::vector<Arc> result;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (parent_[v] != kNoVertex) result.push_back({parent_[v], v});
  }
  return result;
}

Verification verify_outbranching(const RootedDigraph& d, const Outbranching& t) {
  const int n = d.vertex_count();
  if (t.vertex_count() != n) {
    return {false, 0, "tree has " + std::to_string(t.vertex_count()) + " vertices, graph has " +
                          std::to_string(n)};
  }
  if (t.root() != d.root()) return {false, 0, "tree root differs from graph root"};
  for (Vertex v = 0; v < n; ++v) {
    const Vertex p = t.parent(v);
    if (v == d.root()) {
      if (p != kNoVertex) return {false, 0, "root has a parent"};
      continue;
    }
    if (p == kNoVertex) return {false, 0, "vertex " + std::to_string(v) + " has no parent"};
    if (p < 0 || p >= n) return {false, 0, "parent of " + std::to_string(v) + " out of range"};
    if (!d.has_arc(p, v)) {
      return {false, 0,
              "arc (" + std::to_string(p) + "," + std::to_string(v) + ") not in graph"};
    }
  }
  // Every vertex must reach the root by parent pointers without cycling.
  std::vector<int> state(n, 0);  // 0 unknown, 1 on stack, 2 reaches root
  state[d.root()] = 2;
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    Vertex cur = v;
    stack.clear();
    while (state[cur] == 0) {
      state[cur] = 1;
      stack.push_back(cur);
      cur = t.parent(cur);
    }
    if (state[cur] == 1) return {false, 0, "parent pointers form a cycle through " +
                                               std::to_string(cur)};
    for (Vertex s : stack) state[s] = 2;
  }
  return {true, t.leaf_count(), {}};
}

std::vector<bool> reachable(const RootedDigraph& d, std::span<const Vertex> removed) {
  const int n = d.vertex_count();
  std::vector<bool> blocked(n, false);
  for (Vertex v : removed) {
    if (v == d.root()) throw PreconditionError("cannot remove the root");
    blocked[v] = true;
  }
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{d.root()};
  seen[d.root()] = true;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : d.out(u)) {
      if (!seen[v] && !blocked[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

bool is_connected(const RootedDigraph& d) {
  const auto seen = reachable(d);
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Outbranching extend_to_spanning(const RootedDigraph& d, std::vector<Vertex> parent) {
  const int n = d.vertex_count();
  if (static_cast<int>(parent.size()) != n) throw PreconditionError("parent array size mismatch");
  parent[d.root()] = kNoVertex;
  std::vector<bool> in_tree(n, false);
  std::vector<bool> has_child(n, false);
  int attached = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (v == d.root() || parent[v] != kNoVertex) {
      in_tree[v] = true;
      ++attached;
    }
    if (parent[v] != kNoVertex) has_child[parent[v]] = true;
  }
  while (attached < n) {
    // Prefer internal parents; fall back to a single attachment below a leaf.
    bool progress = false;
    Vertex fallback = kNoVertex;
    Vertex fallback_parent = kNoVertex;
    for (Vertex v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      for (Vertex p : d.in(v)) {
        if (!in_tree[p]) continue;
        if (has_child[p]) {
          parent[v] = p;
          in_tree[v] = true;
          ++attached;
          progress = true;
          break;
        }
        if (fallback == kNoVertex) {
          fallback = v;
          fallback_parent = p;
        }
      }
    }
    if (progress) continue;
    if (fallback == kNoVertex) {
      throw InfeasibleInstance("vertex unreachable from the root");
    }
    parent[fallback] = fallback_parent;
    has_child[fallback_parent] = true;
    in_tree[fallback] = true;
    ++attached;
  }
  return Outbranching(d.root(), std::move(parent));
}

std::vector<Vertex> immediate_dominators(const RootedDigraph& d) {
  // Iterative data-flow formulation over reverse postorder.
  const int n = d.vertex_count();
  std::vector<int> rpo_index(n, -1);
  std::vector<Vertex> postorder;
  postorder.reserve(n);
  {
    std::vector<std::size_t> next(n, 0);
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{d.root()};
    seen[d.root()] = true;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      const auto out = d.out(u);
      if (next[u] < out.size()) {
        const Vertex v = out[next[u]++];
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      } else {
        postorder.push_back(u);
        stack.pop_back();
      }
    }
  }
  std::vector<Vertex> order(postorder.rbegin(), postorder.rend());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) rpo_index[order[i]] = i;

  std::vector<Vertex> idom(n, kNoVertex);
  idom[d.root()] = d.root();
  auto intersect = [&](Vertex a, Vertex b) {
    while (a != b) {
      while (rpo_index[a] > rpo_index[b]) a = idom[a];
      while (rpo_index[b] > rpo_index[a]) b = idom[b];
    }
    return a;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 1; i < order.size(); ++i) {
      const Vertex v = order[i];
      Vertex candidate = kNoVertex;
      for (Vertex p : d.in(v)) {
        if (rpo_index[p] < 0 || idom[p] == kNoVertex) continue;
        candidate = candidate == kNoVertex ? p : intersect(p, candidate);
      }
      if (candidate != idom[v]) {
        idom[v] = candidate;
        changed = true;
      }
    }
  }
  idom[d.root()] = kNoVertex;
  return idom;
}

std::vector<Vertex> cutvertices(const RootedDigraph& d) {
  const auto idom = immediate_dominators(d);
  std::vector<bool> cut(d.vertex_count(), false);
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (idom[v] != kNoVertex && idom[v] != d.root()) cut[idom[v]] = true;
  }
  std::vector<Vertex> result;
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (cut[v]) result.push_back(v);
  }
  return result;
}

std::optional<Vertex> find_cutvertex(const RootedDigraph& d) {
  const auto all = cutvertices(d);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool is_2connected(const RootedDigraph& d) { return is_connected(d) && cutvertices(d).empty(); }

std::vector<std::vector<Vertex>> disjoint_paths(const RootedDigraph& d, Vertex target,
                                                int limit) {
  // Split every vertex v into v_in = 2v and v_out = 2v+1 joined by a unit arc;
  // the root and the target are uncapacitated.
  const int n = d.vertex_count();
  struct Edge {
    int to;
    int cap;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adj(2 * n);
  auto add_edge = [&](int a, int b, int cap) {
    adj[a].push_back(static_cast<int>(edges.size()));
    edges.push_back({b, cap});
    adj[b].push_back(static_cast<int>(edges.size()));
    edges.push_back({a, 0});
  };
  for (Vertex v = 0; v < n; ++v) {
    const bool terminal = v == d.root() || v == target;
    add_edge(2 * v, 2 * v + 1, terminal ? limit : 1);
  }
  for (const Arc& a : d.arcs()) {
    if (a.head == d.root() || a.tail == target) continue;
    add_edge(2 * a.tail + 1, 2 * a.head, 1);
  }

  const int source = 2 * d.root() + 1;
  const int sink = 2 * target;
  int flow = 0;
  while (flow < limit) {
    std::vector<int> via(2 * n, -1);
    std::vector<int> queue{source};
    std::vector<bool> seen(2 * n, false);
    seen[source] = true;
    for (std::size_t qi = 0; qi < queue.size() && !seen[sink]; ++qi) {
      const int u = queue[qi];
      for (int e : adj[u]) {
        if (edges[e].cap > 0 && !seen[edges[e].to]) {
          seen[edges[e].to] = true;
          via[edges[e].to] = e;
          queue.push_back(edges[e].to);
        }
      }
    }
    if (!seen[sink]) break;
    for (int v = sink; v != source;) {
      const int e = via[v];
      edges[e].cap -= 1;
      edges[e ^ 1].cap += 1;
      v = edges[e ^ 1].to;
    }
    ++flow;
  }

  // Decompose: follow saturated arc edges from the root.
  std::vector<std::vector<Vertex>> paths;
  for (int p = 0; p < flow; ++p) {
    std::vector<Vertex> path{d.root()};
    int node = source;
    while (node != sink) {
      bool advanced = false;
      for (int e : adj[node]) {
        if ((e & 1) == 0 && edges[e ^ 1].cap > 0) {
          // Forward edge carrying flow: consume one unit.
          edges[e ^ 1].cap -= 1;
          const int next_in = edges[e].to;
          const Vertex v = next_in / 2;
          path.push_back(v);
          node = v == target ? sink : next_in + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) throw InvariantViolation("flow decomposition failed");
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

int Classification::special_count() const {
  return static_cast<int>(std::count(special.begin(), special.end(), true));
}

int Classification::nice_count() const {
  return static_cast<int>(std::count(nice.begin(), nice.end(), true));
}

Classification classify(const RootedDigraph& d) {
  const int n = d.vertex_count();
  Classification c;
  c.special.assign(n, false);
  c.nice.assign(n, false);
  for (const Arc& a : d.arcs()) {
    if (!d.has_arc(a.head, a.tail)) {
      c.simple_arcs.push_back(a);
      c.nice[a.head] = true;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v == d.root()) {
      c.nice[v] = false;
      continue;
    }
    c.special[v] = c.nice[v] || d.indegree(v) >= 3;
  }
  return c;
}

bool is_normalized(const RootedDigraph& d) {
  const Vertex r = d.root();
  if (d.indegree(r) != 0) return false;
  for (Vertex y : d.out(r)) {
    if (d.indegree(y) != 1) return false;
  }
  return d.outdegree(r) >= 2 || d.vertex_count() <= 2;
}

std::vector<Vertex> topological_order(const RootedDigraph& d) {
  const int n = d.vertex_count();
  std::vector<int> pending(n);
  std::vector<Vertex> order;
  order.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    pending[v] = d.indegree(v);
    if (pending[v] == 0) order.push_back(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : d.out(order[i])) {
      if (--pending[w] == 0) order.push_back(w);
    }
  }
  if (static_cast<int>(order.size()) != n) return {};
  return order;
}

bool is_acyclic(const RootedDigraph& d) {
  return static_cast<int>(topological_order(d).size()) == d.vertex_count();
}

std::string to_dot(const RootedDigraph& d) {
  std::ostringstream os;
  os << "digraph D {\n  " << d.root() << " [shape=doublecircle];\n";
  for (const Arc& a : d.arcs()) os << "  " << a.tail << " -> " << a.head << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const RootedDigraph& d, const Outbranching& t) {
  std::ostringstream os;
  os << "digraph D {\n  " << d.root() << " [shape=doublecircle];\n";
  for (Vertex leaf : t.leaves()) os << "  " << leaf << " [style=filled];\n";
  for (const Arc& a : d.arcs()) {
    const bool in_tree = a.tail == t.parent(a.head);
    os << "  " << a.tail << " -> " << a.head << (in_tree ? " [penwidth=2];\n" : " [style=dashed];\n");
  }
  os << "}\n";
  return os.str();
}

}  // namespace maxleaf
