#include "maxleaf/stnum.hpp"

#include <algorithm>
#include <sstream>
#include <variant>

#include "maxleaf/errors.hpp"

namespace maxleaf {
namespace {

void require_normalized_2connected(const RootedDigraph& d) {
  const Vertex r = d.root();
  if (d.indegree(r) != 0) throw PreconditionError("arc into the root");
  for (Vertex y : d.out(r)) {
    if (d.indegree(y) != 1) throw PreconditionError("non-root arc into an outneighbour of the root");
  }
  if (!is_2connected(d)) throw PreconditionError("digraph is not 2-connected");
}

// Mutable adjacency with stable ids; removed vertices simply lose all arcs.
struct Work {
  Vertex root;
  std::vector<std::vector<Vertex>> out, in;
  std::vector<bool> alive;

  explicit Work(const RootedDigraph& d)
      : root(d.root()), out(d.vertex_count()), in(d.vertex_count()), alive(d.vertex_count(), true) {
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
      out[v].assign(d.out(v).begin(), d.out(v).end());
      in[v].assign(d.in(v).begin(), d.in(v).end());
    }
  }

  int size() const { return static_cast<int>(out.size()); }

  static void erase(std::vector<Vertex>& s, Vertex v) {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it != s.end() && *it == v) s.erase(it);
  }
  static void insert(std::vector<Vertex>& s, Vertex v) {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it == s.end() || *it != v) s.insert(it, v);
  }

  void remove_arc(Vertex u, Vertex v) {
    erase(out[u], v);
    erase(in[v], u);
  }
  void add_arc(Vertex u, Vertex v) {
    insert(out[u], v);
    insert(in[v], u);
  }
  void remove_vertex(Vertex v) {
    for (Vertex u : std::vector<Vertex>(in[v])) remove_arc(u, v);
    for (Vertex w : std::vector<Vertex>(out[v])) remove_arc(v, w);
    alive[v] = false;
  }

  RootedDigraph snapshot() const {
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < size(); ++u) {
      for (Vertex v : out[u]) arcs.push_back({u, v});
    }
    return RootedDigraph::build(size(), root, arcs);
  }
};

// Keeps only the last arcs of two disjoint root paths into x.
void trim_in_arcs(Work& w, Vertex x) {
  if (std::binary_search(w.in[x].begin(), w.in[x].end(), w.root)) {
    for (Vertex u : std::vector<Vertex>(w.in[x])) {
      if (u != w.root) w.remove_arc(u, x);
    }
    return;
  }
  if (w.in[x].size() <= 2) return;
  const auto paths = disjoint_paths(w.snapshot(), x, 2);
  if (paths.size() < 2) throw InvariantViolation("fewer than two disjoint paths during reduction");
  const Vertex keep_a = paths[0][paths[0].size() - 2];
  const Vertex keep_b = paths[1][paths[1].size() - 2];
  for (Vertex u : std::vector<Vertex>(w.in[x])) {
    if (u != keep_a && u != keep_b) w.remove_arc(u, x);
  }
}

struct SinkRemoval {
  Vertex v;
  std::vector<Vertex> in;
};
struct Contraction {
  Vertex v, u, w;
  std::vector<Vertex> in;
};
using Record = std::variant<SinkRemoval, Contraction>;

}  // namespace

RRNumbering RRNumbering::from_order(int vertex_count, std::vector<Vertex> order) {
  RRNumbering s;
  s.position.assign(vertex_count, -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    if (order[i] < 0 || order[i] >= vertex_count || s.position[order[i]] != -1) {
      throw PreconditionError("numbering is not a permutation");
    }
    s.position[order[i]] = i;
  }
  s.order = std::move(order);
  return s;
}

RRNumbering RRNumbering::reversed() const {
  return from_order(static_cast<int>(position.size()), {order.rbegin(), order.rend()});
}

std::string RRNumbering::to_text() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < order.size(); ++i) os << (i ? " " : "") << order[i];
  return os.str();
}

RootedDigraph reduce_indegrees(const RootedDigraph& d) {
  require_normalized_2connected(d);
  Work w(d);
  for (Vertex x = 0; x < w.size(); ++x) {
    if (x == w.root || w.in[x].size() <= 2) continue;
    trim_in_arcs(w, x);
    if (!is_2connected(w.snapshot())) {
      throw InvariantViolation("indegree reduction broke 2-connectivity at " + std::to_string(x));
    }
  }
  auto arcs = w.snapshot().arcs();
  return RootedDigraph::derive(d.vertex_count(), d.root(), arcs,
                               {d.origin().begin(), d.origin().end()}, d.generation() + 1);
}

bool validate_numbering(const RootedDigraph& d, const RRNumbering& sigma) {
  const int n = d.vertex_count();
  const Vertex r = d.root();
  if (static_cast<int>(sigma.position.size()) != n) return false;
  if (static_cast<int>(sigma.order.size()) != n - 1) return false;
  if (sigma.position[r] != -1) return false;
  for (int i = 0; i < n - 1; ++i) {
    const Vertex v = sigma.order[i];
    if (v < 0 || v >= n || v == r || sigma.position[v] != i) return false;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v == r || d.has_arc(r, v)) continue;
    bool before = false;
    bool after = false;
    for (Vertex u : d.in(v)) {
      if (u == r) continue;
      (sigma.position[u] < sigma.position[v] ? before : after) = true;
    }
    if (!before || !after) return false;
  }
  return true;
}

RRNumbering rr_numbering(const RootedDigraph& d) {
  const RootedDigraph reduced = reduce_indegrees(d);
  const int n = d.vertex_count();
  const Vertex r = d.root();
  Work w(reduced);
  std::vector<Record> records;

  for (int remaining = n - 1; remaining > 0; --remaining) {
    Vertex v = kNoVertex;
    for (Vertex c = 0; c < n; ++c) {
      if (c != r && w.alive[c] && w.out[c].size() <= 1) {
        v = c;
        break;
      }
    }
    if (v == kNoVertex) throw InvariantViolation("no vertex of outdegree at most one");

    if (w.out[v].empty()) {
      records.push_back(SinkRemoval{v, w.in[v]});
      w.remove_vertex(v);
      continue;
    }
    const Vertex u = w.out[v][0];
    if (w.in[u].size() != 2) throw InvariantViolation("contraction target lacks indegree two");
    const Vertex other = w.in[u][0] == v ? w.in[u][1] : w.in[u][0];
    records.push_back(Contraction{v, u, other, w.in[v]});
    const auto in_v = w.in[v];
    w.remove_vertex(v);
    for (Vertex t : in_v) {
      if (t != u) w.add_arc(t, u);
    }
    trim_in_arcs(w, u);
  }

  std::vector<Vertex> order;
  auto pos = [&](Vertex x) {
    return static_cast<std::size_t>(std::ranges::find(order, x) - order.begin());
  };
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    if (const auto* s = std::get_if<SinkRemoval>(&*it)) {
      const bool exempt = std::ranges::find(s->in, r) != s->in.end() || s->in.size() < 2;
      if (exempt) {
        order.push_back(s->v);
      } else {
        const std::size_t at = std::min(pos(s->in[0]), pos(s->in[1]));
        order.insert(order.begin() + static_cast<std::ptrdiff_t>(at + 1), s->v);
      }
      continue;
    }
    const auto& c = std::get<Contraction>(*it);
    const std::size_t pu = pos(c.u);
    const bool w_after = pos(c.w) > pu;
    const bool exempt = std::ranges::find(c.in, r) != c.in.end();
    std::size_t at;
    if (exempt) {
      at = w_after ? pu : pu + 1;
    } else if (w_after) {
      std::size_t first = order.size();
      for (Vertex t : c.in) first = std::min(first, pos(t));
      if (first >= pu) throw InvariantViolation("no in-neighbour before contracted vertex");
      at = first + 1;
    } else {
      std::size_t last = 0;
      for (Vertex t : c.in) last = std::max(last, pos(t));
      if (last <= pu || last == order.size()) {
        throw InvariantViolation("no in-neighbour after contracted vertex");
      }
      at = last;
    }
    order.insert(order.begin() + static_cast<std::ptrdiff_t>(at), c.v);
  }

  auto sigma = RRNumbering::from_order(n, std::move(order));
  if (!validate_numbering(d, sigma)) throw InvariantViolation("constructed numbering is invalid");
  return sigma;
}

const RootedDigraph& NumberingSplit::larger() const {
  auto big = [](const RootedDigraph& g) {
    int c = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) c += g.indegree(v) >= 2;
    return c;
  };
  return big(backward) > big(forward) ? backward : forward;
}

NumberingSplit split(const RootedDigraph& d, const RRNumbering& sigma) {
  if (!validate_numbering(d, sigma)) throw PreconditionError("invalid numbering");
  std::vector<Arc> forward;
  std::vector<Arc> backward;
  for (const Arc& a : d.arcs()) {
    if (a.tail == d.root()) {
      forward.push_back(a);
      backward.push_back(a);
    } else if (sigma.position[a.tail] < sigma.position[a.head]) {
      forward.push_back(a);
    } else {
      backward.push_back(a);
    }
  }
  const std::vector<Vertex> origin(d.origin().begin(), d.origin().end());
  return {RootedDigraph::derive(d.vertex_count(), d.root(), forward, origin, d.generation() + 1),
          RootedDigraph::derive(d.vertex_count(), d.root(), backward, origin, d.generation() + 1)};
}

}  // namespace maxleaf
