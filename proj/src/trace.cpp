#include "maxleaf/trace.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "maxleaf/errors.hpp"

namespace maxleaf {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<Vertex> identity(int n) {
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

// Builds the post-step digraph on the surviving vertices `kept` (pre-step ids,
// increasing). Arcs touching a dropped vertex are discarded.
RootedDigraph compact(const RootedDigraph& d, const std::vector<Vertex>& kept,
                      const std::vector<Arc>& arcs, Vertex new_root) {
  std::vector<Vertex> to_new(d.vertex_count(), kNoVertex);
  for (int i = 0; i < static_cast<int>(kept.size()); ++i) to_new[kept[i]] = i;
  std::vector<Arc> mapped;
  mapped.reserve(arcs.size());
  for (const Arc& a : arcs) {
    const Vertex u = to_new[a.tail];
    const Vertex v = to_new[a.head];
    if (u != kNoVertex && v != kNoVertex && u != v) mapped.push_back({u, v});
  }
  std::vector<Vertex> origin(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) origin[i] = d.origin()[kept[i]];
  return RootedDigraph::derive(static_cast<int>(kept.size()), to_new[new_root], mapped,
                               std::move(origin), d.generation() + 1);
}

std::vector<Vertex> all_but(int n, Vertex dropped) {
  std::vector<Vertex> kept;
  kept.reserve(n - 1);
  for (Vertex v = 0; v < n; ++v) {
    if (v != dropped) kept.push_back(v);
  }
  return kept;
}

// Maps a post-step tree onto pre-step ids; vertices absent after the step get
// kNoVertex as parent.
std::vector<Vertex> pull_back(const Outbranching& after, const ReductionStep& step) {
  std::vector<Vertex> parent(step.vertex_count_before, kNoVertex);
  for (Vertex v = 0; v < after.vertex_count(); ++v) {
    const Vertex p = after.parent(v);
    parent[step.kept[v]] = p == kNoVertex ? kNoVertex : step.kept[p];
  }
  return parent;
}

Vertex mapped_root(const Outbranching& after, const ReductionStep& step) {
  return step.kept[after.root()];
}

std::string join(const std::vector<Vertex>& vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
  return os.str();
}

}  // namespace

Transformed delete_arcs(const RootedDigraph& d, std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  std::vector<Arc> remaining;
  for (const Arc& a : d.arcs()) {
    if (!std::binary_search(arcs.begin(), arcs.end(), a)) remaining.push_back(a);
  }
  auto kept = identity(d.vertex_count());
  auto graph = compact(d, kept, remaining, d.root());
  ReductionStep step{ArcDeletion{std::move(arcs)}, d.vertex_count(), std::move(kept)};
  return {std::move(graph), {std::move(step)}};
}

Transformed merge_root(const RootedDigraph& d) {
  if (d.outdegree(d.root()) != 1) throw PreconditionError("root merge needs outdegree 1");
  const Vertex absorbed = d.out(d.root())[0];
  auto kept = all_but(d.vertex_count(), d.root());
  auto graph = compact(d, kept, d.arcs(), absorbed);
  ReductionStep step{RootMerge{d.root(), absorbed}, d.vertex_count(), std::move(kept)};
  return {std::move(graph), {std::move(step)}};
}

Transformed remove_cutvertex(const RootedDigraph& d, Vertex x) {
  CutvertexRemoval payload{x, {d.in(x).begin(), d.in(x).end()}, {d.out(x).begin(), d.out(x).end()}};
  auto arcs = d.arcs();
  for (Vertex v : payload.in) {
    for (Vertex z : payload.out) {
      if (z != v) arcs.push_back({v, z});
    }
  }
  auto kept = all_but(d.vertex_count(), x);
  auto graph = compact(d, kept, arcs, d.root());
  ReductionStep step{std::move(payload), d.vertex_count(), std::move(kept)};
  return {std::move(graph), {std::move(step)}};
}

Transformed contract_bipath(const RootedDigraph& d, const std::array<Vertex, 5>& path) {
  const Vertex x = path[1];
  const Vertex y = path[2];
  auto arcs = d.arcs();
  for (Arc& a : arcs) {
    if (a.tail == y) a.tail = x;
    if (a.head == y) a.head = x;
  }
  auto kept = all_but(d.vertex_count(), y);
  auto graph = compact(d, kept, arcs, d.root());
  ReductionStep step{BipathContraction{path}, d.vertex_count(), std::move(kept)};
  return {std::move(graph), {std::move(step)}};
}

Transformed remove_arc(const RootedDigraph& d, Arc arc) {
  auto t = delete_arcs(d, {arc});
  t.steps.front().action = RedundantArc{arc};
  return t;
}

RootedDigraph replay_step(const RootedDigraph& before, const ReductionStep& step) {
  if (before.vertex_count() != step.vertex_count_before) {
    throw PreconditionError("step recorded on a digraph of different size");
  }
  return std::visit(
      Overloaded{
          [&](const ArcDeletion& a) { return delete_arcs(before, a.arcs).graph; },
          [&](const RootMerge& m) {
            if (before.root() != m.old_root || before.outdegree(m.old_root) != 1 ||
                before.out(m.old_root)[0] != m.absorbed) {
              throw PreconditionError("root merge does not match digraph");
            }
            return merge_root(before).graph;
          },
          [&](const CutvertexRemoval& c) { return remove_cutvertex(before, c.x).graph; },
          [&](const BipathContraction& b) { return contract_bipath(before, b.path).graph; },
          [&](const RedundantArc& r) { return remove_arc(before, r.arc).graph; },
      },
      step.action);
}

RootedDigraph replay(const RootedDigraph& original, const ReductionTrace& trace) {
  RootedDigraph current = original;
  for (const auto& step : trace.steps) current = replay_step(current, step);
  return current;
}

Outbranching lift_step(const Outbranching& after, const ReductionStep& step) {
  auto parent = pull_back(after, step);
  Vertex root = mapped_root(after, step);

  std::visit(
      Overloaded{
          [](const ArcDeletion&) {},
          [](const RedundantArc&) {},
          [&](const RootMerge& m) {
            parent[m.absorbed] = m.old_root;
            parent[m.old_root] = kNoVertex;
            root = m.old_root;
          },
          [&](const CutvertexRemoval& c) {
            const int n = step.vertex_count_before;
            std::vector<bool> has_child(n, false);
            for (Vertex v = 0; v < n; ++v) {
              if (parent[v] != kNoVertex) has_child[parent[v]] = true;
            }
            // Depth in the pulled-back tree; x itself is not attached yet.
            std::vector<int> depth(n, -1);
            depth[root] = 0;
            auto depth_of = [&](Vertex start) {
              std::vector<Vertex> chain;
              Vertex v = start;
              while (depth[v] < 0) {
                chain.push_back(v);
                v = parent[v];
              }
              int d = depth[v];
              for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++d;
              return depth[start];
            };
            Vertex chosen = kNoVertex;
            int best = 0;
            for (Vertex y : c.in) {
              if (!has_child[y]) continue;
              const int dy = depth_of(y);
              if (chosen == kNoVertex || dy < best) {
                chosen = y;
                best = dy;
              }
            }
            if (chosen == kNoVertex) {
              throw InvariantViolation("no internal in-neighbour of removed cutvertex");
            }
            std::vector<bool> in_set(n, false);
            for (Vertex y : c.in) in_set[y] = true;
            for (Vertex z : c.out) {
              if (parent[z] != kNoVertex && in_set[parent[z]]) parent[z] = c.x;
            }
            parent[c.x] = chosen;
          },
          [&](const BipathContraction& b) {
            const auto [u, x, y, z, t] = b.path;
            (void)t;
            if (parent[x] == z) {
              parent[y] = z;
              parent[x] = y;
            } else if (parent[x] == u) {
              parent[y] = x;
              if (parent[z] == x) parent[z] = y;
            } else {
              throw InvariantViolation("contracted bipath vertex has an unexpected parent");
            }
          },
      },
      step.action);
  return Outbranching(root, std::move(parent));
}

Outbranching lift(const RootedDigraph& reduced, const Outbranching& t,
                  const ReductionTrace& trace) {
  const auto check = verify_outbranching(reduced, t);
  if (!check.ok) throw PreconditionError("cannot lift an invalid tree: " + check.reason);
  Outbranching current = t;
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    current = lift_step(current, *it);
  }
  return current;
}

void ReductionTrace::append(std::vector<ReductionStep> more) {
  steps.insert(steps.end(), std::make_move_iterator(more.begin()),
               std::make_move_iterator(more.end()));
}

std::string ReductionStep::describe() const {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const ArcDeletion& a) {
                   os << "delete";
                   for (const Arc& arc : a.arcs) os << " " << arc.tail << ">" << arc.head;
                 },
                 [&](const RootMerge& m) { os << "merge_root " << m.old_root << " " << m.absorbed; },
                 [&](const CutvertexRemoval& c) {
                   os << "rule1 " << c.x << " in=" << join(c.in) << " out=" << join(c.out);
                 },
                 [&](const BipathContraction& b) {
                   os << "rule2";
                   for (Vertex v : b.path) os << " " << v;
                 },
                 [&](const RedundantArc& r) { os << "rule3 " << r.arc.tail << " " << r.arc.head; },
             },
             action);
  os << " n=" << vertex_count_before;
  return os.str();
}

std::string ReductionTrace::to_text() const {
  std::string out;
  for (const auto& s : steps) out += s.describe() + "\n";
  return out;
}

}  // namespace maxleaf
