#include "maxleaf/gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "maxleaf/errors.hpp"

namespace maxleaf {

RootedDigraph gen_t_l(int l) {
  if (l < 2) throw PreconditionError("T_l needs l >= 2");
  const int len = 3 * (l - 1);
  const int n = l * len + 1;
  // v(i, j) with rows i in [0, l) and columns j in [1, len]; root 0.
  auto v = [&](int i, int j) { return 1 + ((i % l + l) % l) * len + (j - 1); };
  std::vector<Arc> arcs;
  for (int i = 0; i < l; ++i) {
    arcs.push_back({0, v(i, 1)});
    for (int j = 1; j < len; ++j) {
      arcs.push_back({v(i, j), v(i, j + 1)});
      arcs.push_back({v(i, j + 1), v(i, j)});
    }
    arcs.push_back({v(i, len), v(i + 1, len)});
    for (int t = 1; t < l; ++t) arcs.push_back({v(i, 3 * t), v(i + t, 1)});
  }
  return RootedDigraph::build(n, 0, arcs);
}

RootedDigraph gen_boloney(int k) {
  if (k < 2) throw PreconditionError("boloney needs k >= 2");
  const int n = 3 * k + 2;
  std::vector<Arc> arcs;
  std::array<Vertex, 3> layer{1, 2, 3};
  for (Vertex a : layer) arcs.push_back({0, a});
  Vertex next = 4;
  for (int j = 1; j < k; ++j) {
    std::array<Vertex, 3> fresh{next, next + 1, next + 2};
    next += 3;
    for (int t = 0; t < 3; ++t) {
      arcs.push_back({layer[t], fresh[t]});
      arcs.push_back({layer[(t + 1) % 3], fresh[t]});
    }
    layer = fresh;
  }
  arcs.push_back({layer[0], next});
  arcs.push_back({layer[1], next});
  return RootedDigraph::build(n, 0, arcs);
}

RootedDigraph gen_random(int n, double p, std::uint64_t seed, bool oriented) {
  if (n < 1) throw PreconditionError("n must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("probability outside [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);

  std::vector<bool> root_child(n, false);
  std::vector<Arc> arcs;
  for (int i = 0; i < n - 1; ++i) {
    Vertex parent = 0;
    if (i >= 2) {
      const int pick = std::uniform_int_distribution<int>(0, i)(rng);
      parent = pick == i ? 0 : perm[pick];
    }
    if (parent == 0) root_child[perm[i]] = true;
    arcs.push_back({parent, perm[i]});
  }
  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  for (const Arc& a : arcs) present[a.tail][a.head] = true;
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 1; v < n; ++v) {
      if (u == v || present[u][v]) continue;
      const bool drawn = coin(rng);
      if (!drawn) continue;
      if (root_child[v]) continue;
      if (u == 0) continue;  // root children are fixed by the planted tree
      if (oriented && present[v][u]) continue;
      present[u][v] = true;
      arcs.push_back({u, v});
    }
  }
  return RootedDigraph::build(n, 0, arcs);
}

RootedDigraph gen_star(int k) {
  if (k < 0) throw PreconditionError("negative star size");
  std::vector<Arc> arcs;
  for (Vertex v = 1; v <= k; ++v) arcs.push_back({0, v});
  return RootedDigraph::build(k + 1, 0, arcs);
}

RootedDigraph gen_dipath(int n) {
  if (n < 1) throw PreconditionError("n must be positive");
  std::vector<Arc> arcs;
  for (Vertex v = 1; v < n; ++v) arcs.push_back({v - 1, v});
  return RootedDigraph::build(n, 0, arcs);
}

RootedDigraph gen_bipath_chain(int length) {
  if (length < 1) throw PreconditionError("chain needs a vertex");
  // 0 root, 1 a, 2 b, 3 s, 4 t, chain 5..
  const int n = 5 + length;
  std::vector<Arc> arcs{{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}};
  std::vector<Vertex> chain{3};
  for (int i = 0; i < length; ++i) chain.push_back(5 + i);
  chain.push_back(4);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    arcs.push_back({chain[i], chain[i + 1]});
    arcs.push_back({chain[i + 1], chain[i]});
  }
  return RootedDigraph::build(n, 0, arcs);
}

Family parse_family(const std::string& name) {
  if (name == "t_l") return Family::kTl;
  if (name == "boloney") return Family::kBoloney;
  if (name == "random") return Family::kRandom;
  if (name == "star") return Family::kStar;
  if (name == "dipath") return Family::kDipath;
  if (name == "bipath_chain") return Family::kBipathChain;
  throw PreconditionError("unknown family '" + name + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::kTl: return "t_l";
    case Family::kBoloney: return "boloney";
    case Family::kRandom: return "random";
    case Family::kStar: return "star";
    case Family::kDipath: return "dipath";
    case Family::kBipathChain: return "bipath_chain";
  }
  return "?";
}

RootedDigraph generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::kTl: return gen_t_l(spec.size);
    case Family::kBoloney: return gen_boloney(spec.size);
    case Family::kRandom: return gen_random(spec.size, spec.p, spec.seed, spec.oriented);
    case Family::kStar: return gen_star(spec.size);
    case Family::kDipath: return gen_dipath(spec.size);
    case Family::kBipathChain: return gen_bipath_chain(spec.size);
  }
  throw PreconditionError("unknown family");
}

}  // namespace maxleaf
