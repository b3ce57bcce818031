#include "sqfpow/graph.hpp"

#include <algorithm>

#include "sqfpow/error.hpp"

namespace sqfpow {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)) + 1) {
  if (n < 0 || n > kMaxVars) throw Error(ErrorCode::BadSpec, "graph order must lie in 0..64");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::add_edge(int u, int v) {
  if (u < 1 || v < 1 || u > n_ || v > n_)
    throw Error(ErrorCode::BadSpec, "edge {" + std::to_string(u) + "," + std::to_string(v) + "} outside 1.." +
                                        std::to_string(n_));
  if (u == v) throw Error(ErrorCode::BadSpec, "loop at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u)] = adj_[static_cast<std::size_t>(u)].with(v);
  adj_[static_cast<std::size_t>(v)] = adj_[static_cast<std::size_t>(v)].with(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 1; u <= n_; ++u)
    neighbors(u).for_each([&](int v) {
      if (u < v) out.push_back({u, v});
    });
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (int v = 1; v <= n_; ++v) twice += static_cast<std::size_t>(degree(v));
  return twice / 2;
}

VarSet Graph::isolated_vertices() const {
  VarSet out;
  for (int v = 1; v <= n_; ++v)
    if (neighbors(v).empty()) out = out.with(v);
  return out;
}

VarSet Graph::closed_neighborhood(VarSet s) const {
  VarSet out = s;
  s.for_each([&](int v) { out |= neighbors(v); });
  return out;
}

VarSet matching_vertices(const Matching& m) {
  VarSet out;
  for (const Edge& e : m) out |= e.vertices();
  return out;
}

SqfIdeal edge_ideal(const Graph& g) {
  std::vector<VarSet> gens;
  for (const Edge& e : g.edges()) gens.push_back(e.vertices());
  return SqfIdeal::minimalize(gens, g.order());
}

namespace {

void extend_matchings(const std::vector<Edge>& edges, std::size_t next, int k, VarSet used, Matching& current,
                      std::vector<Matching>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  const std::size_t missing = static_cast<std::size_t>(k) - current.size();
  for (std::size_t i = next; i + missing <= edges.size(); ++i) {
    if (!edges[i].vertices().disjoint(used)) continue;
    current.push_back(edges[i]);
    extend_matchings(edges, i + 1, k, used | edges[i].vertices(), current, out);
    current.pop_back();
  }
}

// Largest matching inside `free`; branches on the smallest free vertex.
int max_matching_within(const Graph& g, VarSet free, int have, int best) {
  // Isolated vertices of G[free] never help.
  VarSet live;
  free.for_each([&](int v) {
    if (!(g.neighbors(v) & free).empty()) live = live.with(v);
  });
  if (have + live.size() / 2 <= best) return best;
  if (live.empty()) return std::max(best, have);
  const int v = live.min();
  // Either v is matched to some live neighbour or it stays unmatched.
  (g.neighbors(v) & live).for_each([&](int w) {
    best = max_matching_within(g, live.without(v).without(w), have + 1, best);
  });
  best = max_matching_within(g, live.without(v), have, best);
  return best;
}

}  // namespace

std::vector<Matching> k_matchings(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorCode::OutOfRange, "k-matchings need k >= 1");
  std::vector<Matching> out;
  Matching current;
  extend_matchings(g.edges(), 0, k, VarSet{}, current, out);
  return out;
}

int matching_number(const Graph& g) { return max_matching_within(g, g.vertices(), 0, 0); }

std::optional<Matching> perfect_matching_on(const Graph& g, VarSet w) {
  if (w.empty()) return Matching{};
  const int v = w.min();
  std::optional<Matching> found;
  (g.neighbors(v) & w).for_each([&](int u) {
    if (found) return;
    if (auto rest = perfect_matching_on(g, w.without(v).without(u))) {
      rest->push_back({v, u});
      std::sort(rest->begin(), rest->end());
      found = std::move(rest);
    }
  });
  return found;
}

Graph complement(const Graph& g) {
  Graph c(g.order());
  for (int u = 1; u <= g.order(); ++u)
    for (int v = u + 1; v <= g.order(); ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

std::vector<VarSet> components(const Graph& g) {
  std::vector<VarSet> out;
  VarSet unseen = g.vertices();
  while (!unseen.empty()) {
    VarSet comp = VarSet::single(unseen.min());
    VarSet frontier = comp;
    while (!frontier.empty()) {
      const VarSet reach = g.closed_neighborhood(frontier) - comp;
      comp |= reach;
      frontier = reach;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph induced_subgraph(const Graph& g, VarSet w) {
  Graph h(g.order());
  for (const Edge& e : g.edges())
    if (e.vertices().subset_of(w)) h.add_edge(e.u, e.v);
  return h;
}

bool is_complete_bipartite(const Graph& g) {
  if (g.order() < 2 || !g.isolated_vertices().empty() || !is_connected(g)) return false;
  // 2-colour from vertex 1; a complete bipartite graph has parts N(1) and V - N(1).
  const VarSet right = g.neighbors(1);
  const VarSet left = g.vertices() - right;
  bool ok = true;
  left.for_each([&](int v) { ok = ok && g.neighbors(v) == right; });
  right.for_each([&](int v) { ok = ok && g.neighbors(v) == left; });
  return ok;
}

std::optional<std::vector<int>> perfect_elimination_ordering(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> visit;  // maximum cardinality search order
  VarSet unvisited = g.vertices();
  while (!unvisited.empty()) {
    int pick = 0;
    unvisited.for_each([&](int v) {
      if (pick == 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]) pick = v;
    });
    visit.push_back(pick);
    unvisited = unvisited.without(pick);
    (g.neighbors(pick) & unvisited).for_each([&](int w) { ++weight[static_cast<std::size_t>(w)]; });
  }
  // Reverse of the search order is a PEO iff the graph is chordal.
  std::vector<int> peo(visit.rbegin(), visit.rend());
  std::vector<int> position(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < peo.size(); ++i) position[static_cast<std::size_t>(peo[i])] = static_cast<int>(i);
  for (int v : peo) {
    VarSet later;
    g.neighbors(v).for_each([&](int w) {
      if (position[static_cast<std::size_t>(w)] > position[static_cast<std::size_t>(v)]) later = later.with(w);
    });
    if (later.empty()) continue;
    int first = 0;
    later.for_each([&](int w) {
      if (first == 0 || position[static_cast<std::size_t>(w)] < position[static_cast<std::size_t>(first)]) first = w;
    });
    if (!(later.without(first)).subset_of(g.neighbors(first))) return std::nullopt;
  }
  return peo;
}

bool is_chordal(const Graph& g) { return perfect_elimination_ordering(g).has_value(); }
bool is_cochordal(const Graph& g) { return is_chordal(complement(g)); }

SimplicialComplex gamma_k(const Graph& g, int k) {
  const int top = matching_number(g);
  if (k < 1 || k > top)
    throw Error(ErrorCode::OutOfRange,
                "Gamma_k needs 1 <= k <= nu(G) = " + std::to_string(top) + ", got " + std::to_string(k));
  return stanley_reisner(squarefree_power(edge_ideal(g), k));
}

bool is_dominating(const Graph& g, VarSet s) { return g.closed_neighborhood(s) == g.vertices(); }

namespace {

std::optional<VarSet> find_dominating_clique(const Graph& g, VarSet clique, VarSet candidates, int missing) {
  if (missing == 0) return is_dominating(g, clique) ? std::optional<VarSet>(clique) : std::nullopt;
  if (candidates.size() < missing) return std::nullopt;
  std::optional<VarSet> found;
  candidates.for_each([&](int v) {
    if (found) return;
    // Only larger vertices are added later, keeping cliques in lexicographic order.
    const VarSet later = (g.neighbors(v) & candidates) - VarSet::range(v);
    found = find_dominating_clique(g, clique.with(v), later, missing - 1);
  });
  return found;
}

}  // namespace

std::optional<VarSet> dominating_clique(const Graph& g, int m) {
  if (m < 1) throw Error(ErrorCode::OutOfRange, "clique size must be >= 1");
  return find_dominating_clique(g, VarSet{}, g.vertices(), m);
}

std::optional<Matching> dominating_k_matching(const Graph& g, int k) {
  for (Matching& m : k_matchings(g, k))
    if (is_dominating(g, matching_vertices(m))) return std::move(m);
  return std::nullopt;
}

namespace family {

Graph complete(int n) {
  if (n < 1) throw Error(ErrorCode::BadSpec, "complete graph needs n >= 1");
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::BadSpec, "complete bipartite graph needs m, n >= 1");
  Graph g(m + n);
  for (int u = 1; u <= m; ++u)
    for (int v = m + 1; v <= m + n; ++v) g.add_edge(u, v);
  return g;
}

Graph path(int n) {
  if (n < 1) throw Error(ErrorCode::BadSpec, "path needs n >= 1");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw Error(ErrorCode::BadSpec, "cycle needs n >= 3");
  Graph g = path(n);
  g.add_edge(1, n);
  return g;
}

Graph path_complement(int n) { return complement(path(n)); }

Graph whiskered(std::span<const int> whiskers) {
  const int s = static_cast<int>(whiskers.size());
  if (s < 2) throw Error(ErrorCode::BadSpec, "whiskered complete graph needs s >= 2");
  int n = s;
  for (int a : whiskers) {
    if (a < 0) throw Error(ErrorCode::BadSpec, "negative whisker count");
    n += a;
  }
  Graph g(n);
  for (int u = 1; u <= s; ++u)
    for (int v = u + 1; v <= s; ++v) g.add_edge(u, v);
  int next = s + 1;
  for (int i = 1; i <= s; ++i)
    for (int w = 0; w < whiskers[static_cast<std::size_t>(i - 1)]; ++w) g.add_edge(i, next++);
  return g;
}

}  // namespace family

}  // namespace sqfpow
