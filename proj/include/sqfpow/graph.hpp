#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sqfpow/complex.hpp"
#include "sqfpow/ideal.hpp"
#include "sqfpow/varset.hpp"

namespace sqfpow {

/// Undirected edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  VarSet vertices() const { return VarSet::single(u).with(v); }
  auto operator<=>(const Edge&) const = default;
};

/// Simple graph on vertices {1..n}, n <= 64.
class Graph {
 public:
  explicit Graph(int n = 0);
  Graph(int n, std::span<const Edge> edges);

  /// Adds {u,v}; duplicates are ignored, loops and out-of-range ends throw BadSpec.
  void add_edge(int u, int v);

  int order() const { return n_; }
  VarSet vertices() const { return VarSet::range(n_); }
  /// Sorted lexicographically.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;
  VarSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
  int degree(int v) const { return neighbors(v).size(); }
  VarSet isolated_vertices() const;
  /// Vertices adjacent to some member of `s`, together with `s` itself.
  VarSet closed_neighborhood(VarSet s) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_;
  std::vector<VarSet> adj_;  // index 0 unused
};

/// Pairwise disjoint edges, kept sorted.
using Matching = std::vector<Edge>;

VarSet matching_vertices(const Matching& m);

/// One degree-2 generator per edge.
SqfIdeal edge_ideal(const Graph& g);

/// All k-matchings in lexicographic order. Throws OutOfRange for k < 1.
std::vector<Matching> k_matchings(const Graph& g, int k);

/// nu(G) by branch and bound; 0 for an edgeless graph.
int matching_number(const Graph& g);

/// A matching of G[w] covering all of w, if one exists.
std::optional<Matching> perfect_matching_on(const Graph& g, VarSet w);

Graph complement(const Graph& g);
/// Vertex sets of the connected components, ordered by smallest vertex.
std::vector<VarSet> components(const Graph& g);
/// The graph on zero or one vertex counts as connected.
bool is_connected(const Graph& g);
bool is_complete_bipartite(const Graph& g);
Graph induced_subgraph(const Graph& g, VarSet w);

/// Perfect elimination ordering found by maximum cardinality search, or
/// nothing if the verification step fails (the graph is not chordal).
std::optional<std::vector<int>> perfect_elimination_ordering(const Graph& g);
bool is_chordal(const Graph& g);
bool is_cochordal(const Graph& g);

/// Gamma_k(G): vertex sets containing no V(M) of a k-matching. Its
/// Stanley-Reisner ideal is I(G)^[k]. Throws OutOfRange unless 1 <= k <= nu(G).
SimplicialComplex gamma_k(const Graph& g, int k);

bool is_dominating(const Graph& g, VarSet s);
/// First m-clique (lexicographic) that dominates G.
std::optional<VarSet> dominating_clique(const Graph& g, int m);
/// First k-matching (lexicographic) whose vertex set dominates G.
std::optional<Matching> dominating_k_matching(const Graph& g, int k);

/// Named graph families with fixed vertex labellings.
namespace family {

Graph complete(int n);
/// Parts {1..m} and {m+1..m+n}.
Graph complete_bipartite(int m, int n);
/// Edges {i,i+1}.
Graph path(int n);
/// path(n) plus {1,n}.
Graph cycle(int n);
Graph path_complement(int n);
/// H(a_1..a_s): clique on 1..s, then the a_1 whiskers of vertex 1, the a_2
/// whiskers of vertex 2, and so on, numbered consecutively from s+1.
Graph whiskered(std::span<const int> whiskers);

}  // namespace family

}  // namespace sqfpow
