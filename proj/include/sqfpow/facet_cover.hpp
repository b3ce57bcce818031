#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqfpow/complex.hpp"
#include "sqfpow/graph.hpp"
#include "sqfpow/ideal.hpp"

namespace sqfpow {

/// Ordered list of facets of `host`.
struct FacetCover {
  SimplicialComplex host;
  std::vector<VarSet> sequence;
};

/// Outcome of checking the well-ordered condition, with the index that
/// witnessed each facet outside the sequence.
struct CoverCheck {
  struct Step {
    VarSet facet;   ///< H, a facet not in the sequence
    int index = 0;  ///< 1-based i with F_i inside H u F_{i+1} u ... u F_k, 0 if none
  };

  bool ok = false;
  std::string failure;  ///< empty when ok
  std::vector<Step> transcript;
};

/// Complex whose facets are the generator supports; vertices are supp(I).
/// Throws ZeroIdeal.
SimplicialComplex facet_complex(const SqfIdeal& ideal);

/// Facet ideal of a complex (inverse of facet_complex).
SqfIdeal facet_ideal(const SimplicialComplex& complex, int ambient);

CoverCheck check_well_ordered_cover(const FacetCover& cover);
inline bool is_well_ordered_cover(const FacetCover& cover) { return check_well_ordered_cover(cover).ok; }

/// Backtracking search: minimal covers of the given size in lexicographic
/// order of facet indices, then their orderings in lexicographic order.
/// `node_limit` (0 = none) bounds the number of visited search nodes and
/// throws Timeout when exceeded.
std::optional<FacetCover> find_well_ordered_cover(const SimplicialComplex& complex, int cardinality,
                                                  std::size_t node_limit = 0);

/// Explicit cover F_1..F_{n-2k+1} for a graph with disconnected complement.
///
/// Requires: no isolated vertices, nu(G) >= 2, G^c disconnected, G not
/// complete bipartite and 2 <= k <= nu(G); each failed hypothesis throws
/// PreconditionViolated naming it.
FacetCover construct_cover_disconnected(const Graph& g, int k);

/// F_j = C u {x_j} for a dominating clique C on 2k-1 vertices and every x_j
/// outside C. Throws NoDominatingClique, or OutOfRange unless 2 <= k <= nu(G).
FacetCover construct_cover_dominating_clique(const Graph& g, int k);

}  // namespace sqfpow
