#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sqfpow/ideal.hpp"
#include "sqfpow/varset.hpp"

namespace sqfpow {

/// Finite simplicial complex on a vertex set, stored by its facets.
///
/// Two degenerate cases are distinguished: the void complex has no faces at
/// all (empty facet list), the irrelevant complex has the empty face only
/// (facets = {{}}).
class SimplicialComplex {
 public:
  /// Void complex on `vertices`.
  explicit SimplicialComplex(VarSet vertices = {}) : vertices_(vertices) {}
  /// Facets are reduced to their inclusion-maximal members.
  SimplicialComplex(VarSet vertices, std::vector<VarSet> facets);

  static SimplicialComplex irrelevant() { return SimplicialComplex(VarSet{}, {VarSet{}}); }
  static SimplicialComplex simplex(VarSet vertices) { return SimplicialComplex(vertices, {vertices}); }

  VarSet vertices() const { return vertices_; }
  /// Canonically ordered, antichain.
  const std::vector<VarSet>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool is_irrelevant() const { return facets_.size() == 1 && facets_.front().empty(); }
  /// -1 for the irrelevant complex, -2 for the void complex.
  int dimension() const;
  bool has_face(VarSet face) const;
  bool has_facet(VarSet facet) const;

  /// All faces, throws FaceBudgetExceeded beyond `budget` of them.
  std::vector<VarSet> faces(std::size_t budget = std::size_t{1} << 22) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  VarSet vertices_;
  std::vector<VarSet> facets_;
};

/// Stanley-Reisner complex on {1..n}: faces are the sets containing no generator.
SimplicialComplex stanley_reisner(const SqfIdeal& ideal);

/// Faces of `complex` contained in W.
SimplicialComplex restrict(const SimplicialComplex& complex, VarSet w);

/// Minimal sets meeting every member of `sets` (Berge's incremental method).
/// With no sets the answer is {{}}; a member that is empty makes it {}.
std::vector<VarSet> minimal_transversals(std::span<const VarSet> sets);

}  // namespace sqfpow
