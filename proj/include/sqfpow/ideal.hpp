#pragma once

#include <span>
#include <vector>

#include "sqfpow/varset.hpp"

namespace sqfpow {

/// A squarefree monomial is identified with its support.
using SqfMonomial = VarSet;

/// Squarefree monomial ideal in K[x_1..x_n] given by its minimal generators.
///
/// Generators are kept in canonical order (degree, then lexicographic on
/// sorted indices) and always form an antichain under inclusion. The empty
/// generator list is the zero ideal; the unit ideal cannot be represented.
class SqfIdeal {
 public:
  /// Zero ideal in n variables.
  explicit SqfIdeal(int ambient);

  /// Keeps the inclusion-minimal elements of `monomials`.
  /// Throws AmbientMismatch for indices outside {1..ambient}, UnitIdeal for
  /// the empty monomial.
  static SqfIdeal minimalize(std::span<const VarSet> monomials, int ambient);

  int ambient() const { return ambient_; }
  const std::vector<VarSet>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }

  /// Union of the generator supports.
  VarSet support() const;
  int min_degree() const;
  int max_degree() const;
  bool single_degree() const { return min_degree() == max_degree(); }

  /// Ideal membership of a squarefree monomial.
  bool contains(VarSet monomial) const;
  /// True iff `m` is one of the minimal generators.
  bool is_generator(VarSet m) const;

  bool operator==(const SqfIdeal&) const = default;

 private:
  SqfIdeal(int ambient, std::vector<VarSet> canonical_gens)
      : ambient_(ambient), gens_(std::move(canonical_gens)) {}

  int ambient_;
  std::vector<VarSet> gens_;
};

inline SqfIdeal minimalize(std::span<const VarSet> monomials, int ambient) {
  return SqfIdeal::minimalize(monomials, ambient);
}

/// Squarefree part of L*M: unions of coprime generator pairs, minimalized.
SqfIdeal squarefree_product(const SqfIdeal& lhs, const SqfIdeal& rhs);

/// I^[k], built as k-1 successive squarefree products.
SqfIdeal squarefree_power(const SqfIdeal& ideal, int k);

/// Maximum number of pairwise coprime minimal generators (= largest k with
/// I^[k] != 0). Throws ZeroIdeal.
int nu(const SqfIdeal& ideal);

/// A coprime family of generators of maximum size (the witness behind nu()).
std::vector<VarSet> max_coprime_family(const SqfIdeal& ideal);

struct DegreeStats {
  int k = 0;
  int min_degree = 0;  ///< d_k
  std::size_t generator_count = 0;
};

/// d_k and |G(I^[k])|. Throws OutOfRange for k < 1 and ZeroIdeal for k > nu(I).
DegreeStats degree_stats(const SqfIdeal& ideal, int k);

/// m^[d]: all squarefree monomials of degree d in n variables.
SqfIdeal squarefree_veronese(int n, int d);

/// Same generators in the variables of supp(I), relabelled 1..|supp(I)| in
/// increasing order.
SqfIdeal trim_ambient(const SqfIdeal& ideal);

// -- monomials with exponents ------------------------------------------------

/// Exponent vector of length n (index 0 is x_1).
using Exponents = std::vector<int>;

/// Monomial ideal with arbitrary exponents, stored by its minimal generators.
/// Only used at the boundary where ordinary powers are formed.
struct MonomialIdeal {
  int ambient = 0;
  std::vector<Exponents> gens;
};

MonomialIdeal monomial_minimalize(std::span<const Exponents> monomials, int ambient);
MonomialIdeal to_monomial_ideal(const SqfIdeal& ideal);
/// Ordinary power I^k.
MonomialIdeal ordinary_power(const MonomialIdeal& ideal, int k);

/// Ideal generated by the squarefree elements of `monomials`, minimalized.
/// Throws AmbientMismatch on wrong vector length and BadSpec on negative exponents.
SqfIdeal squarefree_part(std::span<const Exponents> monomials, int ambient);
inline SqfIdeal squarefree_part(const MonomialIdeal& ideal) {
  return squarefree_part(ideal.gens, ideal.ambient);
}

}  // namespace sqfpow
