#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "sqfpow/complex.hpp"
#include "sqfpow/graph.hpp"
#include "sqfpow/ideal.hpp"
#include "sqfpow/rank.hpp"

namespace sqfpow {

/// dim H~_i(complex; field) for i = -1 .. dim.
struct HomologyVector {
  std::vector<std::uint64_t> dims;  ///< dims[0] is degree -1
  Field field;

  /// 0 outside the stored range.
  std::uint64_t dim(int degree) const {
    const int idx = degree + 1;
    return idx < 0 || idx >= static_cast<int>(dims.size()) ? 0 : dims[static_cast<std::size_t>(idx)];
  }
  bool acyclic() const;
};

inline constexpr std::size_t kDefaultFaceBudget = std::size_t{1} << 22;

/// Reduced simplicial homology with the augmented boundary to the empty face.
HomologyVector reduced_homology(const SimplicialComplex& complex, const Field& field,
                                std::size_t face_budget = kDefaultFaceBudget);

/// Z-graded Betti numbers beta_{i,j}(S/I); beta_{0,0} = 1 for a proper ideal.
class BettiTable {
 public:
  void add(int i, int j, std::uint64_t value);
  std::uint64_t at(int i, int j) const;
  const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return entries_; }

  /// Largest i with a nonzero entry.
  int projdim() const;
  /// max(j - i) over nonzero entries with i >= 1, i.e. reg(S/I); reg(I) is one more.
  int regularity() const;

  bool operator==(const BettiTable&) const = default;

 private:
  std::map<std::pair<int, int>, std::uint64_t> entries_;  // zero entries are never stored
};

struct HochsterOptions {
  /// Largest ambient the subset sum will run on (2^n induced subcomplexes).
  int max_ambient = 16;
  /// Per induced subcomplex.
  std::size_t face_budget = kDefaultFaceBudget;
};

/// beta_{i,j}(S/I) = sum over |W| = j of dim H~_{j-i-1}(Delta_W) with Delta the
/// Stanley-Reisner complex of I. Subsets W are processed in parallel (OpenMP).
/// Throws BudgetExceeded when ambient > max_ambient.
BettiTable hochster_betti(const SqfIdeal& ideal, const Field& field, const HochsterOptions& options = {});
/// Single-threaded reference for hochster_betti.
BettiTable hochster_betti_serial(const SqfIdeal& ideal, const Field& field, const HochsterOptions& options = {});

/// depth(S/I) = n - projdim(S/I). Subset sizes are scanned from n downward and
/// the scan stops as soon as beta_{i,j} = 0 for j < d_1 + i - 1 rules out a
/// larger projdim. Throws ZeroIdeal.
int depth(const SqfIdeal& ideal, const Field& field, const HochsterOptions& options = {});
int depth_serial(const SqfIdeal& ideal, const Field& field, const HochsterOptions& options = {});

/// dim H~_{2k-2}(Gamma_k(G)) != 0, i.e. S/I(G)^[k] has depth 2k-1.
/// Throws OutOfRange unless 1 <= k <= nu(G) and PreconditionViolated when G
/// has isolated vertices.
bool top_betti_mindepth(const Graph& g, int k, const Field& field, const HochsterOptions& options = {});

/// Generators are the minimal transversals of G(I) (complements of the facets
/// of the Stanley-Reisner complex). Involutive. Throws ZeroIdeal.
SqfIdeal alexander_dual(const SqfIdeal& ideal);

/// projdim(S/I) computed independently as reg(I^vee) = reg(S/I^vee) + 1.
int projdim_via_dual(const SqfIdeal& ideal, const Field& field, const HochsterOptions& options = {});

/// dim H~_r(Delta_W) for r in [low, high], Delta the Stanley-Reisner complex
/// of `ideal`; the result has high - low + 1 entries.
std::vector<std::uint64_t> induced_homology(const SqfIdeal& ideal, VarSet w, int low, int high, const Field& field,
                                            std::size_t face_budget = kDefaultFaceBudget);

}  // namespace sqfpow
