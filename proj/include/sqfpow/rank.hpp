#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sqfpow {

/// Coefficient field for homology: the rationals or GF(p).
struct Field {
  enum class Kind { Rational, Prime };

  Kind kind = Kind::Rational;
  std::uint32_t prime = 0;

  static Field rational() { return {}; }
  /// Throws BadSpec unless p is a prime below 2^31.
  static Field gf(std::uint32_t p);

  /// "Q" or "GF(p)".
  std::string name() const;
  bool operator==(const Field&) const = default;
};

/// Default characteristic for the prime-field cross check.
inline constexpr std::uint32_t kDefaultPrime = 32003;

struct SparseEntry {
  std::uint32_t col;
  std::int64_t value;
};

/// Row of a sparse matrix with strictly increasing column indices.
using SparseRow = std::vector<SparseEntry>;

/// Exact rank over `field`.
///
/// Rows are consumed shortest-first and reduced against pivots keyed by their
/// leading column. Over Q the reduction is fraction free on integers with
/// content removal; int64 overflow switches the whole computation to GMP.
std::size_t matrix_rank(std::vector<SparseRow> rows, const Field& field);

}  // namespace sqfpow
