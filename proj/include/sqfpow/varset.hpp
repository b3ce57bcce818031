#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace sqfpow {

/// Largest number of variables (or graph vertices) a VarSet can hold.
inline constexpr int kMaxVars = 64;

/// A subset of {1..64} packed into one machine word. Variable v lives in bit v-1.
///
/// The same type stands for the support of a squarefree monomial, a face of a
/// simplicial complex and a vertex set of a graph.
class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr explicit VarSet(std::uint64_t bits) : bits_(bits) {}

  static VarSet of(std::initializer_list<int> vars) {
    VarSet s;
    for (int v : vars) s = s.with(v);
    return s;
  }
  static VarSet of(const std::vector<int>& vars) {
    VarSet s;
    for (int v : vars) s = s.with(v);
    return s;
  }
  /// {1..n}
  static constexpr VarSet range(int n) {
    if (n <= 0) return VarSet{};
    if (n >= kMaxVars) return VarSet{~std::uint64_t{0}};
    return VarSet{(std::uint64_t{1} << n) - 1};
  }
  static constexpr VarSet single(int v) { return VarSet{std::uint64_t{1} << (v - 1)}; }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1U; }
  constexpr bool subset_of(VarSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool disjoint(VarSet o) const { return (bits_ & o.bits_) == 0; }
  constexpr VarSet with(int v) const { return VarSet{bits_ | (std::uint64_t{1} << (v - 1))}; }
  constexpr VarSet without(int v) const { return VarSet{bits_ & ~(std::uint64_t{1} << (v - 1))}; }
  /// Smallest element, 0 if empty.
  constexpr int min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  /// Largest element, 0 if empty.
  constexpr int max() const { return bits_ == 0 ? 0 : kMaxVars - std::countl_zero(bits_); }

  constexpr VarSet operator|(VarSet o) const { return VarSet{bits_ | o.bits_}; }
  constexpr VarSet operator&(VarSet o) const { return VarSet{bits_ & o.bits_}; }
  constexpr VarSet operator-(VarSet o) const { return VarSet{bits_ & ~o.bits_}; }
  constexpr VarSet& operator|=(VarSet o) { bits_ |= o.bits_; return *this; }
  constexpr VarSet& operator&=(VarSet o) { bits_ &= o.bits_; return *this; }
  constexpr VarSet& operator-=(VarSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VarSet&) const = default;
  /// Raw bit order; use canonical_less() for the documented output order.
  constexpr auto operator<=>(const VarSet&) const = default;

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b) + 1);
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  /// "{1,3,4}"
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for_each([&](int v) {
      if (!first) s += ',';
      s += std::to_string(v);
      first = false;
    });
    return s + "}";
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order: by cardinality, then lexicographically on sorted indices.
constexpr bool canonical_less(VarSet a, VarSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

struct CanonicalLess {
  constexpr bool operator()(VarSet a, VarSet b) const { return canonical_less(a, b); }
};

}  // namespace sqfpow

template <>
struct std::hash<sqfpow::VarSet> {
  std::size_t operator()(sqfpow::VarSet s) const noexcept {
    std::uint64_t x = s.bits();
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};
