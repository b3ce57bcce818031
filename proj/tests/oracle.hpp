#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library beyond its plain data types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "sqfpow/ideal.hpp"
#include "sqfpow/varset.hpp"

namespace oracle {

using sqfpow::VarSet;

inline std::vector<VarSet> gens_of(const sqfpow::SqfIdeal& ideal) { return ideal.gens(); }

// Subsets of [n] containing no generator, i.e. all faces of the Stanley-Reisner complex.
inline std::vector<VarSet> faces(const std::vector<VarSet>& gens, int n, VarSet within) {
  std::vector<VarSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const VarSet f{bits};
    if (!f.subset_of(within)) continue;
    if (std::none_of(gens.begin(), gens.end(), [&](VarSet g) { return g.subset_of(f); })) out.push_back(f);
  }
  return out;
}

constexpr std::uint64_t kPrime = 2147483647ULL;

inline std::uint64_t power_mod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (b %= kPrime; e; e >>= 1, b = b * b % kPrime)
    if (e & 1U) r = r * b % kPrime;
  return r;
}

// Dense Gaussian elimination modulo a large prime.
inline std::size_t dense_rank(std::vector<std::vector<std::uint64_t>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    const std::uint64_t inv = power_mod(m[rank][c], kPrime - 2);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::uint64_t f = m[r][c] * inv % kPrime;
      for (std::size_t k = c; k < cols; ++k) m[r][k] = (m[r][k] + kPrime - f * m[rank][k] % kPrime) % kPrime;
    }
    ++rank;
  }
  return rank;
}

// Reduced homology dims of the complex given by all its faces; index 0 is degree -1.
inline std::vector<std::uint64_t> reduced_homology(const std::vector<VarSet>& all_faces, int n) {
  std::map<int, std::vector<VarSet>> by_dim;
  for (VarSet f : all_faces) by_dim[f.size() - 1].push_back(f);
  std::vector<std::uint64_t> dims(static_cast<std::size_t>(n) + 1, 0);
  if (all_faces.empty()) return dims;
  const auto rank_of = [&](int d) -> std::size_t {  // boundary from dim d to dim d-1
    if (!by_dim.contains(d) || !by_dim.contains(d - 1)) return 0;
    const auto& rows = by_dim[d];
    const auto& cols = by_dim[d - 1];
    std::map<VarSet, std::size_t> col_index;
    for (std::size_t i = 0; i < cols.size(); ++i) col_index[cols[i]] = i;
    std::vector<std::vector<std::uint64_t>> m(rows.size(), std::vector<std::uint64_t>(cols.size(), 0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int sign = 0;
      rows[r].for_each([&](int v) {
        m[r][col_index.at(rows[r].without(v))] = sign % 2 == 0 ? 1 : kPrime - 1;
        ++sign;
      });
    }
    return dense_rank(std::move(m));
  };
  for (int d = -1; d < n; ++d) {
    if (!by_dim.contains(d)) continue;
    const auto count = by_dim[d].size();
    dims[static_cast<std::size_t>(d + 1)] = count - rank_of(d) - rank_of(d + 1);
  }
  return dims;
}

// beta_{i,j}(S/I) by summing over every subset W of [n], no pruning.
inline std::map<std::pair<int, int>, std::uint64_t> betti(const sqfpow::SqfIdeal& ideal) {
  const int n = ideal.ambient();
  const auto all = faces(ideal.gens(), n, VarSet::range(n));
  std::map<std::pair<int, int>, std::uint64_t> out{{{0, 0}, 1}};
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const VarSet w{bits};
    std::vector<VarSet> sub;
    for (VarSet f : all)
      if (f.subset_of(w)) sub.push_back(f);
    const auto h = reduced_homology(sub, n);
    const int j = w.size();
    for (int i = 1; i <= j; ++i) {
      const int deg = j - i - 1;
      if (deg < -1) continue;
      if (const auto v = h[static_cast<std::size_t>(deg + 1)]; v != 0) out[{i, j}] += v;
    }
  }
  return out;
}

inline int depth(const sqfpow::SqfIdeal& ideal) {
  int projdim = 0;
  for (const auto& [key, value] : betti(ideal))
    if (value != 0) projdim = std::max(projdim, key.first);
  return ideal.ambient() - projdim;
}

inline std::vector<VarSet> minimal(std::vector<VarSet> sets) {
  std::sort(sets.begin(), sets.end(), sqfpow::CanonicalLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VarSet> out;
  for (VarSet s : sets)
    if (std::none_of(out.begin(), out.end(), [&](VarSet m) { return m.subset_of(s); })) out.push_back(s);
  return out;
}

// Unions of k pairwise disjoint generators, by enumerating k-subsets.
inline std::vector<VarSet> power(const std::vector<VarSet>& gens, int k) {
  std::vector<VarSet> out;
  std::vector<std::size_t> pick;
  const auto rec = [&](auto&& self, std::size_t from, VarSet used) -> void {
    if (static_cast<int>(pick.size()) == k) {
      out.push_back(used);
      return;
    }
    for (std::size_t i = from; i < gens.size(); ++i)
      if (gens[i].disjoint(used)) {
        pick.push_back(i);
        self(self, i + 1, used | gens[i]);
        pick.pop_back();
      }
  };
  rec(rec, 0, VarSet{});
  return minimal(out);
}

inline int nu(const std::vector<VarSet>& gens) {
  int k = 0;
  while (!power(gens, k + 1).empty()) ++k;
  return k;
}

inline sqfpow::SqfIdeal random_ideal(std::mt19937_64& rng, int max_n, int max_gens) {
  const int n = std::uniform_int_distribution<int>(2, max_n)(rng);
  const int s = std::uniform_int_distribution<int>(1, max_gens)(rng);
  std::vector<VarSet> gens;
  while (static_cast<int>(gens.size()) < s)
    gens.push_back(VarSet{std::uniform_int_distribution<std::uint64_t>(1, (std::uint64_t{1} << n) - 1)(rng)});
  return sqfpow::SqfIdeal::minimalize(gens, n);
}

// A cycle of length >= 4 without chord exists iff some induced subgraph on >= 4
// vertices is connected and 2-regular.
template <class Adjacent>
bool chordal(int n, Adjacent&& adjacent) {
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const VarSet w{bits};
    if (w.size() < 4) continue;
    bool two_regular = true;
    w.for_each([&](int v) {
      int d = 0;
      w.for_each([&](int u) { d += adjacent(u, v) ? 1 : 0; });
      two_regular = two_regular && d == 2;
    });
    if (!two_regular) continue;
    VarSet seen = VarSet::single(w.min());
    for (bool grew = true; grew;) {
      grew = false;
      w.for_each([&](int u) {
        if (seen.contains(u)) return;
        bool touch = false;
        seen.for_each([&](int s) { touch = touch || adjacent(u, s); });
        if (touch) {
          seen = seen.with(u);
          grew = true;
        }
      });
    }
    if (seen == w) return false;
  }
  return true;
}

}  // namespace oracle
