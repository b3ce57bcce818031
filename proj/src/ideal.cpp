#include "sqfpow/ideal.hpp"

#include <algorithm>
#include <unordered_set>

#include "sqfpow/error.hpp"

namespace sqfpow {

namespace {

void check_ambient(int ambient) {
  if (ambient < 0 || ambient > kMaxVars)
    throw Error(ErrorCode::AmbientMismatch,
                "ambient " + std::to_string(ambient) + " outside 0.." + std::to_string(kMaxVars));
}

// Sorted canonically and deduplicated; keeps only inclusion-minimal sets.
std::vector<VarSet> antichain_of(std::vector<VarSet> sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  if (sets.empty() || sets.front().size() == sets.back().size()) return sets;

  std::vector<VarSet> kept;
  kept.reserve(sets.size());
  for (VarSet s : sets) {
    bool redundant = false;
    for (VarSet k : kept) {
      if (k.size() >= s.size()) break;
      if (k.subset_of(s)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(s);
  }
  return kept;
}

}  // namespace

SqfIdeal::SqfIdeal(int ambient) : ambient_(ambient) { check_ambient(ambient); }

SqfIdeal SqfIdeal::minimalize(std::span<const VarSet> monomials, int ambient) {
  check_ambient(ambient);
  const VarSet universe = VarSet::range(ambient);
  for (VarSet m : monomials) {
    if (!m.subset_of(universe))
      throw Error(ErrorCode::AmbientMismatch,
                  "monomial " + m.to_string() + " not in " + std::to_string(ambient) + " variables");
    if (m.empty()) throw Error(ErrorCode::UnitIdeal, "the unit ideal is not a proper ideal");
  }
  return SqfIdeal(ambient, antichain_of({monomials.begin(), monomials.end()}));
}

VarSet SqfIdeal::support() const {
  VarSet s;
  for (VarSet g : gens_) s |= g;
  return s;
}

int SqfIdeal::min_degree() const { return gens_.empty() ? 0 : gens_.front().size(); }
int SqfIdeal::max_degree() const { return gens_.empty() ? 0 : gens_.back().size(); }

bool SqfIdeal::contains(VarSet monomial) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](VarSet g) { return g.subset_of(monomial); });
}

bool SqfIdeal::is_generator(VarSet m) const {
  return std::binary_search(gens_.begin(), gens_.end(), m, CanonicalLess{});
}

SqfIdeal squarefree_product(const SqfIdeal& lhs, const SqfIdeal& rhs) {
  if (lhs.ambient() != rhs.ambient())
    throw Error(ErrorCode::AmbientMismatch, "squarefree product of ideals in different rings");
  std::unordered_set<VarSet> products;
  for (VarSet u : lhs.gens())
    for (VarSet v : rhs.gens())
      if (u.disjoint(v)) products.insert(u | v);
  std::vector<VarSet> out(products.begin(), products.end());
  return SqfIdeal::minimalize(out, lhs.ambient());
}

SqfIdeal squarefree_power(const SqfIdeal& ideal, int k) {
  if (k < 1) throw Error(ErrorCode::OutOfRange, "squarefree power needs k >= 1");
  SqfIdeal power = ideal;
  for (int i = 2; i <= k && !power.is_zero(); ++i) power = squarefree_product(ideal, power);
  return power;
}

namespace {

struct CoprimeSearch {
  const std::vector<VarSet>& gens;
  int min_degree;
  std::vector<int> chosen;
  std::vector<int> best;

  void run(std::size_t next, VarSet used) {
    if (chosen.size() > best.size()) best = chosen;
    for (std::size_t i = next; i < gens.size(); ++i) {
      // Remaining room bounded by both candidates left and free variables.
      const int by_count = static_cast<int>(gens.size() - i);
      const int by_vars = (kMaxVars - used.size()) / std::max(min_degree, 1);
      if (static_cast<int>(chosen.size()) + std::min(by_count, by_vars) <= static_cast<int>(best.size()))
        return;
      if (!gens[i].disjoint(used)) continue;
      chosen.push_back(static_cast<int>(i));
      run(i + 1, used | gens[i]);
      chosen.pop_back();
    }
  }
};

}  // namespace

std::vector<VarSet> max_coprime_family(const SqfIdeal& ideal) {
  if (ideal.is_zero()) throw Error(ErrorCode::ZeroIdeal, "nu of the zero ideal");
  // gens() is sorted by degree, so cheap generators are tried first.
  CoprimeSearch search{ideal.gens(), ideal.min_degree(), {}, {}};
  // Variables outside supp(I) start out as used so the bound counts only free ones.
  search.run(0, VarSet::range(kMaxVars) - ideal.support());
  std::vector<VarSet> out;
  for (int i : search.best) out.push_back(ideal.gens()[static_cast<std::size_t>(i)]);
  return out;
}

int nu(const SqfIdeal& ideal) { return static_cast<int>(max_coprime_family(ideal).size()); }

DegreeStats degree_stats(const SqfIdeal& ideal, int k) {
  if (k < 1) throw Error(ErrorCode::OutOfRange, "degree statistics need k >= 1");
  const SqfIdeal power = squarefree_power(ideal, k);
  if (power.is_zero())
    throw Error(ErrorCode::ZeroIdeal, "I^[" + std::to_string(k) + "] is zero (k > nu(I))");
  return {k, power.min_degree(), power.size()};
}

SqfIdeal squarefree_veronese(int n, int d) {
  if (n < 1 || n > kMaxVars || d < 1 || d > n)
    throw Error(ErrorCode::BadSpec, "squarefree Veronese needs 1 <= d <= n <= 64");
  if (n > 30) throw Error(ErrorCode::BudgetExceeded, "squarefree Veronese limited to n <= 30");
  std::vector<VarSet> gens;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
    if (std::popcount(bits) == d) gens.emplace_back(bits);
  return SqfIdeal::minimalize(gens, n);
}

SqfIdeal trim_ambient(const SqfIdeal& ideal) {
  const std::vector<int> used = ideal.support().indices();
  if (used.empty()) throw Error(ErrorCode::ZeroIdeal, "cannot trim the zero ideal");
  std::vector<int> relabel(kMaxVars + 1, 0);
  for (std::size_t i = 0; i < used.size(); ++i) relabel[static_cast<std::size_t>(used[i])] = static_cast<int>(i) + 1;
  std::vector<VarSet> gens;
  for (VarSet g : ideal.gens()) {
    VarSet t;
    g.for_each([&](int v) { t = t.with(relabel[static_cast<std::size_t>(v)]); });
    gens.push_back(t);
  }
  return SqfIdeal::minimalize(gens, static_cast<int>(used.size()));
}

// -- monomials with exponents ------------------------------------------------

namespace {

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

int total_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

void check_exponents(std::span<const Exponents> monomials, int ambient) {
  check_ambient(ambient);
  for (const Exponents& m : monomials) {
    if (static_cast<int>(m.size()) != ambient)
      throw Error(ErrorCode::AmbientMismatch, "exponent vector length differs from ambient");
    for (int e : m)
      if (e < 0) throw Error(ErrorCode::BadSpec, "negative exponent");
  }
}

}  // namespace

MonomialIdeal monomial_minimalize(std::span<const Exponents> monomials, int ambient) {
  check_exponents(monomials, ambient);
  std::vector<Exponents> sorted(monomials.begin(), monomials.end());
  std::sort(sorted.begin(), sorted.end(), [](const Exponents& a, const Exponents& b) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  MonomialIdeal out{ambient, {}};
  for (const Exponents& m : sorted) {
    if (total_degree(m) == 0) throw Error(ErrorCode::UnitIdeal, "the unit ideal is not a proper ideal");
    const bool redundant = std::any_of(out.gens.begin(), out.gens.end(),
                                       [&](const Exponents& g) { return divides(g, m); });
    if (!redundant) out.gens.push_back(m);
  }
  return out;
}

MonomialIdeal to_monomial_ideal(const SqfIdeal& ideal) {
  MonomialIdeal out{ideal.ambient(), {}};
  for (VarSet g : ideal.gens()) {
    Exponents e(static_cast<std::size_t>(ideal.ambient()), 0);
    g.for_each([&](int v) { e[static_cast<std::size_t>(v - 1)] = 1; });
    out.gens.push_back(std::move(e));
  }
  return out;
}

MonomialIdeal ordinary_power(const MonomialIdeal& ideal, int k) {
  if (k < 1) throw Error(ErrorCode::OutOfRange, "ordinary power needs k >= 1");
  MonomialIdeal power = ideal;
  for (int i = 2; i <= k; ++i) {
    std::vector<Exponents> products;
    products.reserve(power.gens.size() * ideal.gens.size());
    for (const Exponents& a : power.gens)
      for (const Exponents& b : ideal.gens) {
        Exponents c(a.size());
        for (std::size_t j = 0; j < a.size(); ++j) c[j] = a[j] + b[j];
        products.push_back(std::move(c));
      }
    power = monomial_minimalize(products, ideal.ambient);
  }
  return power;
}

SqfIdeal squarefree_part(std::span<const Exponents> monomials, int ambient) {
  check_exponents(monomials, ambient);
  std::vector<VarSet> squarefree;
  for (const Exponents& m : monomials) {
    if (std::any_of(m.begin(), m.end(), [](int e) { return e > 1; })) continue;
    VarSet s;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] == 1) s = s.with(static_cast<int>(i) + 1);
    squarefree.push_back(s);
  }
  return SqfIdeal::minimalize(squarefree, ambient);
}

}  // namespace sqfpow
