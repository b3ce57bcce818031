#include "sqfpow/complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "sqfpow/error.hpp"

namespace sqfpow {

namespace {

std::vector<VarSet> maximal_members(std::vector<VarSet> sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VarSet> kept;
  // Walk from the largest down so a set is only compared with larger ones.
  for (auto it = sets.rbegin(); it != sets.rend(); ++it) {
    const VarSet s = *it;
    const bool covered = std::any_of(kept.begin(), kept.end(),
                                     [&](VarSet k) { return k != s && s.subset_of(k); });
    if (!covered) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), CanonicalLess{});
  return kept;
}

std::vector<VarSet> minimal_members(std::vector<VarSet> sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VarSet> kept;
  for (VarSet s : sets) {
    const bool covered = std::any_of(kept.begin(), kept.end(), [&](VarSet k) { return k.subset_of(s); });
    if (!covered) kept.push_back(s);
  }
  return kept;
}

}  // namespace

SimplicialComplex::SimplicialComplex(VarSet vertices, std::vector<VarSet> facets)
    : vertices_(vertices), facets_(maximal_members(std::move(facets))) {
  for (VarSet f : facets_)
    if (!f.subset_of(vertices_))
      throw Error(ErrorCode::BadSpec, "facet " + f.to_string() + " uses vertices outside " + vertices_.to_string());
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  return facets_.back().size() - 1;
}

bool SimplicialComplex::has_face(VarSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VarSet f) { return face.subset_of(f); });
}

bool SimplicialComplex::has_facet(VarSet facet) const {
  return std::binary_search(facets_.begin(), facets_.end(), facet, CanonicalLess{});
}

std::vector<VarSet> SimplicialComplex::faces(std::size_t budget) const {
  std::unordered_set<VarSet> seen;
  for (VarSet f : facets_) {
    // Enumerate subsets of f by the standard sub-mask walk.
    const std::uint64_t full = f.bits();
    std::uint64_t sub = full;
    while (true) {
      seen.insert(VarSet{sub});
      if (seen.size() > budget)
        throw Error(ErrorCode::FaceBudgetExceeded, "complex has more than " + std::to_string(budget) + " faces");
      if (sub == 0) break;
      sub = (sub - 1) & full;
    }
  }
  std::vector<VarSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<VarSet> minimal_transversals(std::span<const VarSet> sets) {
  std::vector<VarSet> transversals{VarSet{}};
  for (VarSet e : minimal_members({sets.begin(), sets.end()})) {
    std::vector<VarSet> next;
    for (VarSet t : transversals) {
      if (!t.disjoint(e)) {
        next.push_back(t);
        continue;
      }
      e.for_each([&](int v) { next.push_back(t.with(v)); });
    }
    transversals = minimal_members(std::move(next));
  }
  return transversals;
}

SimplicialComplex stanley_reisner(const SqfIdeal& ideal) {
  const VarSet ground = VarSet::range(ideal.ambient());
  std::vector<VarSet> facets;
  for (VarSet cover : minimal_transversals(ideal.gens())) facets.push_back(ground - cover);
  return SimplicialComplex(ground, std::move(facets));
}

SimplicialComplex restrict(const SimplicialComplex& complex, VarSet w) {
  std::vector<VarSet> facets;
  facets.reserve(complex.facets().size());
  for (VarSet f : complex.facets()) facets.push_back(f & w);
  return SimplicialComplex(complex.vertices() & w, std::move(facets));
}

}  // namespace sqfpow
