#include "sqfpow/facet_cover.hpp"

#include <algorithm>
#include <numeric>

#include "sqfpow/error.hpp"

namespace sqfpow {

SimplicialComplex facet_complex(const SqfIdeal& ideal) {
  if (ideal.is_zero()) throw Error(ErrorCode::ZeroIdeal, "facet complex of the zero ideal");
  return SimplicialComplex(ideal.support(), ideal.gens());
}

SqfIdeal facet_ideal(const SimplicialComplex& complex, int ambient) {
  return SqfIdeal::minimalize(complex.facets(), ambient);
}

CoverCheck check_well_ordered_cover(const FacetCover& cover) {
  CoverCheck out;
  const auto& seq = cover.sequence;
  const auto fail = [&](std::string why) {
    out.ok = false;
    out.failure = std::move(why);
    return out;
  };
  if (seq.empty()) return fail("empty sequence");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!cover.host.has_facet(seq[i])) return fail(seq[i].to_string() + " is not a facet");
    for (std::size_t j = 0; j < i; ++j)
      if (seq[j] == seq[i]) return fail(seq[i].to_string() + " listed twice");
  }
  VarSet covered;
  for (VarSet f : seq) covered |= f;
  if (covered != cover.host.vertices()) return fail("vertices " + (cover.host.vertices() - covered).to_string() + " uncovered");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    VarSet others;
    for (std::size_t j = 0; j < seq.size(); ++j)
      if (j != i) others |= seq[j];
    if (seq[i].subset_of(others)) return fail("not minimal: " + seq[i].to_string() + " is redundant");
  }

  // suffix[i] = F_{i+1} u ... u F_k in 0-based terms
  std::vector<VarSet> suffix(seq.size() + 1);
  for (std::size_t i = seq.size(); i-- > 0;) suffix[i] = suffix[i + 1] | seq[i];

  out.ok = true;
  for (VarSet h : cover.host.facets()) {
    if (std::find(seq.begin(), seq.end(), h) != seq.end()) continue;
    CoverCheck::Step step{h, 0};
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      if (seq[i].subset_of(h | suffix[i + 1])) {
        step.index = static_cast<int>(i) + 1;
        break;
      }
    }
    out.transcript.push_back(step);
    if (step.index == 0 && out.ok) {
      out.ok = false;
      out.failure = "no index works for facet " + h.to_string();
    }
  }
  return out;
}

namespace {

struct CoverSearch {
  const SimplicialComplex& complex;
  const std::vector<VarSet>& facets;
  std::size_t cardinality;
  std::size_t node_limit;
  std::size_t nodes = 0;
  std::vector<std::size_t> chosen;
  std::optional<FacetCover> found;

  void tick() {
    if (node_limit != 0 && ++nodes > node_limit)
      throw Error(ErrorCode::Timeout, "well-ordered cover search exceeded " + std::to_string(node_limit) + " nodes");
  }

  // Every chosen facet keeps a vertex no other chosen facet has; a minimal
  // cover has this property and so does each of its subsets.
  bool irredundant() const {
    for (std::size_t a : chosen) {
      VarSet others;
      for (std::size_t b : chosen)
        if (b != a) others |= facets[b];
      if (facets[a].subset_of(others)) return false;
    }
    return true;
  }

  void try_orderings() {
    std::vector<std::size_t> order = chosen;
    do {
      tick();
      FacetCover candidate{complex, {}};
      for (std::size_t idx : order) candidate.sequence.push_back(facets[idx]);
      if (is_well_ordered_cover(candidate)) {
        found = std::move(candidate);
        return;
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }

  void run(std::size_t next, VarSet covered) {
    if (found) return;
    tick();
    if (chosen.size() == cardinality) {
      if (covered == complex.vertices()) try_orderings();
      return;
    }
    for (std::size_t i = next; i + (cardinality - chosen.size()) <= facets.size() && !found; ++i) {
      chosen.push_back(i);
      if (irredundant()) run(i + 1, covered | facets[i]);
      chosen.pop_back();
    }
  }
};

}  // namespace

std::optional<FacetCover> find_well_ordered_cover(const SimplicialComplex& complex, int cardinality,
                                                  std::size_t node_limit) {
  if (cardinality < 1) throw Error(ErrorCode::OutOfRange, "cover cardinality must be >= 1");
  if (static_cast<std::size_t>(cardinality) > complex.facets().size()) return std::nullopt;
  CoverSearch search{complex, complex.facets(), static_cast<std::size_t>(cardinality), node_limit, 0, {}, std::nullopt};
  search.run(0, VarSet{});
  return std::move(search.found);
}

namespace {

struct EdgeSplit {
  VarSet g1;       // side holding the edge e_1 of M
  VarSet g2;       // side holding v
  Matching m;      // e_1 first, then the rest in lexicographic order
  int v = 0;
};

bool inside(const Edge& e, VarSet s) { return e.vertices().subset_of(s); }

// Puts the first edge of `edges` contained in `side` at the front.
Matching with_front_edge_in(Matching edges, VarSet side) {
  const auto it = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) { return inside(e, side); });
  std::rotate(edges.begin(), it, it + 1);
  std::sort(edges.begin() + 1, edges.end());
  return edges;
}

// Case 1: a k-matching with an edge inside one side exists.
std::optional<EdgeSplit> split_case_one(const std::vector<Matching>& matchings, VarSet g1, VarSet g2) {
  for (const auto& [a, b] : {std::pair{g1, g2}, std::pair{g2, g1}}) {
    for (const Matching& mk : matchings) {
      if (std::none_of(mk.begin(), mk.end(), [&](const Edge& e) { return inside(e, a); })) continue;
      Matching ordered = with_front_edge_in(mk, a);
      const int v = b.min();
      // Drop the edge through v if there is one, the last edge otherwise.
      auto drop = std::find_if(ordered.begin() + 1, ordered.end(),
                               [&](const Edge& e) { return e.vertices().contains(v); });
      if (drop == ordered.end()) drop = ordered.end() - 1;
      ordered.erase(drop);
      return EdgeSplit{a, b, ordered, v};
    }
  }
  return std::nullopt;
}

// Case 2: every k-matching uses only edges between the sides.
std::optional<EdgeSplit> split_case_two(const Graph& g, const Matching& mk, VarSet g1, VarSet g2) {
  const std::size_t k = mk.size();
  for (const auto& [a_side, b_side] : {std::pair{g1, g2}, std::pair{g2, g1}}) {
    // e_i = {a_i, b_i} with a_i on a_side
    std::vector<int> a(k), b(k);
    for (std::size_t i = 0; i < k; ++i) {
      const bool u_in_a = a_side.contains(mk[i].u);
      a[i] = u_in_a ? mk[i].u : mk[i].v;
      b[i] = u_in_a ? mk[i].v : mk[i].u;
    }
    // Case 2.1: an edge among the a_i.
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = p + 1; q < k; ++q) {
        if (!g.adjacent(a[p], a[q])) continue;
        Matching m{Edge{std::min(a[p], a[q]), std::max(a[p], a[q])}};
        for (std::size_t i = 0; i < k; ++i)
          if (i != p && i != q) m.push_back(mk[i]);
        std::sort(m.begin() + 1, m.end());
        return EdgeSplit{a_side, b_side, m, b[q]};
      }
  }
  for (const auto& [a_side, b_side] : {std::pair{g1, g2}, std::pair{g2, g1}}) {
    // Case 2.2: both endpoint sets independent; use an edge f inside a_side.
    const auto edges = g.edges();
    const auto f = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) { return inside(e, a_side); });
    if (f == edges.end()) continue;
    std::size_t touched = k;
    for (std::size_t i = 0; i < k; ++i)
      if (!mk[i].vertices().disjoint(f->vertices())) touched = i;
    const std::size_t first = touched == k ? 0 : touched;
    const std::size_t last = first == k - 1 ? k - 2 : k - 1;
    Matching m{*f};
    for (std::size_t i = 0; i < k; ++i)
      if (i != first && i != last) m.push_back(mk[i]);
    std::sort(m.begin() + 1, m.end());
    const int v = b_side.contains(mk[last].u) ? mk[last].u : mk[last].v;
    return EdgeSplit{a_side, b_side, m, v};
  }
  return std::nullopt;
}

void require(bool condition, const std::string& hypothesis) {
  if (!condition) throw Error(ErrorCode::PreconditionViolated, "hypothesis fails: " + hypothesis);
}

}  // namespace

FacetCover construct_cover_disconnected(const Graph& g, int k) {
  require(g.isolated_vertices().empty(), "G has isolated vertices");
  const int top = matching_number(g);
  require(top >= 2, "nu(G) >= 2");
  require(k >= 2 && k <= top, "2 <= k <= nu(G) = " + std::to_string(top));
  const auto parts = components(complement(g));
  require(parts.size() >= 2, "complement of G is disconnected");
  require(!is_complete_bipartite(g), "G is not complete bipartite");

  // G_1 is the complement component containing vertex 1.
  const VarSet g1 = parts.front();
  const VarSet g2 = g.vertices() - g1;
  const auto matchings = k_matchings(g, k);
  auto split = split_case_one(matchings, g1, g2);
  if (!split) split = split_case_two(g, matchings.front(), g1, g2);
  if (!split) throw Error(ErrorCode::CheckFailed, "no edge/vertex selection found");

  const VarSet matched = matching_vertices(split->m);
  const VarSet u = matched.with(split->v);
  const SimplicialComplex host = facet_complex(squarefree_power(edge_ideal(g), k));
  FacetCover cover{host, {}};
  for (VarSet side : {split->g1, split->g2}) (side - u).for_each([&](int x) { cover.sequence.push_back(u.with(x)); });
  return cover;
}

FacetCover construct_cover_dominating_clique(const Graph& g, int k) {
  const int top = matching_number(g);
  if (k < 2 || k > top)
    throw Error(ErrorCode::OutOfRange, "need 2 <= k <= nu(G) = " + std::to_string(top));
  const auto clique = dominating_clique(g, 2 * k - 1);
  if (!clique)
    throw Error(ErrorCode::NoDominatingClique, "no dominating clique on " + std::to_string(2 * k - 1) + " vertices");
  FacetCover cover{facet_complex(squarefree_power(edge_ideal(g), k)), {}};
  (g.vertices() - *clique).for_each([&](int x) { cover.sequence.push_back(clique->with(x)); });
  return cover;
}

}  // namespace sqfpow
