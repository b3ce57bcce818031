#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "sqfpow/complex.hpp"
#include "sqfpow/error.hpp"
#include "sqfpow/graph.hpp"
#include "sqfpow/homology.hpp"
#include "sqfpow/io.hpp"
#include "sqfpow/rank.hpp"

using namespace sqfpow;

namespace {

SqfIdeal ideal_of(std::initializer_list<std::initializer_list<int>> gens, int n) {
  std::vector<VarSet> v;
  for (auto g : gens) v.push_back(VarSet::of(g));
  return SqfIdeal::minimalize(v, n);
}

const Field Q = Field::rational();
const Field GF = Field::gf(kDefaultPrime);

}  // namespace

TEST_CASE("exact rank") {
  CHECK(matrix_rank({}, Q) == 0);
  std::vector<SparseRow> rows{{{0, 1}, {1, 2}}, {{0, 2}, {1, 4}}, {{2, 3}}};
  CHECK(matrix_rank(rows, Q) == 2);
  CHECK(matrix_rank(rows, GF) == 2);
  // 2 is a unit over Q but zero over GF(2).
  std::vector<SparseRow> two{{{0, 2}}};
  CHECK(matrix_rank(two, Q) == 1);
  CHECK(matrix_rank(two, Field::gf(2)) == 0);
  // Entries near the int64 limit force the big-integer path.
  const std::int64_t big = std::int64_t{1} << 62;
  std::vector<SparseRow> huge{{{0, big}, {1, 3}}, {{0, 3}, {1, big}}, {{0, big - 1}, {1, big + 1}}};
  CHECK(matrix_rank(huge, Q) == 2);
  std::vector<SparseRow> dependent{{{0, big}, {1, big - 1}}, {{0, 2 * (big / 2)}, {1, big - 1}}};
  CHECK(matrix_rank(dependent, Q) == 1);
  CHECK_THROWS_AS(Field::gf(32001), Error);
  CHECK(GF.name() == "GF(32003)");
  CHECK(Q.name() == "Q");
}

TEST_CASE("Stanley-Reisner complexes and restriction") {
  const auto a = stanley_reisner(ideal_of({{1, 2}}, 2));
  CHECK(a.facets() == std::vector<VarSet>{VarSet::of({1}), VarSet::of({2})});
  CHECK(stanley_reisner(edge_ideal(family::complete(3))) == gamma_k(family::complete(3), 1));
  CHECK(stanley_reisner(squarefree_veronese(3, 2)).facets().size() == 3);
  CHECK(restrict(a, VarSet{}).is_irrelevant());
  const auto two_points = restrict(stanley_reisner(edge_ideal(family::complete(3))), VarSet::of({1, 2}));
  CHECK(two_points.facets() == std::vector<VarSet>{VarSet::of({1}), VarSet::of({2})});
  const auto simplex = SimplicialComplex::simplex(VarSet::of({1, 2, 3}));
  CHECK(restrict(simplex, VarSet::of({1, 3})).facets() == std::vector<VarSet>{VarSet::of({1, 3})});
  CHECK(SimplicialComplex().dimension() == -2);
  CHECK(SimplicialComplex::irrelevant().dimension() == -1);
  CHECK_THROWS_AS(SimplicialComplex(VarSet::of({1}), {VarSet::of({1, 2})}), Error);
}

TEST_CASE("reduced homology of small complexes") {
  const SimplicialComplex points(VarSet::of({1, 2}), {VarSet::of({1}), VarSet::of({2})});
  auto h = reduced_homology(points, Q);
  CHECK(h.dim(0) == 1);
  CHECK(h.dim(-1) == 0);
  CHECK(h.dim(1) == 0);
  const SimplicialComplex circle(VarSet::of({1, 2, 3}), {VarSet::of({1, 2}), VarSet::of({2, 3}), VarSet::of({1, 3})});
  h = reduced_homology(circle, Q);
  CHECK(h.dim(1) == 1);
  CHECK(h.dim(0) == 0);
  CHECK(reduced_homology(SimplicialComplex::simplex(VarSet::range(5)), Q).acyclic());
  CHECK(reduced_homology(SimplicialComplex::irrelevant(), Q).dim(-1) == 1);
  CHECK(reduced_homology(SimplicialComplex(), Q).acyclic());
  CHECK_THROWS_AS(reduced_homology(SimplicialComplex::simplex(VarSet::range(12)), Q, 100), Error);
  // Real projective plane, 6-vertex triangulation: torsion appears in characteristic 2 only.
  std::vector<VarSet> rp2;
  for (auto t : {std::initializer_list<int>{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5},
                 {3, 4, 6}, {2, 4, 5}, {2, 4, 6}, {3, 5, 6}})
    rp2.push_back(VarSet::of(t));
  const SimplicialComplex rp(VarSet::range(6), rp2);
  CHECK(reduced_homology(rp, Q).acyclic());
  CHECK(reduced_homology(rp, GF).acyclic());
  CHECK(reduced_homology(rp, Field::gf(2)).dim(1) == 1);
  CHECK(reduced_homology(rp, Field::gf(2)).dim(2) == 1);
}

TEST_CASE("Hochster Betti numbers on named ideals") {
  for (int n = 2; n <= 7; ++n)
    for (int d = 1; d <= n; ++d) {
      const auto t = hochster_betti(squarefree_veronese(n, d), Q);
      CHECK(t.projdim() == n - d + 1);
      CHECK(depth(squarefree_veronese(n, d), Q) == d - 1);
    }
  const auto k11 = hochster_betti(edge_ideal(family::complete_bipartite(1, 1)), Q);
  CHECK(k11.at(1, 2) == 1);
  CHECK(k11.projdim() == 1);
  const SqfIdeal p4 = edge_ideal(family::path(4));
  const auto t = hochster_betti(p4, Q);
  CHECK(t.at(1, 2) == 3);
  CHECK(t.entries() == oracle::betti(p4));
  // Taylor bound: beta_i <= C(3, i).
  std::map<int, std::uint64_t> totals;
  for (const auto& [key, value] : t.entries()) totals[key.first] += value;
  CHECK(totals[1] == 3);
  CHECK(totals[2] <= 3);
  CHECK(totals[3] <= 1);
  CHECK(projdim_via_dual(p4, Q) == t.projdim());
}

TEST_CASE("Hochster engine against the brute-force oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const SqfIdeal i = oracle::random_ideal(rng, 7, 7);
    const auto table = hochster_betti(i, Q);
    CHECK(table.entries() == oracle::betti(i));
    CHECK(table == hochster_betti_serial(i, Q));
    CHECK(table == hochster_betti(i, GF));
    CHECK(depth(i, Q) == oracle::depth(i));
    CHECK(depth(i, Q) == depth_serial(i, Q));
    for (int j = 1; j <= i.ambient(); ++j) {
      const auto count = std::count_if(i.gens().begin(), i.gens().end(), [&](VarSet g) { return g.size() == j; });
      CHECK(table.at(1, j) == static_cast<std::uint64_t>(count));
    }
    for (const auto& [key, value] : table.entries())
      if (key.first >= 1) CHECK(key.second >= i.min_degree() + key.first - 1);
  }
}

TEST_CASE("depth lower bound g >= 0 on random ideals") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const SqfIdeal i = oracle::random_ideal(rng, 9, 8);
    SqfIdeal power = i;
    for (int k = 1; !power.is_zero(); ++k) {
      CHECK(depth(power, Q) >= power.min_degree() - 1);
      power = squarefree_product(i, power);
    }
  }
}

TEST_CASE("Alexander duality") {
  const SqfIdeal k3 = edge_ideal(family::complete(3));
  CHECK(alexander_dual(k3) == k3);
  CHECK(alexander_dual(ideal_of({{1, 2}}, 2)) == ideal_of({{1}, {2}}, 2));
  for (int n = 2; n <= 7; ++n)
    for (int d = 1; d <= n; ++d) CHECK(alexander_dual(squarefree_veronese(n, d)) == squarefree_veronese(n, n - d + 1));
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const SqfIdeal i = oracle::random_ideal(rng, 8, 8);
    CHECK(alexander_dual(alexander_dual(i)) == i);
    CHECK(i.ambient() - depth(i, Q) == projdim_via_dual(i, Q));
  }
  CHECK_THROWS_AS(alexander_dual(SqfIdeal(3)), Error);
}

TEST_CASE("disjoint-variable products") {
  // I in x1..x3, J in x4..x7: depth(S/IJ) = depth(S1/I) + depth(S2/J) + 1.
  const std::vector<std::pair<SqfIdeal, SqfIdeal>> pairs{
      {ideal_of({{1, 2}, {2, 3}}, 3), ideal_of({{1, 2}, {3, 4}}, 4)},
      {ideal_of({{1}, {2, 3}}, 3), ideal_of({{1, 2, 3}, {2, 4}}, 4)},
      {squarefree_veronese(3, 2), squarefree_veronese(4, 3)},
      {ideal_of({{1, 2, 3}}, 3), edge_ideal(family::cycle(4))}};
  for (const auto& [i, j] : pairs) {
    std::vector<VarSet> product;
    for (VarSet a : i.gens())
      for (VarSet b : j.gens()) product.push_back(a | VarSet{b.bits() << 3});
    const SqfIdeal ij = SqfIdeal::minimalize(product, 7);
    CHECK(depth(ij, Q) == depth(i, Q) + depth(j, Q) + 1);
  }
}

TEST_CASE("named depths") {
  for (int n = 4; n <= 9; ++n) CHECK(depth(edge_ideal(family::path_complement(n)), Q) == 2);
  const std::vector<int> twos{2, 2, 2};
  CHECK(depth(edge_ideal(family::whiskered(twos)), Q) == 5);
  CHECK_THROWS_AS(depth(SqfIdeal(3), Q), Error);
  HochsterOptions tight;
  tight.max_ambient = 5;
  CHECK_THROWS_AS(depth(edge_ideal(family::path(6)), Q, tight), Error);
}

TEST_CASE("top Betti number test for minimum depth") {
  CHECK(top_betti_mindepth(family::complete(2), 1, Q));
  const std::vector<int> ones{1, 1, 1, 1};
  const Graph h = family::whiskered(ones);
  CHECK_FALSE(top_betti_mindepth(h, 2, Q));
  CHECK(top_betti_mindepth(h, 3, Q));
  CHECK(top_betti_mindepth(h, 4, Q));
  CHECK_THROWS_AS(top_betti_mindepth(h, 5, Q), Error);
  Graph isolated(3);
  isolated.add_edge(1, 2);
  CHECK_THROWS_AS(top_betti_mindepth(isolated, 1, Q), Error);
}

TEST_CASE("field robustness on random ideals") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const SqfIdeal i = oracle::random_ideal(rng, 8, 8);
    CHECK(hochster_betti(i, Q) == hochster_betti(i, GF));
  }
}
