#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "sqfpow/error.hpp"
#include "sqfpow/graph.hpp"
#include "sqfpow/ideal.hpp"
#include "sqfpow/io.hpp"

using namespace sqfpow;

namespace {

SqfIdeal ideal_of(std::initializer_list<std::initializer_list<int>> gens, int n) {
  std::vector<VarSet> v;
  for (auto g : gens) v.push_back(VarSet::of(g));
  return SqfIdeal::minimalize(v, n);
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::CheckFailed;
}

}  // namespace

TEST_CASE("varset basics") {
  const VarSet a = VarSet::of({1, 3, 5});
  CHECK(a.size() == 3);
  CHECK(a.contains(3));
  CHECK_FALSE(a.contains(2));
  CHECK(a.min() == 1);
  CHECK(a.max() == 5);
  CHECK(a.to_string() == "{1,3,5}");
  CHECK((a - VarSet::of({1})) == VarSet::of({3, 5}));
  CHECK(VarSet::of({1, 3}).subset_of(a));
  CHECK(VarSet::of({2, 4}).disjoint(a));
  CHECK(VarSet::range(64).size() == 64);
  CHECK(canonical_less(VarSet::of({4}), VarSet::of({1, 2})));
  CHECK(canonical_less(VarSet::of({1, 3}), VarSet::of({2, 3})));
  CHECK(canonical_less(VarSet::of({1, 2, 5}), VarSet::of({1, 3, 4})));
}

TEST_CASE("minimalize") {
  CHECK(ideal_of({{1, 2}, {1, 2, 3}}, 3).gens() == std::vector<VarSet>{VarSet::of({1, 2})});
  CHECK(SqfIdeal::minimalize({}, 4).is_zero());
  CHECK(ideal_of({{1, 2}, {2, 3}, {1, 3}}, 3).size() == 3);
  CHECK(code_of([] { ideal_of({{1, 5}}, 4); }) == ErrorCode::AmbientMismatch);
  CHECK(code_of([] { SqfIdeal::minimalize(std::vector<VarSet>{VarSet{}}, 3); }) == ErrorCode::UnitIdeal);
  const SqfIdeal i = ideal_of({{2, 3}, {1}, {1, 4}}, 4);
  CHECK(i.gens() == std::vector<VarSet>{VarSet::of({1}), VarSet::of({2, 3})});
  CHECK(i.contains(VarSet::of({1, 4})));
  CHECK_FALSE(i.is_generator(VarSet::of({1, 4})));
  CHECK(i.support() == VarSet::of({1, 2, 3}));
}

TEST_CASE("squarefree products and powers") {
  CHECK(squarefree_product(ideal_of({{1, 2}}, 4), ideal_of({{1, 3}}, 4)).is_zero());
  CHECK(squarefree_product(ideal_of({{1, 2}}, 4), ideal_of({{3, 4}}, 4)) == ideal_of({{1, 2, 3, 4}}, 4));
  const SqfIdeal p4 = edge_ideal(family::path(4));
  CHECK(squarefree_product(p4, p4) == ideal_of({{1, 2, 3, 4}}, 4));
  CHECK(squarefree_power(p4, 2) == ideal_of({{1, 2, 3, 4}}, 4));
  CHECK(squarefree_power(p4, 1) == p4);
  CHECK(squarefree_power(counterexample_ideal(), 4).is_zero());
  CHECK(code_of([&] { squarefree_power(p4, 0); }) == ErrorCode::OutOfRange);
  CHECK(code_of([&] { squarefree_product(p4, ideal_of({{1}}, 5)); }) == ErrorCode::AmbientMismatch);
}

TEST_CASE("nu and degree statistics") {
  CHECK(nu(counterexample_ideal()) == 3);
  CHECK(nu(ideal_of({{1, 2}}, 2)) == 1);
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      const SqfIdeal i = edge_ideal(family::complete_bipartite(m, n));
      CHECK(nu(i) == std::min(m, n));
      CHECK(nu(i) == oracle::nu(i.gens()));
    }
  CHECK(code_of([] { nu(SqfIdeal(3)); }) == ErrorCode::ZeroIdeal);
  const auto stats = degree_stats(counterexample_ideal(), 3);
  CHECK(stats.min_degree == 9);
  const auto p4 = degree_stats(edge_ideal(family::path(4)), 2);
  CHECK(p4.min_degree == 4);
  CHECK(p4.generator_count == 1);
  CHECK(code_of([] { degree_stats(edge_ideal(family::path(4)), 3); }) == ErrorCode::ZeroIdeal);
  const auto family_ = max_coprime_family(counterexample_ideal());
  CHECK(family_.size() == 3);
  for (std::size_t a = 0; a < family_.size(); ++a)
    for (std::size_t b = a + 1; b < family_.size(); ++b) CHECK(family_[a].disjoint(family_[b]));
}

TEST_CASE("squarefree part of monomials with exponents") {
  CHECK(squarefree_part(std::vector<Exponents>{{2, 1, 0}, {1, 0, 1}}, 3) == ideal_of({{1, 3}}, 3));
  CHECK(squarefree_part(std::vector<Exponents>{}, 3).is_zero());
  const SqfIdeal p4 = edge_ideal(family::path(4));
  CHECK(squarefree_part(ordinary_power(to_monomial_ideal(p4), 2)) == squarefree_power(p4, 2));
}

TEST_CASE("squarefree Veronese and trimming") {
  CHECK(squarefree_veronese(4, 2).size() == 6);
  CHECK(squarefree_veronese(5, 5).size() == 1);
  const SqfIdeal t = trim_ambient(ideal_of({{2, 5}, {5, 7}}, 8));
  CHECK(t.ambient() == 3);
  CHECK(t == ideal_of({{1, 2}, {2, 3}}, 3));
}

TEST_CASE("power tower, vanishing, monotone degrees and antichain on random ideals") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const SqfIdeal i = oracle::random_ideal(rng, 9, 9);
    const int top = nu(i);
    CHECK(top == oracle::nu(i.gens()));
    SqfIdeal power = i;
    int previous_degree = 0;
    for (int k = 1; k <= top + 1; ++k) {
      const SqfIdeal direct = squarefree_power(i, k);
      CHECK(direct == power);
      CHECK(direct.gens() == oracle::power(i.gens(), k));
      CHECK(direct.is_zero() == (k > top));
      for (VarSet a : direct.gens())
        for (VarSet b : direct.gens()) CHECK((a == b || !a.subset_of(b)));
      if (!direct.is_zero()) {
        if (k > 1) CHECK(direct.min_degree() >= previous_degree + i.min_degree());
        previous_degree = direct.min_degree();
      }
      power = squarefree_product(i, power);
    }
  }
}

TEST_CASE("stabilization on path complements") {
  for (int n = 4; n <= 9; ++n) {
    const SqfIdeal i = edge_ideal(family::path_complement(n));
    const SqfIdeal m2 = squarefree_veronese(n, 2);
    CHECK(squarefree_power(i, 2) == squarefree_power(m2, 2));
    for (int l = 3; l <= n / 2 + 1; ++l) CHECK(squarefree_power(i, l) == squarefree_power(m2, l));
  }
}
