#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "sqfpow/depth_lab.hpp"
#include "sqfpow/error.hpp"
#include "sqfpow/graph.hpp"
#include "sqfpow/homology.hpp"
#include "sqfpow/linquot.hpp"

using namespace sqfpow;

namespace {

const Field Q = Field::rational();

SqfIdeal ideal_of(std::initializer_list<std::initializer_list<int>> gens, int n) {
  std::vector<VarSet> v;
  for (auto g : gens) v.push_back(VarSet::of(g));
  return SqfIdeal::minimalize(v, n);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::CheckFailed;
}

}  // namespace

TEST_CASE("colon generators") {
  const std::vector<VarSet> one{VarSet::of({1, 2})};
  CHECK(colon_generators(one, VarSet::of({2, 3})) == std::vector<VarSet>{VarSet::of({1})});
  const std::vector<VarSet> two{VarSet::of({1, 2}), VarSet::of({3, 4})};
  CHECK(colon_generators(two, VarSet::of({1, 3})) == std::vector<VarSet>{VarSet::of({2}), VarSet::of({4})});
  CHECK(colon_generators({}, VarSet::of({1})).empty());
}

TEST_CASE("colon generators are squarefree and avoid u") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const SqfIdeal i = oracle::random_ideal(rng, 9, 8);
    const auto& g = i.gens();
    for (std::size_t s = 1; s < g.size(); ++s) {
      const auto colon = colon_generators(std::span(g).subspan(0, s), g[s]);
      for (VarSet v : colon) {
        CHECK(v.disjoint(g[s]));
        CHECK_FALSE(v.empty());
      }
      for (VarSet a : colon)
        for (VarSet b : colon) CHECK((a == b || !a.subset_of(b)));
    }
  }
}

TEST_CASE("linear quotients on edge ideal powers") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : graphs_without_isolated_vertices(n)) {
      const SqfIdeal i = edge_ideal(g);
      const int top = nu(i);
      const SqfIdeal last = squarefree_power(i, top);
      const auto lex = certify_order(last, lex_order(last));
      CHECK(lex.has_value());
      if (!is_cochordal(g)) continue;
      for (int k = 1; k <= top; ++k) {
        const SqfIdeal power = squarefree_power(i, k);
        const auto cert = find_linear_quotients(power);
        REQUIRE(cert.has_value());
        // Replay: every colon is generated by r_i variables outside u_i.
        for (std::size_t j = 1; j < cert->ordering.size(); ++j) {
          const auto colon = colon_generators(std::span(cert->ordering).subspan(0, j), cert->ordering[j]);
          CHECK(static_cast<int>(colon.size()) == cert->r[j]);
          for (VarSet v : colon) CHECK(v.size() == 1);
          CHECK(cert->r[j] <= n - cert->ordering[j].size());
        }
        if (cert->ordering.size() >= 2) CHECK(depth_from_linear_quotients(*cert) == depth(power, Q));
      }
    }
}

TEST_CASE("the 5-cycle") {
  const SqfIdeal c5 = edge_ideal(family::cycle(5));
  const auto cert = find_linear_quotients(c5);
  CHECK_FALSE(cert.has_value());
  const auto square = find_linear_quotients(squarefree_power(c5, 2));
  REQUIRE(square.has_value());
  CHECK(depth_from_linear_quotients(*square) == depth(squarefree_power(c5, 2), Q));
}

TEST_CASE("depth formula") {
  for (int n = 2; n <= 7; ++n)
    for (int d = 1; d < n; ++d) {
      const auto cert = find_linear_quotients(squarefree_veronese(n, d));
      REQUIRE(cert.has_value());
      CHECK(depth_from_linear_quotients(*cert) == d - 1);
    }
  const std::vector<int> twos{2, 2, 2};
  const auto cert = find_linear_quotients(edge_ideal(family::whiskered(twos)));
  REQUIRE(cert.has_value());
  CHECK(depth_from_linear_quotients(*cert) == 5);
  const auto single = find_linear_quotients(ideal_of({{1, 2, 3}}, 4));
  REQUIRE(single.has_value());
  CHECK(code_of([&] { depth_from_linear_quotients(*single); }) == ErrorCode::SingleGenerator);
  CHECK(code_of([] { find_linear_quotients(SqfIdeal(3)); }) == ErrorCode::ZeroIdeal);
  CHECK(code_of([] { certify_order(ideal_of({{1, 2}, {2, 3}}, 3), std::vector<VarSet>{VarSet::of({1, 2})}); }) ==
        ErrorCode::InvalidCertificate);
}

TEST_CASE("search limits") {
  SearchLimits limits;
  limits.max_nodes = 1;
  CHECK(code_of([&] { find_linear_quotients(squarefree_veronese(7, 3), limits); }) == ErrorCode::Timeout);
  SearchLimits past;
  past.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CHECK(code_of([&] { find_linear_quotients(edge_ideal(family::cycle(5)), past); }) == ErrorCode::Timeout);
}

TEST_CASE("matroidal and polymatroidal checks") {
  for (int n = 2; n <= 6; ++n)
    for (int d = 1; d <= n; ++d) CHECK(is_matroidal(squarefree_veronese(n, d)));
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) CHECK(is_matroidal(edge_ideal(family::complete_bipartite(m, n))));
  CHECK_FALSE(is_matroidal(edge_ideal(family::path(4))));
  CHECK(code_of([] { is_matroidal(ideal_of({{1}, {2, 3}}, 3)); }) == ErrorCode::MixedDegrees);
  CHECK(is_polymatroidal(ordinary_power(to_monomial_ideal(squarefree_veronese(4, 2)), 2)));
  CHECK_FALSE(is_polymatroidal(to_monomial_ideal(edge_ideal(family::path(4)))));
}

TEST_CASE("squarefree parts preserve structure") {
  const auto m2 = to_monomial_ideal(squarefree_veronese(4, 2));
  const auto report = squarefree_part_preserves(ordinary_power(m2, 2), PreservedProperty::Matroidal);
  CHECK(report.squarefree_part == squarefree_veronese(4, 4));
  CHECK(report.output_verified);
  const SqfIdeal k22 = edge_ideal(family::complete_bipartite(2, 2));
  CHECK(is_matroidal(squarefree_power(k22, 2)));
  const auto lq = squarefree_part_preserves(ordinary_power(to_monomial_ideal(k22), 2),
                                            PreservedProperty::LinearQuotients);
  CHECK(lq.output_verified);
  CHECK(lq.squarefree_part == squarefree_power(k22, 2));
  const auto c5 = to_monomial_ideal(edge_ideal(family::cycle(5)));
  CHECK(code_of([&] { squarefree_part_preserves(c5, PreservedProperty::LinearQuotients); }) ==
        ErrorCode::PropertyNotVerified);
  CHECK(code_of([&] { squarefree_part_preserves(c5, PreservedProperty::Matroidal); }) ==
        ErrorCode::PropertyNotVerified);
  for (int n = 3; n <= 6; ++n)
    for (const Graph& g : graphs_without_isolated_vertices(n)) {
      if (!is_cochordal(g)) continue;
      const auto mono = to_monomial_ideal(edge_ideal(g));
      for (int k = 2; k <= 3; ++k) {
        const auto r = squarefree_part_preserves(ordinary_power(mono, k), PreservedProperty::LinearQuotients);
        CHECK(r.output_verified);
      }
    }
}

TEST_CASE("matroidal ideals have minimum depth") {
  for (int n = 2; n <= 7; ++n)
    for (int d = 1; d <= n; ++d) {
      const SqfIdeal i = squarefree_veronese(n, d);
      for (int k = 1; k <= n / d; ++k) {
        const SqfIdeal p = squarefree_power(i, k);
        CHECK(depth(p, Q) == p.min_degree() - 1);
      }
    }
}

TEST_CASE("minimum depth criterion") {
  const std::vector<int> ones{1, 1, 1, 1};
  const Graph h = family::whiskered(ones);
  const auto cert3 = find_linear_quotients(squarefree_power(edge_ideal(h), 3));
  REQUIRE(cert3.has_value());
  const auto w = mindepth_criterion(h, 3, *cert3);
  REQUIRE(w.has_value());
  CHECK(w->support.size() == 6);
  CHECK(is_dominating(h, w->support));
  const auto cert2 = find_linear_quotients(squarefree_power(edge_ideal(h), 2));
  REQUIRE(cert2.has_value());
  CHECK_FALSE(mindepth_criterion(h, 2, *cert2).has_value());
  auto bad = *cert3;
  bad.r.back() += 1;
  CHECK(code_of([&] { mindepth_criterion(h, 3, bad); }) == ErrorCode::InvalidCertificate);
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : graphs_without_isolated_vertices(n)) {
      const int top = matching_number(g);
      const SqfIdeal last = squarefree_power(edge_ideal(g), top);
      const auto lex = certify_order(last, lex_order(last));
      REQUIRE(lex.has_value());
      CHECK(mindepth_criterion(g, top, *lex).has_value());
    }
}
