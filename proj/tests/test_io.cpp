#include <doctest.h>

#include "sqfpow/error.hpp"
#include "sqfpow/io.hpp"

using namespace sqfpow;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::CheckFailed;
}

}  // namespace

TEST_CASE("ideal text round trip") {
  const SqfIdeal i = parse_ideal("# a comment\nn 5\n3 4\n1 2  # trailing\n\n2 3 4\n");
  CHECK(i.ambient() == 5);
  CHECK(i.size() == 2);
  CHECK(format_ideal(i) == "n 5\n1 2\n3 4\n");
  CHECK(parse_ideal(format_ideal(counterexample_ideal())) == counterexample_ideal());
}

TEST_CASE("ideal parse errors") {
  CHECK(code_of([] { parse_ideal("1 2\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_ideal("n 3\n1 x\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_ideal("n 3\n1 1 2\n"); }) == ErrorCode::NotSquarefree);
  CHECK(code_of([] { parse_ideal("n 3\n1 4\n"); }) == ErrorCode::AmbientMismatch);
  CHECK(code_of([] { parse_ideal(""); }) == ErrorCode::Parse);
  CHECK(parse_ideal("n 3\n").is_zero());
}

TEST_CASE("graph text and families") {
  const Graph g = parse_graph("n 4\n1 2\n2 3\n3 4\n");
  CHECK(g == family::path(4));
  CHECK(parse_graph(format_graph(family::cycle(5))) == family::cycle(5));
  CHECK(parse_family("complete:4") == family::complete(4));
  CHECK(parse_family("complete_bipartite:2,3") == family::complete_bipartite(2, 3));
  CHECK(parse_family("path_complement:6") == family::path_complement(6));
  CHECK(parse_family("whiskered:2,2,2").order() == 9);
  CHECK(code_of([] { parse_family("dodecahedron:3"); }) == ErrorCode::BadSpec);
  CHECK(code_of([] { parse_family("path:x"); }) == ErrorCode::BadSpec);
  CHECK(code_of([] { parse_family("complete_bipartite:2"); }) == ErrorCode::BadSpec);
  CHECK(load_ideal("veronese:5,2") == squarefree_veronese(5, 2));
  CHECK(load_ideal("cycle:5") == edge_ideal(family::cycle(5)));
  CHECK(load_ideal("counterexample").ambient() == 11);
}

TEST_CASE("json") {
  const auto betti = to_json(hochster_betti(edge_ideal(family::path(4)), Field::rational()));
  CHECK(betti["projdim"] == 2);
  CHECK(betti["betti"][0] == nlohmann::json::array({0, 0, 1}));
  CHECK(betti["betti"][1] == nlohmann::json::array({1, 2, 3}));
  const auto cert = find_linear_quotients(squarefree_veronese(4, 2));
  REQUIRE(cert.has_value());
  const auto j = to_json(*cert);
  CHECK(j["depth"] == 1);
  const LinearQuotientsCert back = cert_from_json(j);
  CHECK(back.ordering == cert->ordering);
  CHECK(back.r == cert->r);
  const auto cover = construct_cover_dominating_clique(family::complete(5), 2);
  const auto cj = to_json(cover, check_well_ordered_cover(cover));
  CHECK(cj["well_ordered"] == true);
  CHECK(cj["cardinality"] == 2);
  CHECK(cj["transcript"].size() == 3);
  const auto pj = to_json(profile(edge_ideal(family::path(4)), Field::rational()));
  CHECK(pj["rows"].size() == 2);
  CHECK(pj["field"] == "Q");
}
