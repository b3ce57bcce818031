#pragma once

#include <istream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sqfpow/depth_lab.hpp"
#include "sqfpow/facet_cover.hpp"
#include "sqfpow/graph.hpp"
#include "sqfpow/homology.hpp"
#include "sqfpow/ideal.hpp"
#include "sqfpow/linquot.hpp"

namespace sqfpow {

// Ideal text format:
//   n <ambient>
//   1 3 5        one generator per line, 1-based variable indices
//   # comment
// Repeated indices on a line (exponent > 1) and empty generators are rejected.
SqfIdeal parse_ideal(std::istream& in);
SqfIdeal parse_ideal(std::string_view text);
/// Canonical text: generators in canonical order.
std::string format_ideal(const SqfIdeal& ideal);

// Graph text format:
//   n <count>
//   u v          one edge per line
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

/// complete:n, complete_bipartite:m,n, path:n, cycle:n, path_complement:n,
/// whiskered:a_1,...,a_s. Throws BadSpec.
Graph parse_family(std::string_view spec);
/// True if `spec` has the family shorthand form `name:args`.
bool looks_like_family(std::string_view spec);

/// Reads an ideal from a file path, a graph family shorthand (edge ideal) or
/// one of the ideal shorthands `veronese:n,d` and `counterexample`.
SqfIdeal load_ideal(const std::string& source);
/// Reads a graph from a file path or family shorthand.
Graph load_graph(const std::string& source);

/// The 7-generator ideal on 11 variables with nu = 3 and g(3) = 1.
SqfIdeal counterexample_ideal();

nlohmann::json to_json(const SqfIdeal& ideal);
nlohmann::json to_json(const BettiTable& table);
nlohmann::json to_json(const LinearQuotientsCert& cert);
nlohmann::json to_json(const FacetCover& cover, const CoverCheck& check);
nlohmann::json to_json(const DepthProfile& profile);
nlohmann::json to_json(const ScanReport& report);
nlohmann::json to_json(const Matching& matching);

/// Inverse of to_json(LinearQuotientsCert).
LinearQuotientsCert cert_from_json(const nlohmann::json& j);

}  // namespace sqfpow
