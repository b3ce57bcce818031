#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <vector>

#include "sqfpow/graph.hpp"
#include "sqfpow/ideal.hpp"

namespace sqfpow {

/// Linear quotients order u_1..u_s of G(I) together with
/// r_i = number of variables generating (u_1..u_{i-1}) : u_i.
/// By convention r[0] = 0 (the colon by the empty prefix is the zero ideal).
struct LinearQuotientsCert {
  int ambient = 0;
  std::vector<VarSet> ordering;
  std::vector<int> r;
};

/// Bounds for the factorial-worst-case order search. Exceeding either
/// throws Timeout.
struct SearchLimits {
  std::size_t max_nodes = 0;  ///< 0 = unlimited
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Minimal generators of (prefix) : u, i.e. minimalized {w \ u : w in prefix}.
/// The empty set stands for the unit ideal (u already in the prefix ideal).
std::vector<VarSet> colon_generators(std::span<const VarSet> prefix, VarSet u);

/// Certificate for a given order of G(I), or nothing if some colon is not
/// generated by variables. Throws InvalidCertificate if `order` is not a
/// permutation of G(I).
std::optional<LinearQuotientsCert> certify_order(const SqfIdeal& ideal, std::span<const VarSet> order);

/// Backtracking over orders. Whether a generator may come next depends only
/// on the set already placed, so dead sets are memoized. Deterministic.
/// Throws ZeroIdeal.
std::optional<LinearQuotientsCert> find_linear_quotients(const SqfIdeal& ideal, const SearchLimits& limits = {});

/// G(I) in decreasing lexicographic order (x_1 > x_2 > ... > x_n).
std::vector<VarSet> lex_order(const SqfIdeal& ideal);

/// n - max(r_2..r_s) - 1. Throws SingleGenerator when s = 1 (no r_i to
/// take a maximum over; callers fall back to the homology engine).
int depth_from_linear_quotients(const LinearQuotientsCert& cert);

/// Basis exchange on G(I). Throws MixedDegrees unless generated in one degree.
bool is_matroidal(const SqfIdeal& ideal);

/// Exchange property on exponent vectors: for u, v in G(I) and u_i > v_i there
/// is j with u_j < v_j and x_j u / x_i in I. Throws MixedDegrees.
bool is_polymatroidal(const MonomialIdeal& ideal);

/// Linear quotients search for a monomial ideal with exponents.
std::optional<std::vector<Exponents>> find_linear_quotients(const MonomialIdeal& ideal,
                                                            const SearchLimits& limits = {});

enum class PreservedProperty { LinearQuotients, Matroidal };

struct PreservationReport {
  PreservedProperty property;
  SqfIdeal squarefree_part;
  /// Present for LinearQuotients: order on the input / on the squarefree part.
  std::optional<std::vector<Exponents>> input_order;
  std::optional<LinearQuotientsCert> output_cert;
  bool output_verified = false;
};

/// Checks that the property of `ideal` survives in its squarefree part.
/// Throws PropertyNotVerified if the input itself lacks the property.
PreservationReport squarefree_part_preserves(const MonomialIdeal& ideal, PreservedProperty property,
                                             const SearchLimits& limits = {});

/// Exchange witness behind g_{I(G)}(k) = 0 for a linear quotients order.
struct MindepthWitness {
  struct Exchange {
    int vertex = 0;  ///< t outside V(M)
    int index = 0;   ///< 1-based j < i with supp(u_j) inside V(M) u {t}
    Matching matching;
  };

  int index = 0;  ///< 1-based i
  VarSet support;
  Matching matching;
  std::vector<Exchange> exchanges;
};

/// Smallest i such that every t outside supp(u_i) has some j < i with
/// supp(u_j) inside supp(u_i) u {t}. Indices start at 2 except for a single
/// generator, where i = 1 is admitted (the condition then needs supp(u_1) = V).
/// Throws InvalidCertificate if `cert` does not certify I(G)^[k].
std::optional<MindepthWitness> mindepth_criterion(const Graph& g, int k, const LinearQuotientsCert& cert);

}  // namespace sqfpow
