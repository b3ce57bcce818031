#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqfpow/graph.hpp"
#include "sqfpow/homology.hpp"
#include "sqfpow/ideal.hpp"
#include "sqfpow/linquot.hpp"

namespace sqfpow {

enum class DepthMethod { LinearQuotients, Homology };

struct ProfileRow {
  int k = 0;
  int min_degree = 0;  ///< d_k
  std::size_t generators = 0;
  int depth = 0;
  int g = 0;  ///< depth - (d_k - 1)
  DepthMethod method = DepthMethod::Homology;
};

/// Normalized depth function of I over k = 1..nu(I).
struct DepthProfile {
  std::string descriptor;
  int ambient = 0;
  Field field;
  std::vector<ProfileRow> rows;

  std::vector<int> g_values() const;
  std::vector<int> depths() const;
};

struct ProfileOptions {
  HochsterOptions hochster;
  /// Try the linear quotients formula before the homology engine.
  bool use_linear_quotients = true;
  /// Run the homology engine too whenever a certificate was found and throw
  /// CheckFailed if the two depths differ.
  bool cross_check = false;
  SearchLimits linquot_limits{.max_nodes = 20000, .deadline = std::nullopt};
};

/// Throws ZeroIdeal and BudgetExceeded.
DepthProfile profile(const SqfIdeal& ideal, const Field& field, const ProfileOptions& options = {},
                     std::string descriptor = {});

/// g_1 >= g_2 >= ... (vacuously true for empty input).
bool check_nonincreasing(std::span<const int> g);

/// Smallest t with g_k = 0 for all k >= t, or nothing when g ends nonzero.
std::optional<int> zero_tail_start(std::span<const int> g);

// -- corpora ------------------------------------------------------------------

struct CorpusEntry {
  std::string name;
  SqfIdeal ideal;
};

/// Every graph on exactly n vertices without isolated vertices, one per
/// isomorphism class when `dedup` is set. Limited to n <= 7.
std::vector<Graph> graphs_without_isolated_vertices(int n, bool dedup = true);

/// Uniform labelled graphs on n vertices with edge probability 1/2, rejected
/// until no vertex is isolated. Reproducible from `seed`.
std::vector<Graph> random_graphs(int n, std::size_t count, std::uint64_t seed);

/// "n6:e12:1-2,1-3,..." style name used in reports.
std::string graph_name(const Graph& g);

struct ScanViolation {
  std::string name;
  std::vector<int> g;
  std::string ideal_text;  ///< replayable input file
};

struct ScanFailure {
  std::string name;
  std::string error;
};

struct ScanReport {
  std::string corpus;
  std::size_t instances = 0;
  std::vector<ScanViolation> violations;  ///< non-monotone g, sorted by name
  std::vector<ScanFailure> failures;      ///< per-instance errors, sorted by name
  /// Instances whose g vanishes exactly from some t on, with that t.
  std::vector<std::pair<std::string, int>> tail_zero;
  std::vector<DepthProfile> profiles;  ///< sorted by descriptor
  double seconds = 0;
};

/// Profiles every entry (in parallel across entries). Per-entry errors are
/// recorded and the scan goes on; all lists come back sorted by name.
ScanReport scan(std::span<const CorpusEntry> corpus, const Field& field, const ProfileOptions& options = {},
                std::string corpus_name = {});

}  // namespace sqfpow
