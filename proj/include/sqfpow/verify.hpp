#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sqfpow/homology.hpp"
#include "sqfpow/rank.hpp"

namespace sqfpow {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Set when the check surfaced something for human review (a monotonicity
  /// violation, a field disagreement) without counting as a failure.
  bool finding = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  Field field = Field::rational();
  HochsterOptions hochster;
  /// Criteria to run; empty means all 14.
  std::set<int> only;
  std::uint64_t seed = 20241015;
};

struct VerifyReport {
  Field field;
  std::vector<CriterionResult> results;
  bool all_passed() const;
};

/// Named integer observations (ranks, depths, g values) keyed by instance.
using Observations = std::map<std::string, long long>;

/// Runs the acceptance criteria. Per-criterion errors (BudgetExceeded and the
/// like) are caught and reported as that criterion's failure.
VerifyReport verify_paper(const VerifyOptions& options = {});

/// Observations behind criteria 1 to 6 over `field`; criterion 14 compares
/// two of these maps.
Observations reference_observations(const Field& field, const HochsterOptions& hochster = {});

/// Lines of the form "PASS  3  name  detail".
std::string format_report(const VerifyReport& report);

}  // namespace sqfpow
