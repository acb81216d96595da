#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyrank/generic.hpp"
#include "polyrank/types.hpp"

namespace polyrank {

struct SweepConfig {
  int m = 0, n = 0, r = 0, d = 0;
  int trials = 100;
  std::uint64_t seed = 0;
  std::optional<std::vector<int>> split;  ///< factor column degrees; balanced for a = rd - sum by default
  bool fullRank = false;                  ///< sample dense full-rank polynomials instead
  ToleranceProfile tol;
};

struct SweepRow {
  int trial = 0;
  int aClassified = -1;  ///< -1: no generic structure matched (or analysis failed)
  IndexList right, left;
  long residualBalance = 0;
  bool analysisFailed = false;
};

/// Classification of `trials` random draws against the candidate generic
/// structures.  histogram counts matched structures by a; rows are kept in
/// trial order; failures holds one diagnostic string per failed analysis.
/// Conservation: sum(histogram) + unmatched + failures.size() == trials.
struct SweepReport {
  SweepConfig config;
  std::map<int, int> histogram;
  int unmatched = 0;
  std::vector<std::pair<int, std::string>> failures;  ///< (trial, message)
  std::vector<SweepRow> rows;
};

/// Per-trial seeds are seed + trial index, so any sub-range can be reproduced.
SweepReport runSweep(const SweepConfig& config);

std::string sweepCsv(const SweepReport& report);
nlohmann::json sweepJson(const SweepReport& report);

struct PerturbConfig {
  int m = 0, n = 0, d = 0;
  double delta = 1e-6;
  int trials = 50;
  std::uint64_t seed = 0;
  ToleranceProfile tol;
};

/// Companion recovery stress test: for each trial a unit-norm random
/// polynomial P, the perturbed pencil L = C(P) + delta*E with a unit-norm
/// random pencil E, and the recovered Ptilde.  maxRatio is the largest
/// d(C(P), C(Ptilde)) / d(C(P), L); the reference bound is 4d(1 + |P|_F).
struct PerturbReport {
  PerturbConfig config;
  double maxRatio = 0.0;
  double bound = 0.0;
  double threshold = 0.0;  ///< pi / (12 d^{3/2}); deltas at or above it are flagged
  bool deltaAboveThreshold = false;
  int pivotFailures = 0;
  std::vector<double> ratios;
};

PerturbReport runPerturb(const PerturbConfig& config);

nlohmann::json perturbJson(const PerturbReport& report);

}  // namespace polyrank
