#include "polyrank/reports.hpp"

#include <cmath>
#include <sstream>

#include "polyrank/random.hpp"
#include "polyrank/realize.hpp"
#include "polyrank/recovery.hpp"

namespace polyrank {

namespace {

/// index a of the matching bounded-rank structure, 0 for the full-rank
/// structure, or -1
int classify(const StructureSignature& sig, const std::vector<GenericStructure>& candidates) {
  for (const auto& K : candidates)
    if (matchesIndexOnlySignature(sig, K.signature)) return K.a;
  return -1;
}

}  // namespace

SweepReport runSweep(const SweepConfig& config) {
  config.tol.validate();
  if (config.trials < 1) throw std::invalid_argument("runSweep: trials must be positive");
  SweepReport report;
  report.config = config;

  std::vector<GenericStructure> candidates;
  FullRankStructure fullRank;
  std::vector<int> degrees;
  if (config.fullRank) {
    fullRank = genericFullRank(config.m, config.n, config.d);
  } else {
    candidates = genericStructures(config.m, config.n, config.r, config.d);
    const int sum = config.split.has_value()
                        ? 0  // validated below
                        : config.r * config.d;  // default split: all degrees d, a* = 0
    if (config.split.has_value()) {
      degrees = *config.split;
      if (degrees.size() != static_cast<std::size_t>(config.r))
        throw std::invalid_argument("runSweep: split must have r entries");
      int got = 0;
      for (int v : degrees) {
        if (v < 0 || v > config.d)
          throw std::invalid_argument("runSweep: split entries must lie in [0, d]");
        got += v;
      }
      if (got > config.r * config.d)
        throw std::invalid_argument("runSweep: split sum exceeds rd");
    } else {
      degrees = balancedComposition(sum, config.r, config.d);
    }
  }

  for (int trial = 0; trial < config.trials; ++trial) {
    const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(trial);
    SweepRow row;
    row.trial = trial;
    try {
      const MatrixPolynomial P =
          config.fullRank
              ? randomPolynomial(config.m, config.n, config.d, seed)
              : randomBoundedRank(config.m, config.n, config.r, config.d, degrees, seed);
      const StructureSignature sig = completeEigenstructure(P, config.tol, seed ^ kDefaultProbeSeed);
      row.right = sig.rightMinimalIndices;
      row.left = sig.leftMinimalIndices;
      row.residualBalance = static_cast<long>(sig.rank) * sig.grade - sig.indexSum();
      if (config.fullRank) {
        bool ok;
        if (fullRank.squareRegular) {
          ok = sig.rank == config.n && sig.rightMinimalIndices.empty() &&
               sig.leftMinimalIndices.empty();
          for (const auto& fe : sig.finiteStructure)
            for (int mlt : fe.multiplicities) ok = ok && mlt == 1;
          for (int g : sig.infiniteMultiplicities) ok = ok && g == 1;
        } else {
          ok = matchesIndexOnlySignature(sig, fullRank.signature);
        }
        row.aClassified = ok ? 0 : -1;
      } else {
        row.aClassified = classify(sig, candidates);
      }
      if (row.aClassified >= 0)
        ++report.histogram[row.aClassified];
      else
        ++report.unmatched;
    } catch (const NumericalDiagnosticError& e) {
      row.analysisFailed = true;
      report.failures.emplace_back(trial, e.what());
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string sweepCsv(const SweepReport& report) {
  std::ostringstream os;
  os << "trial,a_classified,right_indices,left_indices,residual_balance\n";
  for (const auto& row : report.rows) {
    os << row.trial << "," << row.aClassified << ",";
    for (std::size_t i = 0; i < row.right.size(); ++i) {
      if (i) os << ";";
      os << row.right[i];
    }
    os << ",";
    for (std::size_t i = 0; i < row.left.size(); ++i) {
      if (i) os << ";";
      os << row.left[i];
    }
    os << "," << row.residualBalance << "\n";
  }
  return os.str();
}

nlohmann::json sweepJson(const SweepReport& report) {
  nlohmann::json parameters{{"m", report.config.m},     {"n", report.config.n},
                            {"r", report.config.r},     {"d", report.config.d},
                            {"trials", report.config.trials},
                            {"seed", report.config.seed},
                            {"full_rank", report.config.fullRank}};
  if (report.config.split.has_value()) parameters["split"] = *report.config.split;
  nlohmann::json histogram = nlohmann::json::object();
  for (const auto& [a, count] : report.histogram) histogram[std::to_string(a)] = count;
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& [trial, message] : report.failures)
    failures.push_back({{"trial", trial}, {"message", message}});
  return nlohmann::json{{"parameters", std::move(parameters)},
                        {"histogram", std::move(histogram)},
                        {"unmatched", report.unmatched},
                        {"failures", std::move(failures)}};
}

PerturbReport runPerturb(const PerturbConfig& config) {
  config.tol.validate();
  if (config.trials < 1) throw std::invalid_argument("runPerturb: trials must be positive");
  if (config.d < 1) throw std::invalid_argument("runPerturb: grade must be >= 1");
  if (config.delta < 0.0) throw std::invalid_argument("runPerturb: delta must be >= 0");
  PerturbReport report;
  report.config = config;
  report.threshold = 3.14159265358979323846 / (12.0 * std::pow(config.d, 1.5));
  report.deltaAboveThreshold = config.delta >= report.threshold;
  report.bound = 4.0 * config.d * 2.0;  // 4d(1 + |P|_F) at |P|_F = 1

  for (int trial = 0; trial < config.trials; ++trial) {
    const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(trial);
    MatrixPolynomial P = randomPolynomial(config.m, config.n, config.d, seed);
    P = scaled(P, Complex(1.0 / frobeniusNorm(P), 0.0));
    const CompanionPencil comp = firstCompanion(P);
    auto rng = makeRng(seed ^ 0xa3c59ac2ed904b4dULL);
    const Pencil E = randomUnitNormPencil(comp.pencil().rows(), comp.pencil().cols(), rng);
    const Pencil L(comp.pencil().lambdaPart() + config.delta * E.lambdaPart(),
                   comp.pencil().constantPart() + config.delta * E.constantPart());
    try {
      const MatrixPolynomial Ptilde =
          companionRecovery(L, config.m, config.n, config.d, config.tol);
      // companion embedding is an isometry, so compare coefficients directly
      const double ratio = config.delta > 0.0 ? distance(P, Ptilde) / config.delta : 0.0;
      report.ratios.push_back(ratio);
      report.maxRatio = std::max(report.maxRatio, ratio);
    } catch (const PivotError&) {
      ++report.pivotFailures;
      report.ratios.push_back(std::nan(""));
    }
  }
  return report;
}

nlohmann::json perturbJson(const PerturbReport& report) {
  return nlohmann::json{{"parameters",
                         {{"m", report.config.m},
                          {"n", report.config.n},
                          {"d", report.config.d},
                          {"delta", report.config.delta},
                          {"trials", report.config.trials},
                          {"seed", report.config.seed}}},
                        {"max_ratio", report.maxRatio},
                        {"bound", report.bound},
                        {"threshold", report.threshold},
                        {"delta_above_threshold", report.deltaAboveThreshold},
                        {"pivot_failures", report.pivotFailures}};
}

}  // namespace polyrank
