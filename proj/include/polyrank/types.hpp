#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace polyrank {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Ascending multiset of integer indices (minimal indices, multiplicities, ...).
using IndexList = std::vector<int>;

/// Knobs shared by every rank decision inside a single analysis.  One profile
/// per analysis; mixing profiles across the stages of one computation is a bug.
struct ToleranceProfile {
  double relRankTol = 1e-8;  ///< singular values below relRankTol * sigma_max count as zero
  int probeCount = 5;        ///< random evaluation points for normal-rank probing
  int maxRetry = 3;          ///< retry budget for randomized realization

  void validate() const {
    if (relRankTol <= 0.0 || probeCount <= 0 || maxRetry <= 0)
      throw std::invalid_argument("ToleranceProfile: all fields must be positive");
  }
};

/// A tolerance-based decision came out internally inconsistent (non-monotone
/// kernel growth, failed index-sum balance, defective bordering, ...).
/// The message carries the diagnostic data; nothing is silently repaired.
class NumericalDiagnosticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Companion recovery hit a numerically singular pivot block.
class PivotError : public NumericalDiagnosticError {
 public:
  using NumericalDiagnosticError::NumericalDiagnosticError;
};

/// Malformed serialized input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default seed for probe/bordering RNG when the caller does not supply one.
inline constexpr std::uint64_t kDefaultProbeSeed = 0x9e3779b97f4a7c15ULL;

inline std::string indexListToString(const IndexList& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  out += "}";
  return out;
}

}  // namespace polyrank
