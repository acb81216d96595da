#include "polyrank/realize.hpp"

#include <numeric>
#include <sstream>

#include "polyrank/random.hpp"
#include "polyrank/rank.hpp"

namespace polyrank {

std::vector<int> balancedComposition(int total, int parts, int maxPart) {
  if (parts < 1) throw std::invalid_argument("balancedComposition: need parts >= 1");
  if (total < 0 || total > parts * maxPart)
    throw std::invalid_argument("balancedComposition: total out of range");
  std::vector<int> out(static_cast<std::size_t>(parts), total / parts);
  for (int i = 0; i < total % parts; ++i) ++out[static_cast<std::size_t>(i)];
  return out;
}

namespace {

std::vector<int> validatedSplit(const GenericStructure& K,
                                const std::optional<std::vector<int>>& split) {
  const int sum = K.r * K.d - K.a;
  if (!split.has_value()) return balancedComposition(sum, K.r, K.d);
  const auto& s = *split;
  if (s.size() != static_cast<std::size_t>(K.r))
    throw std::invalid_argument("realize: split must have r entries");
  int got = 0;
  for (int v : s) {
    if (v < 0 || v > K.d) throw std::invalid_argument("realize: split entries must lie in [0, d]");
    got += v;
  }
  if (got != sum) {
    std::ostringstream os;
    os << "realize: split sums to " << got << ", expected rd - a = " << sum;
    throw std::invalid_argument(os.str());
  }
  return s;
}

}  // namespace

MatrixPolynomial realize(const GenericStructure& K, std::uint64_t seed, const ToleranceProfile& tol,
                         const std::optional<std::vector<int>>& split) {
  tol.validate();
  const std::vector<int> degrees = validatedSplit(K, split);
  std::string lastDiagnostic = "no attempt made";
  for (int attempt = 0; attempt < tol.maxRetry; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    const MatrixPolynomial P = randomBoundedRank(K.m, K.n, K.r, K.d, degrees, s);
    try {
      const StructureSignature sig = completeEigenstructure(P, tol, s ^ kDefaultProbeSeed);
      if (!matchesIndexOnlySignature(sig, K.signature)) {
        lastDiagnostic = "signature mismatch: got " + sig.toString();
        continue;
      }
      if (numericalRank(P.coeff(K.d), tol) != K.r) {
        lastDiagnostic = "leading coefficient rank != r (degree drop)";
        continue;
      }
      return P;
    } catch (const NumericalDiagnosticError& e) {
      lastDiagnostic = e.what();
    }
  }
  std::ostringstream os;
  os << "realize: no verified sample for a=" << K.a << " within " << tol.maxRetry
     << " attempts; last diagnostic: " << lastDiagnostic;
  throw NumericalDiagnosticError(os.str());
}

MatrixPolynomial realize(const FullRankStructure& K, std::uint64_t seed,
                         const ToleranceProfile& tol) {
  tol.validate();
  std::string lastDiagnostic = "no attempt made";
  for (int attempt = 0; attempt < tol.maxRetry; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    const MatrixPolynomial P = randomPolynomial(K.m, K.n, K.d, s);
    try {
      const StructureSignature sig = completeEigenstructure(P, tol, s ^ kDefaultProbeSeed);
      if (K.squareRegular) {
        // regular with all eigenvalue multiplicities (finite or infinite) one
        bool simple = sig.rank == K.n && sig.rightMinimalIndices.empty() &&
                      sig.leftMinimalIndices.empty();
        for (const auto& fe : sig.finiteStructure)
          for (int mlt : fe.multiplicities) simple = simple && mlt == 1;
        for (int g : sig.infiniteMultiplicities) simple = simple && g == 1;
        if (simple) return P;
        lastDiagnostic = "not simple-regular: got " + sig.toString();
        continue;
      }
      if (matchesIndexOnlySignature(sig, K.signature)) return P;
      lastDiagnostic = "signature mismatch: got " + sig.toString();
    } catch (const NumericalDiagnosticError& e) {
      lastDiagnostic = e.what();
    }
  }
  std::ostringstream os;
  os << "realize: no verified full-rank sample within " << tol.maxRetry
     << " attempts; last diagnostic: " << lastDiagnostic;
  throw NumericalDiagnosticError(os.str());
}

}  // namespace polyrank
