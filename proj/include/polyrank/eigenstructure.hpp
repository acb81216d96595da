#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyrank/matrix_polynomial.hpp"
#include "polyrank/pencil.hpp"
#include "polyrank/types.hpp"

namespace polyrank {

/// One finite eigenvalue with its ascending partial multiplicities.
struct FiniteEigenvalue {
  Complex value{};
  IndexList multiplicities;
};

/// Complete eigenstructure of a matrix polynomial at its stored grade:
/// normal rank, right/left minimal indices, finite elementary divisor data
/// and the multiplicities at infinity.  Multisets are kept ascending and the
/// finite eigenvalues sorted lexicographically by (re, im).
struct StructureSignature {
  int m = 0, n = 0, grade = 0;
  int rank = 0;
  IndexList rightMinimalIndices;
  IndexList leftMinimalIndices;
  std::vector<FiniteEigenvalue> finiteStructure;
  IndexList infiniteMultiplicities;

  void canonicalize();
  /// sum of minimal indices plus all finite and infinite multiplicities
  long indexSum() const;
  bool hasElementaryDivisors() const {
    return !finiteStructure.empty() || !infiniteMultiplicities.empty();
  }
  std::string toString() const;
};

/// Equality of the discrete data (rank, index multisets, multiplicity
/// multisets) with finite eigenvalues paired up to eigTol in absolute value.
bool signaturesMatch(const StructureSignature& a, const StructureSignature& b,
                     double eigTol = 1e-6);

/// Equality of rank and minimal index multisets with both divisor parts empty.
bool matchesIndexOnlySignature(const StructureSignature& computed,
                               const StructureSignature& target);

/// Full analysis of one polynomial under a single tolerance profile:
/// normal rank by probing, minimal indices from convolution matrices,
/// infinite multiplicities from the grade reversal, and finite eigenvalues
/// located by bordering the first companion pencil to a square regular pencil
/// whose generalized eigenvalues serve as candidates; every candidate cluster
/// is validated through the local multiplicity computation, so spurious
/// candidates are discarded.  The index-sum identity
///   sum eps + sum eta + sum delta + sum gamma = rank * grade
/// is asserted at the end and a violation raises NumericalDiagnosticError
/// carrying the partial results.
StructureSignature completeEigenstructure(const MatrixPolynomial& p, const ToleranceProfile& tol,
                                          std::uint64_t probeSeed = kDefaultProbeSeed);

}  // namespace polyrank
