#pragma once

#include <cstdint>

#include "polyrank/matrix_polynomial.hpp"
#include "polyrank/types.hpp"

namespace polyrank {

/// Block convolution (Toeplitz) matrix T_k of P: the linear map taking the
/// coefficients of a degree-<=k vector polynomial x to the coefficients of
/// P*x.  Size (k+d+1)m x (k+1)n, block (p, j) = A_{p-j}.
ComplexMatrix convolutionMatrix(const MatrixPolynomial& p, int k);

/// Right minimal indices of P as an ascending multiset of n - normal_rank
/// integers, read off from the kernel dimensions nu_k = (k+1)n - rank T_k via
/// nu_k = sum_{eps_i <= k} (k - eps_i + 1).  The search stops once all
/// indices are found and aborts loudly (with a singular-value gap report) if
/// the kernel dimension profile is inconsistent or the hard stop
/// k = max(grade*rank, 1) is passed.
IndexList rightMinimalIndices(const MatrixPolynomial& p, const ToleranceProfile& tol,
                              std::uint64_t probeSeed = kDefaultProbeSeed);

/// Left minimal indices: right minimal indices of the coefficient-wise
/// transpose.
IndexList leftMinimalIndices(const MatrixPolynomial& p, const ToleranceProfile& tol,
                             std::uint64_t probeSeed = kDefaultProbeSeed);

/// Same as rightMinimalIndices with the normal rank already known (skips the
/// probing step).
IndexList rightMinimalIndicesWithRank(const MatrixPolynomial& p, int normalRank,
                                      const ToleranceProfile& tol);

}  // namespace polyrank
