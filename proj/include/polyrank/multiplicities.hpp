#pragma once

#include <cstdint>

#include "polyrank/matrix_polynomial.hpp"
#include "polyrank/types.hpp"

namespace polyrank {

/// Scaled Taylor coefficient P^(order)(z0) / order! of the polynomial at z0.
ComplexMatrix taylorCoefficient(const MatrixPolynomial& p, Complex z0, int order);

/// Lower-triangular block Toeplitz matrix of the first `depth` Taylor
/// coefficients at z0: block (i, j) = P^(i-j)(z0)/(i-j)! for i >= j.
/// Size depth*m x depth*n.
ComplexMatrix taylorToeplitz(const MatrixPolynomial& p, Complex z0, int depth);

/// Partial multiplicities of P at the finite point z0, ascending; empty when
/// z0 is not an eigenvalue.  dim ker of the depth-k Toeplitz block equals
/// k*(n - r) + sum_j min(delta_j, k), so after subtracting the k*(n - r)
/// contribution of the singular part the kernel increments give the number of
/// multiplicities >= k; the conjugate partition of those counts is returned.
/// Non-monotone increments raise NumericalDiagnosticError with the
/// singular-value gaps.
IndexList partialMultiplicitiesAt(const MatrixPolynomial& p, Complex z0,
                                  const ToleranceProfile& tol,
                                  std::uint64_t probeSeed = kDefaultProbeSeed);

/// Same with the normal rank already known.
IndexList partialMultiplicitiesAtWithRank(const MatrixPolynomial& p, Complex z0,
                                          int normalRank, const ToleranceProfile& tol);

/// Multiplicities of the eigenvalue at infinity relative to the stored grade:
/// the partial multiplicities of the grade-reversal at 0.
IndexList infiniteMultiplicities(const MatrixPolynomial& p, const ToleranceProfile& tol,
                                 std::uint64_t probeSeed = kDefaultProbeSeed);

}  // namespace polyrank
