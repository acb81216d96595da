#pragma once

#include <cstdint>

#include "polyrank/matrix_polynomial.hpp"
#include "polyrank/types.hpp"

namespace polyrank {

/// Singular values of a dense complex matrix, descending.
RealVector singularValues(const ComplexMatrix& M);

/// Number of singular values above relRankTol * sigma_max.  Zero matrices
/// (and empty ones) have rank 0.
int numericalRank(const ComplexMatrix& M, const ToleranceProfile& tol);

/// Rank of P(lambda) over the rational functions, probed as the maximum of
/// numericalRank(P(z)) over probeCount random unit-modulus points z.
int normalRank(const MatrixPolynomial& p, const ToleranceProfile& tol,
               std::uint64_t probeSeed = kDefaultProbeSeed);

}  // namespace polyrank
