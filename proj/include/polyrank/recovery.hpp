#pragma once

#include "polyrank/matrix_polynomial.hpp"
#include "polyrank/pencil.hpp"
#include "polyrank/types.hpp"

namespace polyrank {

/// Given a pencil L of the first-companion shape (m + n(d-1)) x nd that is
/// close to some first companion form, produce a polynomial Ptilde whose
/// first companion form is strictly equivalent to L.
///
/// The lower (d-1)n rows of an exact companion pencil form the shift spine
/// lambda*[0 | I] + [-I | 0], whose degree-(d-1) polynomial kernel has
/// dimension exactly n; that property is open, so it persists under small
/// perturbations.  The kernel is computed from the spine's convolution
/// matrix, normalized so that the exact case maps to the identity, and yields
/// a constant strict equivalence restoring the spine exactly; one block row
/// operation then clears the top lambda-blocks and the coefficients of
/// Ptilde are read off.  When L is exactly a companion form the input
/// polynomial is returned (up to roundoff).
///
/// Throws PivotError when a pivot block of the elimination (kernel dimension,
/// normalization block, or spine Gram factor) is numerically singular.
MatrixPolynomial companionRecovery(const Pencil& L, int m, int n, int d,
                                   const ToleranceProfile& tol);

}  // namespace polyrank
