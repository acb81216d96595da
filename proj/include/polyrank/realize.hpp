#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polyrank/generic.hpp"
#include "polyrank/matrix_polynomial.hpp"
#include "polyrank/types.hpp"

namespace polyrank {

/// Composition of total into `parts` summands, each <= maxPart, as balanced
/// as possible (descending).
std::vector<int> balancedComposition(int total, int parts, int maxPart);

/// Concrete polynomial carrying the generic structure K, produced as a rank-r
/// factor product with factor column degrees delta summing to rd - a
/// (balanced by default; any admissible composition can be supplied).  Each
/// candidate is verified by a full eigenstructure analysis plus a leading
/// coefficient rank check (degree exactly d); up to tol.maxRetry attempts
/// with derived seeds are made before NumericalDiagnosticError is raised.
MatrixPolynomial realize(const GenericStructure& K, std::uint64_t seed, const ToleranceProfile& tol,
                         const std::optional<std::vector<int>>& split = std::nullopt);

/// Full-rank realization: a dense Gaussian polynomial, verified against the
/// full-rank structure (or, for square shapes, against regularity with all
/// eigenvalue multiplicities equal to one).
MatrixPolynomial realize(const FullRankStructure& K, std::uint64_t seed, const ToleranceProfile& tol);

}  // namespace polyrank
