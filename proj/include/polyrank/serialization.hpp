#pragma once

#include <string>

#include <json.hpp>

#include "polyrank/eigenstructure.hpp"
#include "polyrank/generic.hpp"
#include "polyrank/matrix_polynomial.hpp"
#include "polyrank/types.hpp"

namespace polyrank {

/// Polynomial wire format (bit-exact contract):
///   { "m": int, "n": int, "grade": int,
///     "coeffs": [grade+1][m][n] entries [re, im] in ascending power order }
nlohmann::json toJson(const MatrixPolynomial& p);
MatrixPolynomial polynomialFromJson(const nlohmann::json& j);

/// Signature wire format: { "rank", "right", "left",
///   "finite": [ { "eig": [re, im], "mults": [...] } ... ], "infinite" }
/// with all multisets ascending and finite eigenvalues sorted by (re, im).
nlohmann::json toJson(const StructureSignature& sig);
StructureSignature signatureFromJson(const nlohmann::json& j);

/// Signature JSON extended with "a", "alpha", "s", "beta", "t", "codim".
nlohmann::json toJson(const GenericStructure& K);

nlohmann::json toJson(const FullRankStructure& K);

MatrixPolynomial readPolynomialFile(const std::string& path);
void writeTextFile(const std::string& path, const std::string& text);

}  // namespace polyrank
