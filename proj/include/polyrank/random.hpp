#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "polyrank/matrix_polynomial.hpp"
#include "polyrank/pencil.hpp"
#include "polyrank/types.hpp"

namespace polyrank {

inline std::mt19937_64 makeRng(std::uint64_t seed) { return std::mt19937_64(seed); }

/// Standard complex Gaussian: real and imaginary parts N(0, 1/2), so
/// E|z|^2 = 1.
inline Complex standardComplexGaussian(std::mt19937_64& rng) {
  static constexpr double kHalfVar = 0.7071067811865476;  // 1/sqrt(2)
  std::normal_distribution<double> d(0.0, kHalfVar);
  return Complex(d(rng), d(rng));
}

inline ComplexMatrix randomGaussianMatrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  ComplexMatrix M(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) M(i, j) = standardComplexGaussian(rng);
  return M;
}

inline Complex randomUnitModulus(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * 3.14159265358979323846);
  const double t = u(rng);
  return Complex(std::cos(t), std::sin(t));
}

/// Dense polynomial with iid standard complex Gaussian coefficient entries.
MatrixPolynomial randomPolynomial(int rows, int cols, int grade, std::uint64_t seed);

/// Product E(lambda) * F(lambda) of an m x r factor whose column j has grade
/// colDegrees[j] and an r x n factor whose row j has grade d - colDegrees[j].
/// All factor coefficients are iid standard complex Gaussian, so the result
/// has normal rank r with probability one and grade (at most) d.
MatrixPolynomial randomBoundedRank(int rows, int cols, int rank, int grade,
                                   const std::vector<int>& colDegrees, std::uint64_t seed);

/// Haar-ish unitary via QR of a Gaussian matrix.
ComplexMatrix randomUnitary(Eigen::Index size, std::mt19937_64& rng);

/// Random invertible matrix with condition number exactly condition:
/// U * diag(geometric from 1 to 1/condition) * V^*.
ComplexMatrix randomWellConditioned(Eigen::Index size, double condition, std::mt19937_64& rng);

/// Dense random pencil with unit Frobenius norm over the concatenated parts.
Pencil randomUnitNormPencil(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng);

}  // namespace polyrank
