#include "polyrank/random.hpp"

#include <Eigen/QR>
#include <cmath>

namespace polyrank {

MatrixPolynomial randomPolynomial(int rows, int cols, int grade, std::uint64_t seed) {
  if (rows < 1 || cols < 1 || grade < 0)
    throw std::invalid_argument("randomPolynomial: bad shape");
  auto rng = makeRng(seed);
  std::vector<ComplexMatrix> coeffs;
  coeffs.reserve(static_cast<std::size_t>(grade) + 1);
  for (int i = 0; i <= grade; ++i) coeffs.push_back(randomGaussianMatrix(rows, cols, rng));
  return MatrixPolynomial(rows, cols, grade, std::move(coeffs));
}

MatrixPolynomial randomBoundedRank(int rows, int cols, int rank, int grade,
                                   const std::vector<int>& colDegrees, std::uint64_t seed) {
  if (rows < 1 || cols < 1 || grade < 0)
    throw std::invalid_argument("randomBoundedRank: bad shape");
  if (rank < 1 || rank > std::min(rows, cols))
    throw std::invalid_argument("randomBoundedRank: rank out of range");
  if (colDegrees.size() != static_cast<std::size_t>(rank))
    throw std::invalid_argument("randomBoundedRank: need one column degree per factor column");
  for (int deg : colDegrees)
    if (deg < 0 || deg > grade)
      throw std::invalid_argument("randomBoundedRank: column degree out of [0, grade]");

  auto rng = makeRng(seed);
  // column j of E has grade colDegrees[j]; row j of F has grade d - colDegrees[j]
  std::vector<std::vector<ComplexVector>> eCols(static_cast<std::size_t>(rank));
  std::vector<std::vector<ComplexVector>> fRows(static_cast<std::size_t>(rank));
  for (int j = 0; j < rank; ++j) {
    const int de = colDegrees[static_cast<std::size_t>(j)];
    const int df = grade - de;
    for (int i = 0; i <= de; ++i)
      eCols[static_cast<std::size_t>(j)].push_back(randomGaussianMatrix(rows, 1, rng).col(0));
    for (int i = 0; i <= df; ++i)
      fRows[static_cast<std::size_t>(j)].push_back(randomGaussianMatrix(cols, 1, rng).col(0));
  }

  std::vector<ComplexMatrix> coeffs(static_cast<std::size_t>(grade) + 1,
                                    ComplexMatrix::Zero(rows, cols));
  for (int j = 0; j < rank; ++j) {
    const auto& e = eCols[static_cast<std::size_t>(j)];
    const auto& f = fRows[static_cast<std::size_t>(j)];
    for (std::size_t ie = 0; ie < e.size(); ++ie)
      for (std::size_t jf = 0; jf < f.size(); ++jf)
        coeffs[ie + jf] += e[ie] * f[jf].transpose();
  }
  return MatrixPolynomial(rows, cols, grade, std::move(coeffs));
}

ComplexMatrix randomUnitary(Eigen::Index size, std::mt19937_64& rng) {
  ComplexMatrix G = randomGaussianMatrix(size, size, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(G);
  ComplexMatrix Q = qr.householderQ();
  return Q;
}

ComplexMatrix randomWellConditioned(Eigen::Index size, double condition, std::mt19937_64& rng) {
  if (condition < 1.0) throw std::invalid_argument("randomWellConditioned: condition < 1");
  ComplexMatrix U = randomUnitary(size, rng);
  ComplexMatrix V = randomUnitary(size, rng);
  RealVector sv(size);
  for (Eigen::Index i = 0; i < size; ++i) {
    const double t = size > 1 ? static_cast<double>(i) / static_cast<double>(size - 1) : 0.0;
    sv(i) = std::pow(condition, -t);
  }
  return U * sv.asDiagonal() * V.adjoint();
}

Pencil randomUnitNormPencil(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  ComplexMatrix A = randomGaussianMatrix(rows, cols, rng);
  ComplexMatrix B = randomGaussianMatrix(rows, cols, rng);
  const double norm = std::sqrt(A.squaredNorm() + B.squaredNorm());
  if (norm > 0.0) {
    A /= norm;
    B /= norm;
  }
  return Pencil(std::move(A), std::move(B));
}

}  // namespace polyrank
