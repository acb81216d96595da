#include "polyrank/pencil.hpp"

namespace polyrank {

namespace {

bool isExactly(const ComplexMatrix& block, const ComplexMatrix& expected) {
  return block == expected;
}

}  // namespace

bool hasExactCompanionPattern(const CompanionPencil& c) {
  const int m = c.sourceRows(), n = c.sourceCols(), d = c.sourceGrade();
  const ComplexMatrix& A = c.pencil().lambdaPart();
  const ComplexMatrix& B = c.pencil().constantPart();
  if (c.form() == CompanionForm::First) {
    if (A.rows() != m + n * (d - 1) || A.cols() != n * d) return false;
    // lambda part: zero outside the top-left m x n block and the identities
    if (!A.block(0, n, m, n * (d - 1)).isZero(0.0)) return false;
    if (d > 1) {
      const auto lower = A.bottomRows(n * (d - 1));
      if (!lower.leftCols(n).isZero(0.0)) return false;
      if (!isExactly(lower.rightCols(n * (d - 1)),
                     ComplexMatrix::Identity(n * (d - 1), n * (d - 1))))
        return false;
      // constant part below the top row: -I spine, zero last block column
      const auto lowerB = B.bottomRows(n * (d - 1));
      if (!isExactly(lowerB.leftCols(n * (d - 1)),
                     -ComplexMatrix::Identity(n * (d - 1), n * (d - 1))))
        return false;
      if (!lowerB.rightCols(n).isZero(0.0)) return false;
    }
    return true;
  }
  if (A.rows() != m * d || A.cols() != n + m * (d - 1)) return false;
  if (!A.block(m, 0, m * (d - 1), n).isZero(0.0)) return false;
  if (d > 1) {
    const auto right = A.rightCols(m * (d - 1));
    if (!right.topRows(m).isZero(0.0)) return false;
    if (!isExactly(right.bottomRows(m * (d - 1)),
                   ComplexMatrix::Identity(m * (d - 1), m * (d - 1))))
      return false;
    const auto rightB = B.rightCols(m * (d - 1));
    if (!isExactly(rightB.topRows(m * (d - 1)),
                   -ComplexMatrix::Identity(m * (d - 1), m * (d - 1))))
      return false;
    if (!rightB.bottomRows(m).isZero(0.0)) return false;
  }
  return true;
}

MatrixPolynomial polynomialFromCompanion(const CompanionPencil& c) {
  const int m = c.sourceRows(), n = c.sourceCols(), d = c.sourceGrade();
  const ComplexMatrix& A = c.pencil().lambdaPart();
  const ComplexMatrix& B = c.pencil().constantPart();
  std::vector<ComplexMatrix> coeffs(static_cast<std::size_t>(d) + 1);
  if (c.form() == CompanionForm::First) {
    coeffs[static_cast<std::size_t>(d)] = A.topLeftCorner(m, n);
    for (int j = 0; j < d; ++j)
      coeffs[static_cast<std::size_t>(d - 1 - j)] = B.block(0, j * n, m, n);
  } else {
    coeffs[static_cast<std::size_t>(d)] = A.topLeftCorner(m, n);
    for (int i = 0; i < d; ++i)
      coeffs[static_cast<std::size_t>(d - 1 - i)] = B.block(i * m, 0, m, n);
  }
  return MatrixPolynomial(m, n, d, std::move(coeffs));
}

}  // namespace polyrank
