#pragma once

#include <utility>

#include "polyrank/matrix_polynomial.hpp"
#include "polyrank/types.hpp"

namespace polyrank {

/// Linear pencil lambda*A + B held as the pair (A, B).
class Pencil {
 public:
  Pencil(ComplexMatrix lambdaPart, ComplexMatrix constantPart)
      : lambdaPart_(std::move(lambdaPart)), constantPart_(std::move(constantPart)) {
    if (lambdaPart_.rows() != constantPart_.rows() || lambdaPart_.cols() != constantPart_.cols())
      throw std::invalid_argument("Pencil: parts must share shape");
  }

  Eigen::Index rows() const { return lambdaPart_.rows(); }
  Eigen::Index cols() const { return lambdaPart_.cols(); }

  const ComplexMatrix& lambdaPart() const { return lambdaPart_; }
  const ComplexMatrix& constantPart() const { return constantPart_; }

  ComplexMatrix eval(Complex z) const { return z * lambdaPart_ + constantPart_; }

  /// The same pencil as a grade-1 matrix polynomial (A_0 = constant part,
  /// A_1 = lambda part).  Requires positive dimensions.
  MatrixPolynomial asPolynomial() const {
    return MatrixPolynomial(static_cast<int>(rows()), static_cast<int>(cols()), 1,
                            {constantPart_, lambdaPart_});
  }

 private:
  ComplexMatrix lambdaPart_, constantPart_;
};

inline double pencilDistance(const Pencil& a, const Pencil& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("pencilDistance: shape mismatch");
  return std::sqrt((a.lambdaPart() - b.lambdaPart()).squaredNorm() +
                   (a.constantPart() - b.constantPart()).squaredNorm());
}

enum class CompanionForm { First, Second };

/// A companion linearization together with the shape of the polynomial it was
/// built from, so the block pattern can be checked and inverted.
class CompanionPencil {
 public:
  CompanionPencil(Pencil pencil, CompanionForm form, int sourceRows, int sourceCols, int sourceGrade)
      : pencil_(std::move(pencil)),
        form_(form),
        sourceRows_(sourceRows),
        sourceCols_(sourceCols),
        sourceGrade_(sourceGrade) {}

  const Pencil& pencil() const { return pencil_; }
  CompanionForm form() const { return form_; }
  int sourceRows() const { return sourceRows_; }
  int sourceCols() const { return sourceCols_; }
  int sourceGrade() const { return sourceGrade_; }

 private:
  Pencil pencil_;
  CompanionForm form_;
  int sourceRows_, sourceCols_, sourceGrade_;
};

/// First companion form of a grade-d polynomial (d >= 1):
///
///   lambda * diag(A_d, I_n, ..., I_n)
///     + [ A_{d-1}  A_{d-2} ...  A_0 ]
///       [  -I_n      0    ...   0  ]
///       [            ...            ]
///       [   0      ...   -I_n   0  ]
///
/// of size (m + n(d-1)) x nd.  For d = 1 this is lambda*A_1 + A_0 itself.
inline CompanionPencil firstCompanion(const MatrixPolynomial& p) {
  if (p.grade() < 1) throw std::invalid_argument("firstCompanion: grade must be >= 1");
  const int m = p.rows(), n = p.cols(), d = p.grade();
  const int m1 = m + n * (d - 1), n1 = n * d;
  ComplexMatrix A = ComplexMatrix::Zero(m1, n1);
  ComplexMatrix B = ComplexMatrix::Zero(m1, n1);
  A.topLeftCorner(m, n) = p.coeff(d);
  for (int j = 0; j < d; ++j) B.block(0, j * n, m, n) = p.coeff(d - 1 - j);
  for (int i = 1; i < d; ++i) {
    A.block(m + (i - 1) * n, i * n, n, n) = ComplexMatrix::Identity(n, n);
    B.block(m + (i - 1) * n, (i - 1) * n, n, n) = -ComplexMatrix::Identity(n, n);
  }
  return CompanionPencil(Pencil(std::move(A), std::move(B)), CompanionForm::First, m, n, d);
}

/// Second companion form, the block-transposed layout of size
/// md x (n + m(d-1)):
///
///   lambda * diag(A_d, I_m, ..., I_m)
///     + [ A_{d-1}  -I_m        ]
///       [ A_{d-2}   0   -I_m   ]
///       [   ...          ...   ]
///       [ A_0       0  ...  0  ]
inline CompanionPencil secondCompanion(const MatrixPolynomial& p) {
  if (p.grade() < 1) throw std::invalid_argument("secondCompanion: grade must be >= 1");
  const int m = p.rows(), n = p.cols(), d = p.grade();
  const int m2 = m * d, n2 = n + m * (d - 1);
  ComplexMatrix A = ComplexMatrix::Zero(m2, n2);
  ComplexMatrix B = ComplexMatrix::Zero(m2, n2);
  A.topLeftCorner(m, n) = p.coeff(d);
  for (int i = 0; i < d; ++i) B.block(i * m, 0, m, n) = p.coeff(d - 1 - i);
  for (int i = 1; i < d; ++i) {
    A.block(i * m, n + (i - 1) * m, m, m) = ComplexMatrix::Identity(m, m);
    B.block((i - 1) * m, n + (i - 1) * m, m, m) = -ComplexMatrix::Identity(m, m);
  }
  return CompanionPencil(Pencil(std::move(A), std::move(B)), CompanionForm::Second, m, n, d);
}

/// Bit-exact check of the structural (identity / minus-identity / zero) blocks
/// of a companion pencil.  The polynomial coefficient blocks are not touched.
bool hasExactCompanionPattern(const CompanionPencil& c);

/// Inverse of the companion embeddings: read the coefficient blocks back out.
/// Assumes the structural pattern holds.
MatrixPolynomial polynomialFromCompanion(const CompanionPencil& c);

}  // namespace polyrank
