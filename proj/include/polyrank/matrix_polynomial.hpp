#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "polyrank/types.hpp"

namespace polyrank {

/// Rectangular matrix polynomial P(lambda) = sum_i lambda^i A_i stored with an
/// explicit grade: the coefficient list always has grade+1 entries, trailing
/// zero coefficients included.  Grade is part of the identity of the object
/// and is never silently dropped.
class MatrixPolynomial {
 public:
  MatrixPolynomial(int rows, int cols, int grade, std::vector<ComplexMatrix> coeffs)
      : rows_(rows), cols_(cols), grade_(grade), coeffs_(std::move(coeffs)) {
    if (rows_ < 1 || cols_ < 1) throw std::invalid_argument("MatrixPolynomial: dimensions must be positive");
    if (grade_ < 0) throw std::invalid_argument("MatrixPolynomial: grade must be nonnegative");
    if (coeffs_.size() != static_cast<std::size_t>(grade_) + 1)
      throw std::invalid_argument("MatrixPolynomial: expected grade+1 coefficients");
    for (const auto& A : coeffs_)
      if (A.rows() != rows_ || A.cols() != cols_)
        throw std::invalid_argument("MatrixPolynomial: coefficient shape mismatch");
  }

  static MatrixPolynomial zero(int rows, int cols, int grade) {
    std::vector<ComplexMatrix> cs(static_cast<std::size_t>(grade) + 1,
                                  ComplexMatrix::Zero(rows, cols));
    return MatrixPolynomial(rows, cols, grade, std::move(cs));
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int grade() const { return grade_; }

  const ComplexMatrix& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<ComplexMatrix>& coeffs() const { return coeffs_; }

  /// Largest i with A_i != 0, or nullopt for the identically zero polynomial.
  std::optional<int> degree() const {
    for (int i = grade_; i >= 0; --i)
      if (!coeffs_[static_cast<std::size_t>(i)].isZero(0.0)) return i;
    return std::nullopt;
  }

  bool isZero() const { return !degree().has_value(); }

  bool operator==(const MatrixPolynomial& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_ || grade_ != other.grade_) return false;
    for (int i = 0; i <= grade_; ++i)
      if (coeff(i) != other.coeff(i)) return false;
    return true;
  }

 private:
  int rows_, cols_, grade_;
  std::vector<ComplexMatrix> coeffs_;
};

/// Horner evaluation at a point.
inline ComplexMatrix evaluate(const MatrixPolynomial& p, Complex z) {
  ComplexMatrix acc = p.coeff(p.grade());
  for (int i = p.grade() - 1; i >= 0; --i) acc = z * acc + p.coeff(i);
  return acc;
}

/// Grade-reversal: rev P(lambda) = lambda^grade P(1/lambda); the coefficient
/// list reversed at fixed grade.  An involution.
inline MatrixPolynomial reversal(const MatrixPolynomial& p) {
  std::vector<ComplexMatrix> cs(p.coeffs().rbegin(), p.coeffs().rend());
  return MatrixPolynomial(p.rows(), p.cols(), p.grade(), std::move(cs));
}

/// Coefficient-wise transpose (no conjugation).
inline MatrixPolynomial transpose(const MatrixPolynomial& p) {
  std::vector<ComplexMatrix> cs;
  cs.reserve(static_cast<std::size_t>(p.grade()) + 1);
  for (const auto& A : p.coeffs()) cs.push_back(A.transpose());
  return MatrixPolynomial(p.cols(), p.rows(), p.grade(), std::move(cs));
}

inline double frobeniusNorm(const MatrixPolynomial& p) {
  double s = 0.0;
  for (const auto& A : p.coeffs()) s += A.squaredNorm();
  return std::sqrt(s);
}

/// Coefficient-wise Frobenius distance between two polynomials of identical
/// shape and grade.
inline double distance(const MatrixPolynomial& p, const MatrixPolynomial& q) {
  if (p.rows() != q.rows() || p.cols() != q.cols() || p.grade() != q.grade())
    throw std::invalid_argument("distance: polynomials must share shape and grade");
  double s = 0.0;
  for (int i = 0; i <= p.grade(); ++i) s += (p.coeff(i) - q.coeff(i)).squaredNorm();
  return std::sqrt(s);
}

inline MatrixPolynomial scaled(const MatrixPolynomial& p, Complex factor) {
  std::vector<ComplexMatrix> cs;
  cs.reserve(static_cast<std::size_t>(p.grade()) + 1);
  for (const auto& A : p.coeffs()) cs.push_back(factor * A);
  return MatrixPolynomial(p.rows(), p.cols(), p.grade(), std::move(cs));
}

}  // namespace polyrank
