#include "polyrank/recovery.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <sstream>

#include "polyrank/rank.hpp"

namespace polyrank {

MatrixPolynomial companionRecovery(const Pencil& L, int m, int n, int d,
                                   const ToleranceProfile& tol) {
  tol.validate();
  if (m < 1 || n < 1 || d < 1) throw std::invalid_argument("companionRecovery: bad shape");
  const int m1 = m + n * (d - 1), n1 = n * d;
  if (L.rows() != m1 || L.cols() != n1)
    throw std::invalid_argument("companionRecovery: pencil size does not match (m, n, d)");

  if (d == 1)
    return MatrixPolynomial(m, n, 1, {L.constantPart(), L.lambdaPart()});

  const int spine = n * (d - 1);
  const ComplexMatrix T1 = L.lambdaPart().bottomRows(spine);
  const ComplexMatrix T0 = L.constantPart().bottomRows(spine);

  // Convolution matrix of the spine pencil against degree-(d-1) vector
  // polynomials; its kernel must be exactly n-dimensional.
  ComplexMatrix conv = ComplexMatrix::Zero(static_cast<Eigen::Index>(d + 1) * spine,
                                           static_cast<Eigen::Index>(d) * n1);
  for (int j = 0; j < d; ++j) {
    conv.block(static_cast<Eigen::Index>(j) * spine, static_cast<Eigen::Index>(j) * n1, spine, n1) = T0;
    conv.block(static_cast<Eigen::Index>(j + 1) * spine, static_cast<Eigen::Index>(j) * n1, spine, n1) = T1;
  }

  Eigen::JacobiSVD<ComplexMatrix> svd(conv, Eigen::ComputeFullV);
  const RealVector sv = svd.singularValues();
  const double cut = sv.size() > 0 && sv(0) > 0.0 ? tol.relRankTol * sv(0) : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  const int kernelDim = static_cast<int>(conv.cols()) - rank;
  if (kernelDim != n) {
    std::ostringstream os;
    os << "companionRecovery: spine kernel dimension " << kernelDim << " != " << n
       << "; the pencil is too far from companion structure";
    throw PivotError(os.str());
  }
  const ComplexMatrix kernel = svd.matrixV().rightCols(n);

  // Kernel columns stack the coefficients x_0 ... x_{d-1}; in the exact case
  // x_k is the identity embedded in block d-1-k, mixed by one constant
  // matrix.  Normalize that mixture away using the top block of x_{d-1}.
  std::vector<ComplexMatrix> X(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k)
    X[static_cast<std::size_t>(k)] = kernel.middleRows(static_cast<Eigen::Index>(k) * n1, n1);
  const ComplexMatrix Bpivot = X[static_cast<std::size_t>(d - 1)].topRows(n);
  if (numericalRank(Bpivot, tol) != n)
    throw PivotError("companionRecovery: kernel normalization block is numerically singular");
  const ComplexMatrix BpivotInv = Bpivot.partialPivLu().inverse();

  ComplexMatrix Z(n1, n1);
  for (int j = 0; j < d; ++j)
    Z.middleCols(static_cast<Eigen::Index>(j) * n, n) =
        X[static_cast<std::size_t>(d - 1 - j)] * BpivotInv;

  // W = G^{-1} with G = -T0 * Z_left maps the transformed spine exactly onto
  // lambda*[0|I] + [-I|0]; only its invertibility matters for the top rows.
  const ComplexMatrix G = -T0 * Z.leftCols(spine);
  if (numericalRank(G, tol) != spine)
    throw PivotError("companionRecovery: spine restoration factor is numerically singular");

  const ComplexMatrix topA = L.lambdaPart().topRows(m) * Z;
  const ComplexMatrix topB = L.constantPart().topRows(m) * Z;
  // one block row operation clears the top lambda blocks beyond column 0 and
  // feeds the correction into the constant part
  const ComplexMatrix C = topA.rightCols(spine);
  ComplexMatrix topBAdj = topB;
  topBAdj.leftCols(spine) += C;

  std::vector<ComplexMatrix> coeffs(static_cast<std::size_t>(d) + 1);
  coeffs[static_cast<std::size_t>(d)] = topA.leftCols(n);
  for (int j = 0; j < d; ++j)
    coeffs[static_cast<std::size_t>(d - 1 - j)] = topBAdj.middleCols(static_cast<Eigen::Index>(j) * n, n);
  return MatrixPolynomial(m, n, d, std::move(coeffs));
}

}  // namespace polyrank
