#include "polyrank/minimal_indices.hpp"

#include <sstream>

#include "polyrank/rank.hpp"

namespace polyrank {

ComplexMatrix convolutionMatrix(const MatrixPolynomial& p, int k) {
  if (k < 0) throw std::invalid_argument("convolutionMatrix: k must be >= 0");
  const int m = p.rows(), n = p.cols(), d = p.grade();
  ComplexMatrix T = ComplexMatrix::Zero(static_cast<Eigen::Index>(k + d + 1) * m,
                                        static_cast<Eigen::Index>(k + 1) * n);
  for (int j = 0; j <= k; ++j)
    for (int i = 0; i <= d; ++i)
      T.block(static_cast<Eigen::Index>(i + j) * m, static_cast<Eigen::Index>(j) * n, m, n) =
          p.coeff(i);
  return T;
}

namespace {

std::string gapReport(const ComplexMatrix& T, const ToleranceProfile& tol) {
  const RealVector sv = singularValues(T);
  std::ostringstream os;
  os << "smallest singular values:";
  const Eigen::Index lo = std::max<Eigen::Index>(0, sv.size() - 6);
  for (Eigen::Index i = lo; i < sv.size(); ++i) os << " " << sv(i);
  if (sv.size() > 0) os << "; threshold " << tol.relRankTol * sv(0);
  return os.str();
}

}  // namespace

IndexList rightMinimalIndicesWithRank(const MatrixPolynomial& p, int rank,
                                      const ToleranceProfile& tol) {
  tol.validate();
  const int n = p.cols();
  const int target = n - rank;
  IndexList eps;
  if (target == 0) return eps;
  const int kmax = std::max(p.grade() * rank, 1);
  int prevNu = 0;
  int prevCount = 0;
  for (int k = 0; k <= kmax; ++k) {
    const ComplexMatrix T = convolutionMatrix(p, k);
    const int nu = (k + 1) * n - numericalRank(T, tol);
    const int count = nu - prevNu;  // number of minimal indices <= k
    if (count < prevCount || count > target) {
      std::ostringstream os;
      os << "rightMinimalIndices: inconsistent kernel profile at k=" << k << " (nu_k=" << nu
         << ", count " << count << " after " << prevCount << ", target " << target << "); "
         << gapReport(T, tol);
      throw NumericalDiagnosticError(os.str());
    }
    for (int c = prevCount; c < count; ++c) eps.push_back(k);
    if (static_cast<int>(eps.size()) == target) return eps;
    prevNu = nu;
    prevCount = count;
  }
  std::ostringstream os;
  os << "rightMinimalIndices: found " << eps.size() << " of " << target
     << " indices by the hard stop k=" << kmax;
  throw NumericalDiagnosticError(os.str());
}

IndexList rightMinimalIndices(const MatrixPolynomial& p, const ToleranceProfile& tol,
                              std::uint64_t probeSeed) {
  return rightMinimalIndicesWithRank(p, normalRank(p, tol, probeSeed), tol);
}

IndexList leftMinimalIndices(const MatrixPolynomial& p, const ToleranceProfile& tol,
                             std::uint64_t probeSeed) {
  return rightMinimalIndices(transpose(p), tol, probeSeed);
}

}  // namespace polyrank
