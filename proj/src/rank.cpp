#include "polyrank/rank.hpp"

#include <Eigen/SVD>
#include <algorithm>

#include "polyrank/random.hpp"

namespace polyrank {

RealVector singularValues(const ComplexMatrix& M) {
  if (M.rows() == 0 || M.cols() == 0) return RealVector(0);
  if (std::min(M.rows(), M.cols()) <= 32) {
    Eigen::JacobiSVD<ComplexMatrix> svd(M);
    return svd.singularValues();
  }
  Eigen::BDCSVD<ComplexMatrix> svd(M);
  return svd.singularValues();
}

int numericalRank(const ComplexMatrix& M, const ToleranceProfile& tol) {
  tol.validate();
  const RealVector sv = singularValues(M);
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  const double cut = tol.relRankTol * sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  return rank;
}

int normalRank(const MatrixPolynomial& p, const ToleranceProfile& tol, std::uint64_t probeSeed) {
  tol.validate();
  auto rng = makeRng(probeSeed);
  int best = 0;
  const int full = std::min(p.rows(), p.cols());
  for (int i = 0; i < tol.probeCount && best < full; ++i) {
    const Complex z = randomUnitModulus(rng);
    best = std::max(best, numericalRank(evaluate(p, z), tol));
  }
  return best;
}

}  // namespace polyrank
