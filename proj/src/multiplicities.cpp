#include "polyrank/multiplicities.hpp"

#include <algorithm>
#include <sstream>

#include "polyrank/rank.hpp"

namespace polyrank {

ComplexMatrix taylorCoefficient(const MatrixPolynomial& p, Complex z0, int order) {
  if (order < 0) throw std::invalid_argument("taylorCoefficient: order must be >= 0");
  const int d = p.grade();
  ComplexMatrix out = ComplexMatrix::Zero(p.rows(), p.cols());
  if (order > d) return out;
  // binom(i, order) * z0^(i - order), accumulated with an updated binomial
  for (int i = order; i <= d; ++i) {
    double binom = 1.0;
    for (int t = 0; t < order; ++t) binom *= static_cast<double>(i - t) / static_cast<double>(order - t);
    out += binom * std::pow(z0, i - order) * p.coeff(i);
  }
  return out;
}

ComplexMatrix taylorToeplitz(const MatrixPolynomial& p, Complex z0, int depth) {
  if (depth < 1) throw std::invalid_argument("taylorToeplitz: depth must be >= 1");
  const int m = p.rows(), n = p.cols();
  std::vector<ComplexMatrix> taylor;
  taylor.reserve(static_cast<std::size_t>(depth));
  for (int i = 0; i < depth; ++i) taylor.push_back(taylorCoefficient(p, z0, i));
  ComplexMatrix W = ComplexMatrix::Zero(static_cast<Eigen::Index>(depth) * m,
                                        static_cast<Eigen::Index>(depth) * n);
  for (int i = 0; i < depth; ++i)
    for (int j = 0; j <= i; ++j)
      W.block(static_cast<Eigen::Index>(i) * m, static_cast<Eigen::Index>(j) * n, m, n) =
          taylor[static_cast<std::size_t>(i - j)];
  return W;
}

namespace {

// Rank with the cut taken relative to max(sigma_max, floor).  At an exact
// eigenvalue the depth-1 Toeplitz block is P(z0) itself, a near-zero matrix
// whose own sigma_max says nothing; the floor anchors the decision at the
// scale of the Taylor coefficients.
int rankWithFloor(const ComplexMatrix& M, double floor_, const ToleranceProfile& tol) {
  const RealVector sv = singularValues(M);
  if (sv.size() == 0) return 0;
  const double cut = tol.relRankTol * std::max(sv(0), floor_);
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return r;
}

}  // namespace

IndexList partialMultiplicitiesAtWithRank(const MatrixPolynomial& p, Complex z0, int rank,
                                          const ToleranceProfile& tol) {
  tol.validate();
  if (rank == 0) return {};
  const int n = p.cols();
  const int singularDim = n - rank;
  const int cap = std::max(p.grade() * rank, 1) + 1;
  double scale = 0.0;
  for (int i = 0; i <= p.grade(); ++i)
    scale = std::max(scale, taylorCoefficient(p, z0, i).norm());
  IndexList weyr;  // weyr[k-1] = number of multiplicities >= k
  int prevKernel = 0;
  for (int k = 1;; ++k) {
    if (k > cap) {
      std::ostringstream os;
      os << "partialMultiplicitiesAt: multiplicity chain at " << z0
         << " did not terminate by depth " << cap;
      throw NumericalDiagnosticError(os.str());
    }
    const ComplexMatrix W = taylorToeplitz(p, z0, k);
    const int kernel = k * n - rankWithFloor(W, scale, tol);
    const int inc = kernel - prevKernel - singularDim;
    const int prevInc = weyr.empty() ? rank : weyr.back();
    if (inc < 0 || inc > prevInc) {
      const RealVector sv = singularValues(W);
      std::ostringstream os;
      os << "partialMultiplicitiesAt: non-monotone kernel growth at " << z0 << ", depth " << k
         << " (increment " << inc << " after " << prevInc << "); smallest singular values:";
      const Eigen::Index lo = std::max<Eigen::Index>(0, sv.size() - 6);
      for (Eigen::Index i = lo; i < sv.size(); ++i) os << " " << sv(i);
      throw NumericalDiagnosticError(os.str());
    }
    if (inc == 0) break;
    weyr.push_back(inc);
    prevKernel = kernel;
  }
  // conjugate partition of the counts gives the multiplicities themselves
  IndexList mults;
  if (!weyr.empty()) {
    for (int j = 1; j <= weyr.front(); ++j) {
      int len = 0;
      for (int w : weyr)
        if (w >= j) ++len;
      mults.push_back(len);
    }
  }
  std::sort(mults.begin(), mults.end());
  return mults;
}

IndexList partialMultiplicitiesAt(const MatrixPolynomial& p, Complex z0,
                                  const ToleranceProfile& tol, std::uint64_t probeSeed) {
  return partialMultiplicitiesAtWithRank(p, z0, normalRank(p, tol, probeSeed), tol);
}

IndexList infiniteMultiplicities(const MatrixPolynomial& p, const ToleranceProfile& tol,
                                 std::uint64_t probeSeed) {
  return partialMultiplicitiesAt(reversal(p), Complex(0.0, 0.0), tol, probeSeed);
}

}  // namespace polyrank
