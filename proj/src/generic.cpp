#include "polyrank/generic.hpp"

#include <sstream>

namespace polyrank {

namespace {

void checkBoundedRankHypotheses(int m, int n, int r, int d) {
  if (m < 2 || n < 2)
    throw std::invalid_argument("generic structures: need m, n >= 2");
  if (d < 1) throw std::invalid_argument("generic structures: need grade d >= 1");
  const int full = std::min(m, n);
  if (r < 1 || r > full - 1) {
    std::ostringstream os;
    os << "generic structures: rank r must satisfy 1 <= r <= min(m,n)-1 = " << (full - 1)
       << " (got " << r << "); use the full-rank family for r = min(m,n)";
    throw std::invalid_argument(os.str());
  }
}

/// ascending list: low repeated (count - high) times, then low+1 repeated high
IndexList twoValueList(int low, int highCount, int count) {
  IndexList out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count - highCount; ++i) out.push_back(low);
  for (int i = 0; i < highCount; ++i) out.push_back(low + 1);
  return out;
}

}  // namespace

long genericCodimension(int m, int n, int r, int d, int a) {
  checkBoundedRankHypotheses(m, n, r, d);
  if (a < 0 || a > r * d) throw std::invalid_argument("genericCodimension: a out of [0, rd]");
  const long simplified = static_cast<long>(n - r) * (static_cast<long>(m) * (d + 1) - r) +
                          static_cast<long>(a) * (m - n);
  const long a1 = static_cast<long>(n) * (d - 1) + r - static_cast<long>(r) * d + a;
  const long viaLinearization =
      static_cast<long>(n - r) * (2L * m + static_cast<long>(n) * (d - 1) - r) +
      a1 * (m - n);
  if (simplified != viaLinearization) {
    std::ostringstream os;
    os << "genericCodimension: formula mismatch " << simplified << " vs " << viaLinearization
       << " at (" << m << "," << n << "," << r << "," << d << "," << a << ")";
    throw std::logic_error(os.str());
  }
  return simplified;
}

GenericStructure genericStructure(int m, int n, int r, int d, int a) {
  checkBoundedRankHypotheses(m, n, r, d);
  if (a < 0 || a > r * d) throw std::invalid_argument("genericStructure: a out of [0, rd]");
  GenericStructure K;
  K.m = m;
  K.n = n;
  K.r = r;
  K.d = d;
  K.a = a;
  K.alpha = a / (n - r);
  K.s = a % (n - r);
  const int b = r * d - a;
  K.beta = b / (m - r);
  K.t = b % (m - r);
  K.codim = genericCodimension(m, n, r, d, a);
  K.signature.m = m;
  K.signature.n = n;
  K.signature.grade = d;
  K.signature.rank = r;
  K.signature.rightMinimalIndices = twoValueList(K.alpha, K.s, n - r);
  K.signature.leftMinimalIndices = twoValueList(K.beta, K.t, m - r);
  return K;
}

std::vector<GenericStructure> genericStructures(int m, int n, int r, int d) {
  checkBoundedRankHypotheses(m, n, r, d);
  std::vector<GenericStructure> out;
  out.reserve(static_cast<std::size_t>(r * d) + 1);
  for (int a = 0; a <= r * d; ++a) out.push_back(genericStructure(m, n, r, d, a));
  return out;
}

FullRankStructure genericFullRank(int m, int n, int d) {
  if (m < 1 || n < 1 || d < 1)
    throw std::invalid_argument("genericFullRank: need m, n >= 1 and d >= 1");
  FullRankStructure K;
  K.m = m;
  K.n = n;
  K.d = d;
  K.signature.m = m;
  K.signature.n = n;
  K.signature.grade = d;
  if (m == n) {
    K.squareRegular = true;
    K.signature.rank = n;
    return K;
  }
  if (m < n) {
    K.signature.rank = m;
    const int alpha = m * d / (n - m);
    const int s = m * d % (n - m);
    K.signature.rightMinimalIndices = twoValueList(alpha, s, n - m);
  } else {
    K.signature.rank = n;
    const int beta = n * d / (m - n);
    const int t = n * d % (m - n);
    K.signature.leftMinimalIndices = twoValueList(beta, t, m - n);
  }
  return K;
}

std::vector<PencilGenericStructure> genericPencilStructures(int m1, int n1, int r1) {
  if (m1 < 2 || n1 < 2) throw std::invalid_argument("genericPencilStructures: need m1, n1 >= 2");
  if (r1 < 1 || r1 > std::min(m1, n1) - 1)
    throw std::invalid_argument("genericPencilStructures: need 1 <= r1 <= min(m1,n1)-1");
  std::vector<PencilGenericStructure> out;
  out.reserve(static_cast<std::size_t>(r1) + 1);
  for (int a1 = 0; a1 <= r1; ++a1) {
    PencilGenericStructure P;
    P.m1 = m1;
    P.n1 = n1;
    P.r1 = r1;
    P.a1 = a1;
    P.alpha1 = a1 / (n1 - r1);
    P.s1 = a1 % (n1 - r1);
    P.beta1 = (r1 - a1) / (m1 - r1);
    P.t1 = (r1 - a1) % (m1 - r1);
    for (int i = 0; i < P.s1; ++i)
      P.kcf.blocks.push_back(KCFBlock{KCFBlockKind::RightSingular, P.alpha1 + 1, Complex()});
    for (int i = 0; i < n1 - r1 - P.s1; ++i)
      P.kcf.blocks.push_back(KCFBlock{KCFBlockKind::RightSingular, P.alpha1, Complex()});
    for (int i = 0; i < P.t1; ++i)
      P.kcf.blocks.push_back(KCFBlock{KCFBlockKind::LeftSingular, P.beta1 + 1, Complex()});
    for (int i = 0; i < m1 - r1 - P.t1; ++i)
      P.kcf.blocks.push_back(KCFBlock{KCFBlockKind::LeftSingular, P.beta1, Complex()});
    P.kcf.canonicalize();
    out.push_back(std::move(P));
  }
  return out;
}

KCFSpec companionStructureOf(const GenericStructure& K) {
  KCFSpec spec;
  for (int i = 0; i < K.s; ++i)
    spec.blocks.push_back(KCFBlock{KCFBlockKind::RightSingular, K.alpha + K.d, Complex()});
  for (int i = 0; i < K.n - K.r - K.s; ++i)
    spec.blocks.push_back(KCFBlock{KCFBlockKind::RightSingular, K.alpha + K.d - 1, Complex()});
  for (int i = 0; i < K.t; ++i)
    spec.blocks.push_back(KCFBlock{KCFBlockKind::LeftSingular, K.beta + 1, Complex()});
  for (int i = 0; i < K.m - K.r - K.t; ++i)
    spec.blocks.push_back(KCFBlock{KCFBlockKind::LeftSingular, K.beta, Complex()});
  spec.canonicalize();
  const int m1 = K.m + K.n * (K.d - 1), n1 = K.n * K.d;
  if (spec.rows() != m1 || spec.cols() != n1)
    throw std::logic_error("companionStructureOf: block sizes do not tile the companion pencil");
  return spec;
}

int matchLinearization(const GenericStructure& K) {
  const int a1 = K.n * (K.d - 1) + K.r - K.r * K.d + K.a;
  const int m1 = K.m + K.n * (K.d - 1);
  const int n1 = K.n * K.d;
  const int r1 = K.r + K.n * (K.d - 1);
  const auto families = genericPencilStructures(m1, n1, r1);
  if (a1 < 0 || a1 > r1)
    throw std::logic_error("matchLinearization: derived pencil index out of range");
  if (!sameBlocks(companionStructureOf(K), families[static_cast<std::size_t>(a1)].kcf))
    throw std::logic_error("matchLinearization: companion structure disagrees with pencil family");
  return a1;
}

}  // namespace polyrank
