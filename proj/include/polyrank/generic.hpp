#pragma once

#include <vector>

#include "polyrank/eigenstructure.hpp"
#include "polyrank/kcf.hpp"
#include "polyrank/types.hpp"

namespace polyrank {

/// One member of the family of generic complete eigenstructures of m x n
/// polynomials with normal rank r and grade d (2 <= m, n; 1 <= r <=
/// min(m,n)-1; d >= 1), indexed by a = 0..rd:
///
///   right minimal indices: alpha+1 repeated s times, alpha repeated n-r-s,
///       with alpha = floor(a / (n-r)), s = a mod (n-r);
///   left minimal indices:  beta+1 repeated t times, beta repeated m-r-t,
///       with beta = floor((rd-a) / (m-r)), t = (rd-a) mod (m-r);
///   no finite or infinite elementary divisors.
///
/// All arithmetic is exact.
struct GenericStructure {
  int m = 0, n = 0, r = 0, d = 0, a = 0;
  int alpha = 0, s = 0, beta = 0, t = 0;
  long codim = 0;
  StructureSignature signature;
};

std::vector<GenericStructure> genericStructures(int m, int n, int r, int d);

/// Single structure for fixed a; same hypotheses.
GenericStructure genericStructure(int m, int n, int r, int d, int a);

/// Generic eigenstructure at full rank r = min(m, n).  Rectangular cases
/// carry only right (m < n) or only left (m > n) minimal indices; the square
/// case is the symbolic descriptor "regular with nd simple eigenvalues" and
/// carries no index data.
struct FullRankStructure {
  int m = 0, n = 0, d = 0;
  bool squareRegular = false;
  StructureSignature signature;  ///< meaningful only when !squareRegular
};

FullRankStructure genericFullRank(int m, int n, int d);

/// Generic canonical forms of m1 x n1 pencils with rank r1, indexed by
/// a1 = 0..r1: block multisets
///   L_{alpha1+1} x s1, L_{alpha1} x (n1-r1-s1),
///   L^T_{beta1+1} x t1, L^T_{beta1} x (m1-r1-t1)
/// with alpha1 = floor(a1/(n1-r1)), s1 = a1 mod (n1-r1),
/// beta1 = floor((r1-a1)/(m1-r1)), t1 = (r1-a1) mod (m1-r1).
struct PencilGenericStructure {
  int m1 = 0, n1 = 0, r1 = 0, a1 = 0;
  int alpha1 = 0, s1 = 0, beta1 = 0, t1 = 0;
  KCFSpec kcf;
};

std::vector<PencilGenericStructure> genericPencilStructures(int m1, int n1, int r1);

/// Canonical block multiset of the first companion form of a polynomial with
/// generic structure K:
///   L_{alpha+d} x s, L_{alpha+d-1} x (n-r-s),
///   L^T_{beta+1} x t, L^T_{beta} x (m-r-t).
KCFSpec companionStructureOf(const GenericStructure& K);

/// Index a1 of the pencil family matching the companion structure of K:
/// a1 = (n(d-1) + r) - rd + a.  Asserts blockwise agreement between
/// companionStructureOf(K) and the pencil family entry before returning.
int matchLinearization(const GenericStructure& K);

/// Codimension of the orbit closure of the generic structure K_a, computed
/// through two independent expressions
///   (n-r)(m(d+1)-r) + a(m-n)
///   (n-r)(2m + n(d-1) - r) + ((n(d-1)+r) - rd + a)(m-n)
/// which are asserted equal.
long genericCodimension(int m, int n, int r, int d, int a);

}  // namespace polyrank
