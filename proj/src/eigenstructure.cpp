#include "polyrank/eigenstructure.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <algorithm>
#include <numeric>
#include <sstream>

#include "polyrank/minimal_indices.hpp"
#include "polyrank/multiplicities.hpp"
#include "polyrank/random.hpp"
#include "polyrank/rank.hpp"

namespace polyrank {

namespace {

bool lexLess(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

void StructureSignature::canonicalize() {
  std::sort(rightMinimalIndices.begin(), rightMinimalIndices.end());
  std::sort(leftMinimalIndices.begin(), leftMinimalIndices.end());
  std::sort(infiniteMultiplicities.begin(), infiniteMultiplicities.end());
  for (auto& fe : finiteStructure) std::sort(fe.multiplicities.begin(), fe.multiplicities.end());
  std::sort(finiteStructure.begin(), finiteStructure.end(),
            [](const FiniteEigenvalue& a, const FiniteEigenvalue& b) {
              return lexLess(a.value, b.value);
            });
}

long StructureSignature::indexSum() const {
  long s = 0;
  for (int e : rightMinimalIndices) s += e;
  for (int e : leftMinimalIndices) s += e;
  for (const auto& fe : finiteStructure)
    for (int mlt : fe.multiplicities) s += mlt;
  for (int g : infiniteMultiplicities) s += g;
  return s;
}

std::string StructureSignature::toString() const {
  std::ostringstream os;
  os << "rank " << rank << ", right " << indexListToString(rightMinimalIndices) << ", left "
     << indexListToString(leftMinimalIndices) << ", finite {";
  for (std::size_t i = 0; i < finiteStructure.size(); ++i) {
    if (i) os << ", ";
    os << finiteStructure[i].value << ":" << indexListToString(finiteStructure[i].multiplicities);
  }
  os << "}, infinite " << indexListToString(infiniteMultiplicities);
  return os.str();
}

bool signaturesMatch(const StructureSignature& a, const StructureSignature& b, double eigTol) {
  if (a.m != b.m || a.n != b.n || a.grade != b.grade || a.rank != b.rank) return false;
  if (a.rightMinimalIndices != b.rightMinimalIndices) return false;
  if (a.leftMinimalIndices != b.leftMinimalIndices) return false;
  if (a.infiniteMultiplicities != b.infiniteMultiplicities) return false;
  if (a.finiteStructure.size() != b.finiteStructure.size()) return false;
  std::vector<bool> used(b.finiteStructure.size(), false);
  for (const auto& fa : a.finiteStructure) {
    bool matched = false;
    for (std::size_t j = 0; j < b.finiteStructure.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(fa.value - b.finiteStructure[j].value) <= eigTol &&
          fa.multiplicities == b.finiteStructure[j].multiplicities) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

bool matchesIndexOnlySignature(const StructureSignature& computed,
                               const StructureSignature& target) {
  return computed.m == target.m && computed.n == target.n && computed.grade == target.grade &&
         computed.rank == target.rank &&
         computed.rightMinimalIndices == target.rightMinimalIndices &&
         computed.leftMinimalIndices == target.leftMinimalIndices &&
         !computed.hasElementaryDivisors();
}

namespace {

// Candidate finite eigenvalues of a (possibly singular) pencil, found by
// bordering it with random constant blocks to a square pencil that is regular
// with probability one, then running a shift-and-invert eigensolve.  The list
// can contain spurious points; callers must validate every candidate.
std::vector<Complex> borderedEigenvalueCandidates(const Pencil& L, int rank,
                                                  std::mt19937_64& rng) {
  const Eigen::Index m1 = L.rows(), n1 = L.cols();
  const Eigen::Index rightDef = n1 - rank;  // kernel sizes to pad away
  const Eigen::Index leftDef = m1 - rank;
  const Eigen::Index N = m1 + rightDef;
  ComplexMatrix B1 = ComplexMatrix::Zero(N, N);
  ComplexMatrix B0 = ComplexMatrix::Zero(N, N);
  B1.topLeftCorner(m1, n1) = L.lambdaPart();
  B0.topLeftCorner(m1, n1) = L.constantPart();
  if (leftDef > 0) B0.block(0, n1, m1, leftDef) = randomGaussianMatrix(m1, leftDef, rng);
  if (rightDef > 0) B0.block(m1, 0, rightDef, n1) = randomGaussianMatrix(rightDef, n1, rng);

  // lambda*B1 + B0 = (lambda - shift)*B1 + S with S = shift*B1 + B0; if S is
  // invertible the finite eigenvalues are shift - 1/theta over the nonzero
  // eigenvalues theta of S^{-1} B1.
  for (int attempt = 0; attempt < 8; ++attempt) {
    const Complex shift = randomUnitModulus(rng) * (1.0 + 0.25 * attempt);
    const ComplexMatrix S = shift * B1 + B0;
    Eigen::FullPivLU<ComplexMatrix> lu(S);
    if (!lu.isInvertible()) continue;
    const ComplexMatrix M = lu.solve(B1);
    Eigen::ComplexEigenSolver<ComplexMatrix> es(M, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) continue;
    std::vector<Complex> candidates;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      const Complex theta = es.eigenvalues()(i);
      if (std::abs(theta) < 1e-12) continue;  // maps to the point at infinity
      const Complex lambda = shift - 1.0 / theta;
      if (std::abs(lambda) > 1e8) continue;   // handled by the reversal analysis
      candidates.push_back(lambda);
    }
    return candidates;
  }
  throw NumericalDiagnosticError(
      "borderedEigenvalueCandidates: bordered pencil stayed singular for all shifts "
      "(defective bordering)");
}

struct Cluster {
  Complex centroid{};
  std::vector<Complex> members;
};

std::vector<Cluster> clusterCandidates(std::vector<Complex> candidates, double radius) {
  std::sort(candidates.begin(), candidates.end(), lexLess);
  std::vector<Cluster> clusters;
  for (Complex z : candidates) {
    Cluster* best = nullptr;
    double bestDist = radius * std::max(1.0, std::abs(z));
    for (auto& c : clusters) {
      const double dist = std::abs(z - c.centroid);
      if (dist <= bestDist) {
        bestDist = dist;
        best = &c;
      }
    }
    if (best == nullptr) {
      clusters.push_back(Cluster{z, {z}});
    } else {
      best->members.push_back(z);
      Complex sum(0.0, 0.0);
      for (Complex w : best->members) sum += w;
      best->centroid = sum / static_cast<double>(best->members.size());
    }
  }
  return clusters;
}

}  // namespace

StructureSignature completeEigenstructure(const MatrixPolynomial& p, const ToleranceProfile& tol,
                                          std::uint64_t probeSeed) {
  tol.validate();
  StructureSignature sig;
  sig.m = p.rows();
  sig.n = p.cols();
  sig.grade = p.grade();
  sig.rank = normalRank(p, tol, probeSeed);
  sig.rightMinimalIndices = rightMinimalIndicesWithRank(p, sig.rank, tol);
  sig.leftMinimalIndices = rightMinimalIndicesWithRank(transpose(p), sig.rank, tol);
  if (p.grade() >= 1)
    sig.infiniteMultiplicities =
        partialMultiplicitiesAtWithRank(reversal(p), Complex(0.0, 0.0), sig.rank, tol);

  if (sig.rank > 0 && p.grade() >= 1) {
    auto rng = makeRng(probeSeed ^ 0xd1b54a32d192ed03ULL);
    const CompanionPencil comp = firstCompanion(p);
    const int companionRank = sig.rank + p.cols() * (p.grade() - 1);
    const auto candidates = borderedEigenvalueCandidates(comp.pencil(), companionRank, rng);
    const auto clusters = clusterCandidates(candidates, 2e-3);
    for (const auto& cluster : clusters) {
      // validate the centroid first, then individual members; keep whichever
      // point exposes the most structure (spurious points expose none)
      std::vector<Complex> probes{cluster.centroid};
      if (cluster.members.size() > 1)
        probes.insert(probes.end(), cluster.members.begin(), cluster.members.end());
      IndexList best;
      Complex bestPoint = cluster.centroid;
      for (Complex z : probes) {
        IndexList mults;
        try {
          mults = partialMultiplicitiesAtWithRank(p, z, sig.rank, tol);
        } catch (const NumericalDiagnosticError&) {
          continue;  // an off-center probe is discarded, not fatal
        }
        const long total = std::accumulate(mults.begin(), mults.end(), 0L);
        const long bestTotal = std::accumulate(best.begin(), best.end(), 0L);
        if (total > bestTotal) {
          best = std::move(mults);
          bestPoint = z;
        }
      }
      if (!best.empty()) sig.finiteStructure.push_back(FiniteEigenvalue{bestPoint, best});
    }
  }
  sig.canonicalize();

  const long expected = static_cast<long>(sig.rank) * sig.grade;
  if (sig.indexSum() != expected) {
    std::ostringstream os;
    os << "completeEigenstructure: index sum " << sig.indexSum() << " != rank*grade " << expected
       << " for " << sig.m << "x" << sig.n << " grade " << sig.grade << "; partial result: "
       << sig.toString();
    throw NumericalDiagnosticError(os.str());
  }
  return sig;
}

}  // namespace polyrank
