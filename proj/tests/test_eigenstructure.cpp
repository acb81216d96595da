#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <vector>

#include "polyrank/eigenstructure.hpp"
#include "polyrank/kcf.hpp"
#include "polyrank/random.hpp"

using namespace polyrank;

namespace {

const ToleranceProfile kTol;

KCFBlock jordan(int size, Complex mu) { return KCFBlock{KCFBlockKind::Jordan, size, mu}; }
KCFBlock jordanInf(int size) { return KCFBlock{KCFBlockKind::JordanInf, size, Complex()}; }
KCFBlock right(int k) { return KCFBlock{KCFBlockKind::RightSingular, k, Complex()}; }
KCFBlock left(int k) { return KCFBlock{KCFBlockKind::LeftSingular, k, Complex()}; }

bool hasFinite(const StructureSignature& sig, Complex value, const IndexList& mults,
               double tol = 1e-7) {
  for (const auto& fe : sig.finiteStructure)
    if (std::abs(fe.value - value) <= tol && fe.multiplicities == mults) return true;
  return false;
}

}  // namespace

TEST_CASE("the zero polynomial yields only zero minimal indices") {
  auto sig = completeEigenstructure(MatrixPolynomial::zero(2, 3, 1), kTol);
  CHECK(sig.rank == 0);
  CHECK(sig.rightMinimalIndices == IndexList{0, 0, 0});
  CHECK(sig.leftMinimalIndices == IndexList{0, 0});
  CHECK(!sig.hasElementaryDivisors());
  CHECK(sig.indexSum() == 0);
}

TEST_CASE("diag(lambda, lambda^2) at grade 2 balances finite and infinite parts") {
  std::vector<ComplexMatrix> cs(3, ComplexMatrix::Zero(2, 2));
  cs[1](0, 0) = 1.0;
  cs[2](1, 1) = 1.0;
  auto sig = completeEigenstructure(MatrixPolynomial(2, 2, 2, cs), kTol);
  CHECK(sig.rank == 2);
  CHECK(sig.rightMinimalIndices.empty());
  CHECK(sig.leftMinimalIndices.empty());
  REQUIRE(sig.finiteStructure.size() == 1);
  CHECK(hasFinite(sig, Complex(0.0, 0.0), {1, 2}));
  CHECK(sig.infiniteMultiplicities == IndexList{1});
  CHECK(sig.indexSum() == 4);
}

TEST_CASE("a regular pencil with distinct eigenvalues is fully resolved") {
  ComplexMatrix D = ComplexMatrix::Zero(2, 2);
  D(0, 0) = Complex(1.0, 0.0);
  D(1, 1) = Complex(2.0, -0.5);
  auto sig = completeEigenstructure(Pencil(ComplexMatrix::Identity(2, 2), -D).asPolynomial(), kTol);
  CHECK(sig.rank == 2);
  CHECK(sig.finiteStructure.size() == 2);
  CHECK(hasFinite(sig, Complex(1.0, 0.0), {1}));
  CHECK(hasFinite(sig, Complex(2.0, -0.5), {1}));
  CHECK(sig.infiniteMultiplicities.empty());
}

TEST_CASE("a single jordan chain is recovered with its full length") {
  auto L = materializeKcf(KCFSpec{{jordan(3, Complex(0.5, 0.0))}});
  auto sig = completeEigenstructure(L.asPolynomial(), kTol);
  CHECK(sig.rank == 3);
  REQUIRE(sig.finiteStructure.size() == 1);
  CHECK(hasFinite(sig, Complex(0.5, 0.0), {3}));
}

TEST_CASE("an infinite chain is recovered through the reversal") {
  auto L = materializeKcf(KCFSpec{{jordanInf(2), jordan(1, Complex(-1.0, 0.3))}});
  auto sig = completeEigenstructure(L.asPolynomial(), kTol);
  CHECK(sig.rank == 3);
  CHECK(sig.infiniteMultiplicities == IndexList{2});
  CHECK(hasFinite(sig, Complex(-1.0, 0.3), {1}));
}

TEST_CASE("singular pencils mix minimal indices with divisors") {
  auto L = materializeKcf(KCFSpec{{right(1), jordan(1, Complex(1.0, 0.0)), left(1)}});
  auto sig = completeEigenstructure(L.asPolynomial(), kTol);
  CHECK(sig.rank == 3);
  CHECK(sig.rightMinimalIndices == IndexList{1});
  CHECK(sig.leftMinimalIndices == IndexList{1});
  CHECK(hasFinite(sig, Complex(1.0, 0.0), {1}));
  CHECK(sig.indexSum() == 3);
}

TEST_CASE("signature comparison pairs nearby eigenvalues within the tolerance") {
  StructureSignature a;
  a.m = a.n = 2;
  a.grade = 1;
  a.rank = 2;
  a.finiteStructure = {FiniteEigenvalue{Complex(1.0, 0.0), {2}}};
  StructureSignature b = a;
  b.finiteStructure[0].value += Complex(1e-8, -1e-8);
  CHECK(signaturesMatch(a, b));
  b.finiteStructure[0].value += Complex(1e-3, 0.0);
  CHECK(!signaturesMatch(a, b));
  b = a;
  b.finiteStructure[0].multiplicities = {1, 1};
  CHECK(!signaturesMatch(a, b));
}

TEST_CASE("index-only matching rejects any elementary divisor") {
  StructureSignature target;
  target.m = 2;
  target.n = 3;
  target.grade = 2;
  target.rank = 1;
  target.rightMinimalIndices = {0, 1};
  target.leftMinimalIndices = {1};
  StructureSignature computed = target;
  CHECK(matchesIndexOnlySignature(computed, target));
  computed.finiteStructure = {FiniteEigenvalue{Complex(0.3, 0.0), {1}}};
  CHECK(!matchesIndexOnlySignature(computed, target));
  computed = target;
  computed.rightMinimalIndices = {1, 0};
  CHECK(!matchesIndexOnlySignature(computed, target));  // multisets are kept sorted
}

TEST_CASE("canonical block multisets survive materialize-analyze round trips") {
  std::vector<KCFSpec> specs = {
      KCFSpec{{right(0), jordan(2, Complex(1.5, 0.0)), left(1)}},
      KCFSpec{{right(2), left(0), jordanInf(1), jordan(1, Complex(0.0, 1.0))}},
      KCFSpec{{jordan(2, Complex(1.0, 0.0)), jordan(1, Complex(1.0, 0.0)), right(1)}},
      KCFSpec{{left(2), jordan(1, Complex(-0.7, 0.2)), jordan(1, Complex(0.9, -0.4))}},
  };
  for (const auto& spec : specs) {
    auto recovered = kcfOfPencil(materializeKcf(spec), kTol);
    CHECK(sameBlocks(spec, recovered, 1e-6));
  }
}

TEST_CASE("block multiset signatures agree with direct analysis") {
  KCFSpec spec{{right(1), jordan(2, Complex(0.5, 0.0)), jordanInf(1), left(0)}};
  auto expected = signatureOfKcf(spec);
  CHECK(expected.rank == 4);
  auto sig = completeEigenstructure(materializeKcf(spec).asPolynomial(), kTol);
  CHECK(signaturesMatch(sig, expected));
}

TEST_CASE("strict equivalence transformations leave the signature invariant") {
  KCFSpec spec{{right(1), jordan(2, Complex(-0.3, 0.8)), jordan(1, Complex(-0.3, 0.8)), left(1)}};
  auto L = materializeKcf(spec);
  auto expected = signatureOfKcf(spec);
  auto rng = makeRng(777u);
  for (int t = 0; t < 5; ++t) {
    auto U = randomWellConditioned(L.rows(), 40.0, rng);
    auto V = randomWellConditioned(L.cols(), 40.0, rng);
    Pencil T(U * L.lambdaPart() * V, U * L.constantPart() * V);
    auto sig = completeEigenstructure(T.asPolynomial(), kTol, 1000u + t);
    CHECK(signaturesMatch(sig, expected, 1e-5));
  }
}

TEST_CASE("eigenvalue clusters from a double root snap to one point") {
  // companion-based candidates for a double eigenvalue scatter by roughly the
  // square root of the backward error; the cluster centroid must still land
  // close enough for the multiplicity validation to count both copies
  KCFSpec spec{{jordan(2, Complex(2.0, 1.0)), jordan(1, Complex(-1.0, 0.0))}};
  auto L = materializeKcf(spec);
  auto rng = makeRng(4242u);
  auto U = randomWellConditioned(3, 25.0, rng);
  auto V = randomWellConditioned(3, 25.0, rng);
  auto sig = completeEigenstructure(Pencil(U * L.lambdaPart() * V, U * L.constantPart() * V).asPolynomial(), kTol);
  CHECK(hasFinite(sig, Complex(2.0, 1.0), {2}, 1e-5));
  CHECK(hasFinite(sig, Complex(-1.0, 0.0), {1}, 1e-5));
}
