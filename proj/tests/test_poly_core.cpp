#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <vector>

#include "polyrank/matrix_polynomial.hpp"
#include "polyrank/pencil.hpp"
#include "polyrank/random.hpp"
#include "polyrank/rank.hpp"

using namespace polyrank;

namespace {

MatrixPolynomial scalarPoly(std::vector<Complex> cs) {
  std::vector<ComplexMatrix> coeffs;
  for (Complex c : cs) {
    ComplexMatrix A(1, 1);
    A(0, 0) = c;
    coeffs.push_back(A);
  }
  return MatrixPolynomial(1, 1, static_cast<int>(cs.size()) - 1, std::move(coeffs));
}

}  // namespace

TEST_CASE("constructor validates coefficient count and shapes") {
  std::vector<ComplexMatrix> two(2, ComplexMatrix::Zero(2, 2));
  CHECK_THROWS_AS(MatrixPolynomial(2, 2, 2, two), std::invalid_argument);
  std::vector<ComplexMatrix> bad = {ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(2, 3)};
  CHECK_THROWS_AS(MatrixPolynomial(2, 2, 1, bad), std::invalid_argument);
  CHECK_THROWS_AS(MatrixPolynomial(0, 2, 1, two), std::invalid_argument);
}

TEST_CASE("grade is kept while degree tracks the last nonzero coefficient") {
  auto p = MatrixPolynomial::zero(2, 3, 4);
  CHECK(p.grade() == 4);
  CHECK(!p.degree().has_value());
  CHECK(p.isZero());

  std::vector<ComplexMatrix> cs(5, ComplexMatrix::Zero(2, 3));
  cs[2](1, 1) = Complex(1.0, 0.0);
  MatrixPolynomial q(2, 3, 4, cs);
  CHECK(q.grade() == 4);
  REQUIRE(q.degree().has_value());
  CHECK(*q.degree() == 2);
  CHECK(!q.isZero());
}

TEST_CASE("evaluate agrees with the direct power sum") {
  auto p = randomPolynomial(3, 2, 3, 11u);
  const Complex z(0.37, -1.21);
  ComplexMatrix direct = ComplexMatrix::Zero(3, 2);
  Complex zi = 1.0;
  for (int i = 0; i <= 3; ++i, zi *= z) direct += zi * p.coeff(i);
  CHECK((evaluate(p, z) - direct).norm() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("reversal swaps the coefficient order and flips the variable") {
  auto p = randomPolynomial(2, 2, 3, 5u);
  CHECK(reversal(reversal(p)) == p);
  for (double r : {0.5, 0.9, 1.7}) {
    const Complex z(r, 0.4 * r);
    const Complex zd = std::pow(z, 3);
    const ComplexMatrix lhs = evaluate(reversal(p), z);
    const ComplexMatrix rhs = zd * evaluate(p, 1.0 / z);
    CHECK((lhs - rhs).norm() / rhs.norm() < 1e-10);
  }
}

TEST_CASE("transpose flips shape without conjugating") {
  std::vector<ComplexMatrix> cs(2, ComplexMatrix::Zero(2, 3));
  cs[1](0, 2) = Complex(1.0, 2.0);
  MatrixPolynomial p(2, 3, 1, cs);
  auto q = transpose(p);
  CHECK(q.rows() == 3);
  CHECK(q.cols() == 2);
  CHECK(q.coeff(1)(2, 0) == Complex(1.0, 2.0));
}

TEST_CASE("distance against zero is the frobenius norm") {
  auto p = randomPolynomial(2, 3, 2, 17u);
  CHECK(distance(p, MatrixPolynomial::zero(2, 3, 2)) == doctest::Approx(frobeniusNorm(p)));
  CHECK(frobeniusNorm(scaled(p, Complex(0.5, 0.0))) == doctest::Approx(0.5 * frobeniusNorm(p)));
  CHECK_THROWS_AS(distance(p, MatrixPolynomial::zero(2, 3, 3)), std::invalid_argument);
}

TEST_CASE("companion forms have the documented sizes") {
  auto p = randomPolynomial(2, 3, 2, 3u);
  auto c1 = firstCompanion(p);
  CHECK(c1.pencil().rows() == 5);  // m + n(d-1)
  CHECK(c1.pencil().cols() == 6);  // nd
  auto c2 = secondCompanion(p);
  CHECK(c2.pencil().rows() == 4);  // md
  CHECK(c2.pencil().cols() == 5);  // n + m(d-1)
}

TEST_CASE("scalar first companion reproduces the textbook 2x2 layout") {
  const Complex a0(1.0, 0.5), a1(-2.0, 0.0), a2(0.0, 3.0);
  auto p = scalarPoly({a0, a1, a2});
  auto c = firstCompanion(p);
  const auto& A = c.pencil().lambdaPart();
  const auto& B = c.pencil().constantPart();
  CHECK(A(0, 0) == a2);
  CHECK(A(1, 1) == Complex(1.0, 0.0));
  CHECK(A(0, 1) == Complex(0.0, 0.0));
  CHECK(A(1, 0) == Complex(0.0, 0.0));
  CHECK(B(0, 0) == a1);
  CHECK(B(0, 1) == a0);
  CHECK(B(1, 0) == Complex(-1.0, 0.0));
  CHECK(B(1, 1) == Complex(0.0, 0.0));
}

TEST_CASE("companion pattern check accepts fresh companions and rejects edits") {
  for (auto [m, n, d] : {std::tuple{2, 3, 2}, {3, 2, 3}, {2, 2, 1}, {3, 4, 4}}) {
    auto p = randomPolynomial(m, n, d, 7u);
    CHECK(hasExactCompanionPattern(firstCompanion(p)));
    CHECK(hasExactCompanionPattern(secondCompanion(p)));
  }
  auto p = randomPolynomial(2, 3, 3, 7u);
  auto c = firstCompanion(p);
  ComplexMatrix A = c.pencil().lambdaPart();
  A(2, 3) += Complex(1e-12, 0.0);  // poke an identity block entry
  CompanionPencil broken(Pencil(A, c.pencil().constantPart()), c.form(), 2, 3, 3);
  CHECK(!hasExactCompanionPattern(broken));
}

TEST_CASE("coefficients can be read back from both companion forms") {
  auto p = randomPolynomial(3, 2, 3, 23u);
  CHECK(polynomialFromCompanion(firstCompanion(p)) == p);
  CHECK(polynomialFromCompanion(secondCompanion(p)) == p);
}

TEST_CASE("the companion embedding preserves coefficient-wise distance") {
  auto p = randomPolynomial(3, 4, 3, 31u);
  auto q = randomPolynomial(3, 4, 3, 32u);
  const double dp = distance(p, q);
  const double dc = pencilDistance(firstCompanion(p).pencil(), firstCompanion(q).pencil());
  CHECK(dc == doctest::Approx(dp).epsilon(1e-13));
}

TEST_CASE("gaussian polynomials have the expected mean squared norm") {
  double sum = 0.0;
  const int trials = 400;
  for (int t = 0; t < trials; ++t) {
    auto p = randomPolynomial(2, 3, 2, 1000u + static_cast<std::uint64_t>(t));
    const double f = frobeniusNorm(p);
    sum += f * f;
  }
  // E|P|^2 = (d+1) m n = 18 for iid unit-variance complex entries
  CHECK(sum / trials == doctest::Approx(18.0).epsilon(0.1));
}

TEST_CASE("random unitary matrices are unitary") {
  auto rng = makeRng(91u);
  auto U = randomUnitary(5, rng);
  CHECK((U.adjoint() * U - ComplexMatrix::Identity(5, 5)).norm() < 1e-12);
}

TEST_CASE("well conditioned factors hit the requested condition number") {
  auto rng = makeRng(92u);
  auto M = randomWellConditioned(4, 50.0, rng);
  auto sv = singularValues(M);
  CHECK(sv(0) / sv(3) == doctest::Approx(50.0).epsilon(1e-8));
}

TEST_CASE("bounded rank samples evaluate to rank-r matrices") {
  ToleranceProfile tol;
  auto p = randomBoundedRank(3, 4, 2, 2, {1, 1}, 55u);
  CHECK(p.rows() == 3);
  CHECK(p.cols() == 4);
  CHECK(p.grade() == 2);
  CHECK(numericalRank(evaluate(p, Complex(0.7, 0.2)), tol) == 2);
  CHECK(numericalRank(evaluate(p, Complex(-1.1, 0.6)), tol) == 2);
}

TEST_CASE("unit norm pencils are normalized over both parts") {
  auto rng = makeRng(93u);
  auto E = randomUnitNormPencil(3, 5, rng);
  const double norm2 = E.lambdaPart().squaredNorm() + E.constantPart().squaredNorm();
  CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-12));
}
