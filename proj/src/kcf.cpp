#include "polyrank/kcf.hpp"

#include <algorithm>
#include <sstream>

namespace polyrank {

int KCFBlock::rows() const {
  switch (kind) {
    case KCFBlockKind::Jordan:
    case KCFBlockKind::JordanInf:
      return size;
    case KCFBlockKind::RightSingular:
      return size;
    case KCFBlockKind::LeftSingular:
      return size + 1;
  }
  return 0;
}

int KCFBlock::cols() const {
  switch (kind) {
    case KCFBlockKind::Jordan:
    case KCFBlockKind::JordanInf:
      return size;
    case KCFBlockKind::RightSingular:
      return size + 1;
    case KCFBlockKind::LeftSingular:
      return size;
  }
  return 0;
}

int KCFSpec::rows() const {
  int r = 0;
  for (const auto& b : blocks) r += b.rows();
  return r;
}

int KCFSpec::cols() const {
  int c = 0;
  for (const auto& b : blocks) c += b.cols();
  return c;
}

void KCFSpec::canonicalize() {
  std::sort(blocks.begin(), blocks.end(), [](const KCFBlock& a, const KCFBlock& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.size != b.size) return a.size < b.size;
    if (a.eigenvalue.real() != b.eigenvalue.real())
      return a.eigenvalue.real() < b.eigenvalue.real();
    return a.eigenvalue.imag() < b.eigenvalue.imag();
  });
}

std::string KCFSpec::toString() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << ", ";
    const auto& b = blocks[i];
    switch (b.kind) {
      case KCFBlockKind::Jordan:
        os << "J" << b.size << "(" << b.eigenvalue << ")";
        break;
      case KCFBlockKind::JordanInf:
        os << "J" << b.size << "(inf)";
        break;
      case KCFBlockKind::RightSingular:
        os << "L" << b.size;
        break;
      case KCFBlockKind::LeftSingular:
        os << "L" << b.size << "^T";
        break;
    }
  }
  os << "}";
  return os.str();
}

bool sameBlocks(const KCFSpec& a, const KCFSpec& b, double eigTol) {
  if (a.blocks.size() != b.blocks.size()) return false;
  KCFSpec ca = a, cb = b;
  ca.canonicalize();
  cb.canonicalize();
  std::vector<bool> used(cb.blocks.size(), false);
  for (const auto& ba : ca.blocks) {
    bool matched = false;
    for (std::size_t j = 0; j < cb.blocks.size(); ++j) {
      if (used[j]) continue;
      const auto& bb = cb.blocks[j];
      if (ba.kind != bb.kind || ba.size != bb.size) continue;
      if (ba.kind == KCFBlockKind::Jordan && std::abs(ba.eigenvalue - bb.eigenvalue) > eigTol)
        continue;
      used[j] = true;
      matched = true;
      break;
    }
    if (!matched) return false;
  }
  return true;
}

namespace {

// upper bidiagonal Jordan matrix: x on the diagonal, ones above
ComplexMatrix jordanMatrix(int size, Complex x) {
  ComplexMatrix J = ComplexMatrix::Zero(size, size);
  for (int i = 0; i < size; ++i) J(i, i) = x;
  for (int i = 0; i + 1 < size; ++i) J(i, i + 1) = Complex(1.0, 0.0);
  return J;
}

}  // namespace

Pencil materializeKcf(const KCFSpec& spec) {
  const int m = spec.rows(), n = spec.cols();
  ComplexMatrix A = ComplexMatrix::Zero(m, n);
  ComplexMatrix B = ComplexMatrix::Zero(m, n);
  int ro = 0, co = 0;
  for (const auto& b : spec.blocks) {
    switch (b.kind) {
      case KCFBlockKind::Jordan:
        // lambda*I + J(-mu); determinant (lambda - mu)^size
        A.block(ro, co, b.size, b.size) = ComplexMatrix::Identity(b.size, b.size);
        B.block(ro, co, b.size, b.size) = jordanMatrix(b.size, -b.eigenvalue);
        break;
      case KCFBlockKind::JordanInf:
        A.block(ro, co, b.size, b.size) = jordanMatrix(b.size, Complex(0.0, 0.0));
        B.block(ro, co, b.size, b.size) = ComplexMatrix::Identity(b.size, b.size);
        break;
      case KCFBlockKind::RightSingular:
        // lambda*[I 0] + [0 I], size k x (k+1)
        for (int i = 0; i < b.size; ++i) {
          A(ro + i, co + i) = Complex(1.0, 0.0);
          B(ro + i, co + i + 1) = Complex(1.0, 0.0);
        }
        break;
      case KCFBlockKind::LeftSingular:
        for (int i = 0; i < b.size; ++i) {
          A(ro + i, co + i) = Complex(1.0, 0.0);
          B(ro + i + 1, co + i) = Complex(1.0, 0.0);
        }
        break;
    }
    ro += b.rows();
    co += b.cols();
  }
  return Pencil(std::move(A), std::move(B));
}

KCFSpec kcfOfPencil(const Pencil& pencil, const ToleranceProfile& tol, std::uint64_t probeSeed) {
  const StructureSignature sig = completeEigenstructure(pencil.asPolynomial(), tol, probeSeed);
  KCFSpec spec;
  for (int e : sig.rightMinimalIndices)
    spec.blocks.push_back(KCFBlock{KCFBlockKind::RightSingular, e, Complex()});
  for (int e : sig.leftMinimalIndices)
    spec.blocks.push_back(KCFBlock{KCFBlockKind::LeftSingular, e, Complex()});
  for (const auto& fe : sig.finiteStructure)
    for (int j : fe.multiplicities)
      spec.blocks.push_back(KCFBlock{KCFBlockKind::Jordan, j, fe.value});
  for (int g : sig.infiniteMultiplicities)
    spec.blocks.push_back(KCFBlock{KCFBlockKind::JordanInf, g, Complex()});
  spec.canonicalize();
  return spec;
}

StructureSignature signatureOfKcf(const KCFSpec& spec) {
  StructureSignature sig;
  sig.m = spec.rows();
  sig.n = spec.cols();
  sig.grade = 1;
  for (const auto& b : spec.blocks) {
    switch (b.kind) {
      case KCFBlockKind::Jordan: {
        bool found = false;
        for (auto& fe : sig.finiteStructure) {
          if (fe.value == b.eigenvalue) {
            fe.multiplicities.push_back(b.size);
            found = true;
            break;
          }
        }
        if (!found) sig.finiteStructure.push_back(FiniteEigenvalue{b.eigenvalue, {b.size}});
        sig.rank += b.size;
        break;
      }
      case KCFBlockKind::JordanInf:
        sig.infiniteMultiplicities.push_back(b.size);
        sig.rank += b.size;
        break;
      case KCFBlockKind::RightSingular:
        sig.rightMinimalIndices.push_back(b.size);
        sig.rank += b.size;
        break;
      case KCFBlockKind::LeftSingular:
        sig.leftMinimalIndices.push_back(b.size);
        sig.rank += b.size;
        break;
    }
  }
  sig.canonicalize();
  return sig;
}

}  // namespace polyrank
