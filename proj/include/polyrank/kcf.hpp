#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyrank/eigenstructure.hpp"
#include "polyrank/pencil.hpp"
#include "polyrank/types.hpp"

namespace polyrank {

enum class KCFBlockKind {
  Jordan,         ///< eigenvalue mu, size j: materialized as lambda*I_j + J_j(-mu)
  JordanInf,      ///< eigenvalue at infinity, size j: lambda*J_j(0) + I_j
  RightSingular,  ///< L_k = lambda*G_k + F_k, size k x (k+1); k = 0 allowed
  LeftSingular    ///< transposed L_k, size (k+1) x k
};

struct KCFBlock {
  KCFBlockKind kind;
  int size = 0;          ///< j for regular blocks, k for singular blocks
  Complex eigenvalue{};  ///< meaningful for Jordan only

  int rows() const;
  int cols() const;
};

/// Multiset of canonical blocks describing a pencil up to strict equivalence.
struct KCFSpec {
  std::vector<KCFBlock> blocks;

  int rows() const;
  int cols() const;
  /// sort blocks by (kind, size, eigenvalue) so multiset comparison is stable
  void canonicalize();
  std::string toString() const;
};

/// Blockwise equality; Jordan eigenvalues compared up to eigTol.
bool sameBlocks(const KCFSpec& a, const KCFSpec& b, double eigTol = 0.0);

/// Exact direct sum of the canonical blocks.
Pencil materializeKcf(const KCFSpec& spec);

/// Canonical form of a pencil recovered through the grade-1 eigenstructure
/// analysis: right/left minimal indices become L_k / transposed L_k blocks,
/// finite eigenvalues Jordan blocks and infinite multiplicities JordanInf
/// blocks.
KCFSpec kcfOfPencil(const Pencil& pencil, const ToleranceProfile& tol,
                    std::uint64_t probeSeed = kDefaultProbeSeed);

/// Signature equivalent to a block multiset (m, n, grade 1); used to compare
/// block lists against analysis output.
StructureSignature signatureOfKcf(const KCFSpec& spec);

}  // namespace polyrank
