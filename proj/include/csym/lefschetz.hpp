#pragma once

// Wedge operators [a] -> [tau^k ^ a] on cohomology.

#include <memory>
#include <vector>

#include "csym/cohomology.hpp"

namespace csym {

struct LefschetzMap {
  Theory theory = Theory::Dolbeault;
  CForm tau;
  int power = 0;
  std::shared_ptr<const CohomologySpace> source;
  std::shared_ptr<const CohomologySpace> target;
  /// Column j: target coordinates of [tau^k ^ source basis_j].
  Matrix<GaussRat> matrix;
};

/// Source (p,q); for de Rham, p is the degree and q is ignored. Throws
/// NotClosedTau, WrongBidegree (tau not of pure (bi)degree), TargetOutOfRange.
LefschetzMap lefschetz_matrix(const CohomologyEngine& engine, Theory theory, const CForm& tau, int k, int p, int q);

enum class LefschetzKind { Isomorphism, InjectiveOnly, Kernel };

const char* lefschetz_kind_name(LefschetzKind kind) noexcept;

struct LefschetzCheck {
  LefschetzKind kind = LefschetzKind::Isomorphism;
  std::size_t rank = 0;
  std::size_t cokernel_dim = 0;
  std::vector<Vector<GaussRat>> kernel;  // source coordinates
};

LefschetzCheck lefschetz_check(const LefschetzMap& map);

}  // namespace csym
