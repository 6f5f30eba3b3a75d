#pragma once

// The Beauville-Bogomolov-Fujiki form of a complex symplectic model:
//
//   q(a) = (n/2) int (s sbar)^{n-1} a^2 + (1-n) (int s^{n-1} sbar^n a)(int s^n sbar^{n-1} a)
//
// on H^2_dR, its Gram matrix, kernel, signatures and the quadric verdicts.
// Class vectors here are coordinates on the context basis of H^2.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "csym/cohomology.hpp"
#include "csym/symplectic.hpp"

namespace csym {

class BbfContext {
 public:
  /// `basis` overrides the engine's de Rham basis of H^2 with d-closed
  /// representatives. Throws UnnormalizedSigma (unless allowed), InvalidBasis,
  /// NotClosedRepresentative.
  BbfContext(std::shared_ptr<const CohomologyEngine> engine, SymplecticForm sigma,
             std::optional<std::vector<CForm>> basis = std::nullopt, bool allow_unnormalized = false);

  const CohomologyEngine& engine() const { return *engine_; }
  const SymplecticForm& sigma() const { return sigma_; }
  const std::vector<CForm>& basis() const { return basis_; }
  std::size_t b2() const { return basis_.size(); }
  /// True when sigma is not normalized and the values depend on its scale.
  bool watermarked() const { return !sigma_.normalized(); }

  /// Coordinates of a d-closed 2-form on the context basis.
  Vector<GaussRat> coordinates(const CForm& alpha) const;
  CForm representative(const Vector<GaussRat>& coords) const;
  /// Context coordinates to engine de Rham coordinates.
  Vector<GaussRat> engine_coordinates(const Vector<GaussRat>& coords) const;

  GaussRat q(const CForm& alpha) const;
  GaussRat q(const Vector<GaussRat>& coords) const { return q(representative(coords)); }
  /// By polarization: (q(a+b) - q(a) - q(b)) / 2.
  GaussRat polar(const CForm& a, const CForm& b) const;
  /// Direct expansion of the bilinear form; independent of polar().
  GaussRat polar_direct(const CForm& a, const CForm& b) const;

  /// Conjugation on context coordinates: conj(v) = K * vbar. Throws
  /// BasisNotConjugationStable if a conjugated basis form leaves H^2.
  const Matrix<GaussRat>& conjugation_matrix() const;
  Vector<GaussRat> conjugate(const Vector<GaussRat>& coords) const;

  const Matrix<GaussRat>& gram() const { return gram_; }

 private:
  void check_closed(const CForm& alpha) const;

  std::shared_ptr<const CohomologyEngine> engine_;
  SymplecticForm sigma_;
  std::vector<CForm> basis_;
  Matrix<GaussRat> to_engine_;  // columns: engine coordinates of the basis
  SpanSolver<GaussRat> from_engine_;
  CForm mixed_;  // (s sbar)^{n-1}
  CForm left_;   // s^{n-1} sbar^n
  CForm right_;  // s^n sbar^{n-1}
  Matrix<GaussRat> gram_;
  std::optional<Matrix<GaussRat>> conj_;
  std::string conj_error_;
};

/// Kernel of the Gram matrix.
std::vector<Vector<GaussRat>> bbf_kernel(const BbfContext& ctx);

/// Signature of the Gram matrix read in the context coordinates; nullopt when
/// some entry is not real. `block` columns restrict to a subspace (in reduced
/// echelon form).
std::optional<Signature> coordinate_signature(const BbfContext& ctx, const std::vector<Vector<GaussRat>>& block = {});
/// Signature on the real points of a conjugation-stable subspace (default all
/// of H^2), using the real vectors v + conj(v) and i(v - conj(v)). Throws
/// BasisNotConjugationStable, NonRealEntry.
Signature real_signature(const BbfContext& ctx, const std::vector<Vector<GaussRat>>& block = {});

/// Reduced echelon basis of the span of the given coordinate vectors.
std::vector<Vector<GaussRat>> echelon_span(std::size_t n, const std::vector<Vector<GaussRat>>& vectors);

struct Decomposition {
  std::vector<Vector<GaussRat>> v;    // span{[s], [sbar]}
  std::vector<Vector<GaussRat>> w;    // kernel
  std::vector<Vector<GaussRat>> h11;  // image of H^{1,1}
};

/// Throws DdbarRequired, DecompositionFailure.
Decomposition decomposition(const BbfContext& ctx);

struct OrthogonalityResult {
  GaussRat against_sigma;      // int s^n sbar^{n-1} tau02
  GaussRat against_sigma_bar;  // int s^{n-1} sbar^n tau20
  bool in_v_perp() const { return against_sigma.is_zero() && against_sigma_bar.is_zero(); }
};

/// Throws DdbarRequired, WrongBidegree, NotClosedRepresentative.
OrthogonalityResult orthogonality_condition(const BbfContext& ctx, const CForm& tau20, const CForm& tau02);

struct BcBlockData {
  std::size_t dim_20_02 = 0;  // image of BC^{2,0} + BC^{0,2} in H^2
  std::size_t rank_20_02 = 0;
  std::size_t dim_11 = 0;     // image of BC^{1,1} in H^2
  std::size_t rank_11 = 0;
  bool orthogonal = false;
};

struct QuadricReport {
  Matrix<GaussRat> gram;
  std::size_t rank = 0;
  std::vector<Vector<GaussRat>> kernel;
  std::optional<Signature> coordinate;
  std::optional<Signature> real_structure;
  std::string real_structure_error;  // set when real_structure is absent
  bool smooth = false;
  bool irreducible = false;
  bool ddbar = false;
  bool watermarked = false;
  std::optional<Decomposition> blocks;
  std::optional<Signature> h11_coordinate;
  std::optional<Signature> h11_real_structure;
  std::size_t h20 = 0;
  std::size_t h11 = 0;
  std::optional<BcBlockData> bc_blocks;  // only without the ddbar-lemma
};

/// Throws TheoremInconsistency if the rank predicates disagree with the Hodge
/// numbers on a ddbar model.
QuadricReport quadric_report(const BbfContext& ctx);

}  // namespace csym
