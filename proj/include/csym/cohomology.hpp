#pragma once

// Cohomology of the invariant complex as kernel modulo image over the full
// monomial basis of a (bi)degree.

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "csym/matrix.hpp"
#include "csym/model.hpp"

namespace csym {

enum class Theory { DeRham, Dolbeault, BottChern, Aeppli };

const char* theory_name(Theory t) noexcept;
/// Accepts "derham"/"de-rham", "dolbeault", "bc"/"bott-chern", "aeppli".
Theory parse_theory(std::string_view text);

/// Matrix of a linear operator between two monomial lists; column j holds the
/// coordinates of op(src[j]) on dst.
template <class Op>
Matrix<GaussRat> operator_matrix(const std::vector<Monomial>& src, const std::vector<Monomial>& dst, Op op) {
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < dst.size(); ++i) index.emplace(dst[i], i);
  Matrix<GaussRat> out(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const auto image = op(src[j]);
    for (const auto& [mono, c] : image.terms()) {
      auto it = index.find(mono);
      if (it == index.end()) throw Error(Errc::WrongBidegree, "operator leaves the target space");
      out(it->second, j) = c;
    }
  }
  return out;
}

class CohomologySpace {
 public:
  /// For de Rham, p is the total degree and q is -1.
  CohomologySpace(std::shared_ptr<const Model> model, Theory theory, int p, int q);

  Theory theory() const { return theory_; }
  int p() const { return p_; }
  int q() const { return q_; }
  int degree() const { return q_ < 0 ? p_ : p_ + q_; }
  const Model& model() const { return *model_; }
  std::size_t dim() const { return basis_.size(); }

  /// Monomials spanning the ambient cochain space.
  const std::vector<Monomial>& ambient() const { return ambient_; }
  const std::vector<CForm>& basis() const { return basis_; }
  /// Spanning set (not necessarily independent) of the exact forms.
  std::vector<CForm> exact_spanning() const;

  bool is_closed(const CForm& f) const;
  bool is_exact(const CForm& f) const;
  /// Class coordinates of a closed form. Throws NotClosed, or NotInCohomology
  /// if the form cannot be decomposed (never for a consistent space).
  Vector<GaussRat> coordinates(const CForm& f) const;
  CForm representative(const Vector<GaussRat>& coords) const;

  /// "H^{p,q}_BC", "H^2_dR", ...
  std::string label() const;

 private:
  std::shared_ptr<const Model> model_;
  Theory theory_;
  int p_;
  int q_;
  std::vector<Monomial> ambient_;
  Matrix<GaussRat> closed_;  // closedness conditions, rows = constraints
  Matrix<GaussRat> exact_;   // columns span the exact forms
  std::vector<CForm> basis_;
  std::vector<Vector<GaussRat>> basis_coords_;
  SpanSolver<GaussRat> decompose_;  // over [basis | exact]
  SpanSolver<GaussRat> exact_solver_;
};

struct ClassVector {
  std::shared_ptr<const CohomologySpace> space;
  Vector<GaussRat> coords;

  CForm representative() const { return space->representative(coords); }
};

struct NaturalMap {
  Matrix<GaussRat> matrix;
  std::size_t rank = 0;
  bool injective() const { return rank == matrix.cols(); }
  bool surjective() const { return rank == matrix.rows(); }
  bool bijective() const { return injective() && surjective(); }
};

struct DdbarVerdict {
  bool holds = true;
  std::optional<std::pair<int, int>> witness;  // first failing (p,q)
  /// The invariant complex is only known to compute the manifold cohomology
  /// for builtin models.
  bool caveat = false;
};

struct PairingCheck {
  Matrix<GaussRat> matrix;
  bool nondegenerate = false;
};

class CohomologyEngine {
 public:
  explicit CohomologyEngine(std::shared_ptr<const Model> model) : model_(std::move(model)) {}

  const Model& model() const { return *model_; }
  std::shared_ptr<const Model> model_ptr() const { return model_; }

  /// Cached; safe to call concurrently.
  std::shared_ptr<const CohomologySpace> space(Theory theory, int p, int q = -1) const;
  std::shared_ptr<const CohomologySpace> dolbeault(int p, int q) const { return space(Theory::Dolbeault, p, q); }
  std::shared_ptr<const CohomologySpace> bott_chern(int p, int q) const { return space(Theory::BottChern, p, q); }
  std::shared_ptr<const CohomologySpace> aeppli(int p, int q) const { return space(Theory::Aeppli, p, q); }
  std::shared_ptr<const CohomologySpace> de_rham(int k) const { return space(Theory::DeRham, k, -1); }

  ClassVector class_of(Theory theory, const CForm& f) const;

  NaturalMap bc_to_dolbeault(int p, int q) const;
  /// Scans bidegrees by total degree, then by descending p.
  DdbarVerdict ddbar_verdict() const;
  /// Pairing H^{p,q} x H^{m-p,m-q} (Dolbeault) by integration.
  PairingCheck serre_pairing_check(int p, int q) const;
  /// Class of the conjugate representative, in the (q,p) space (same degree for de Rham).
  ClassVector conjugate_class(const ClassVector& v) const;

  std::size_t cached_spaces() const;

 private:
  std::shared_ptr<const Model> model_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::tuple<Theory, int, int>, std::shared_ptr<const CohomologySpace>> cache_;
};

}  // namespace csym
