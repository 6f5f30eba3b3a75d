#pragma once

// Complex symplectic (2,0)-forms on even-dimensional models.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "csym/model.hpp"

namespace csym {

struct SymplecticForm {
  std::shared_ptr<const Model> model;
  CForm sigma;
  int n = 0;  // model dimension is 2n
  GaussRat normalization;  // integral of (sigma ^ conj(sigma))^n

  bool normalized() const { return normalization == GaussRat(1); }
};

struct SymplecticVerdict {
  std::optional<SymplecticForm> form;
  std::string reason;  // empty on success
  bool yes() const { return form.has_value(); }
};

/// Throws OddDimension, WrongBidegree (sigma must be of type (2,0)).
SymplecticVerdict is_symplectic(std::shared_ptr<const Model> model, const CForm& sigma);

/// Like is_symplectic but throws NotSymplectic with the reason.
SymplecticForm require_symplectic(std::shared_ptr<const Model> model, const CForm& sigma);

/// Basis of the d-closed (2,0)-forms.
std::vector<CForm> closed_20_space(const Model& model);
/// Dimension of the dbar-closed (2,0)-forms.
std::size_t dbar_closed_20_dim(const Model& model);

struct SymplecticLocus {
  int dim = 0;
  std::vector<CForm> basis;
  std::vector<std::string> coordinates;  // a1..ak
  /// Top (2n,0) coefficient of (sum a_i e_i)^n; nonzero exactly on symplectic forms.
  ParamPoly polynomial;
  std::size_t dbar_closed_dim = 0;
  /// dbar-closed (2,0)-forms that are not d-closed.
  std::size_t gap() const { return dbar_closed_dim - basis.size(); }

  /// sum a_i e_i at a binding of the coordinates.
  CForm form_at(const Binding& binding) const;
};

/// Throws OddDimension.
SymplecticLocus symplectic_locus(const Model& model);

}  // namespace csym
