#pragma once

// A compact complex manifold presented by invariant structure equations:
// the values d(phi_i) and d(wbar_i) on the coframe, extended to all forms by
// the Leibniz rule.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csym/exterior.hpp"
#include "csym/param_poly.hpp"
#include "csym/scalar.hpp"

namespace csym {

class Model {
 public:
  /// Validates and builds a model. `d_wbar[i]` left empty means
  /// d(wbar_{i+1}) = conj(d(phi_{i+1})). Throws InvalidModel, NotIntegrable,
  /// NotClosedSquare, StokesViolation.
  Model(int m, std::vector<CForm> d_phi, std::vector<std::optional<CForm>> d_wbar = {},
        Rational mu = Rational(1), Binding params = {}, std::string name = "");

  int dim() const { return m_; }
  const Rational& mu() const { return mu_; }
  const Binding& params() const { return params_; }
  const std::string& name() const { return name_; }
  /// Same structure equations with another volume normalization.
  Model with_mu(Rational mu) const;
  /// Builtin models carry manifold-level guarantees; user models do not.
  bool is_builtin() const { return builtin_; }

  /// d(phi_i), d(wbar_i) for 1-based i.
  const CForm& d_phi(int i) const;
  const CForm& d_wbar(int i) const;
  /// True if d(wbar_i) differs from conj(d(phi_i)).
  bool wbar_explicit(int i) const;
  /// d commutes with the formal conjugation phi_i <-> wbar_i on generators.
  bool conjugation_compatible() const { return conjugation_compatible_; }

  const CForm& d(const Monomial& mono) const;
  CForm d(const CForm& f) const;
  CForm del(const CForm& f) const;
  CForm delbar(const CForm& f) const;
  CForm del_delbar(const CForm& f) const { return del(delbar(f)); }

  /// mu * (top coefficient of the (m,m) component); lower components give 0.
  GaussRat integrate(const CForm& f) const;

  friend bool operator==(const Model& a, const Model& b);

 private:
  friend Model make_builtin(Model model);
  std::size_t slot(const Monomial& mono) const { return (std::size_t{mono.holo_mask()} << m_) | mono.anti_mask(); }
  void check(const CForm& f) const;

  int m_;
  std::vector<CForm> d_phi_;
  std::vector<CForm> d_wbar_;
  Rational mu_;
  Binding params_;
  std::string name_;
  bool builtin_ = false;
  bool conjugation_compatible_ = true;
  std::vector<CForm> table_;  // d of every monomial, indexed by slot()
};

Model torus_model(int m);
/// Iwasawa threefold times an elliptic curve: d(phi_3) = -phi_1 ^ phi_2.
Model iwasawa_model();
/// Deformed Nakamura threefold times an elliptic curve at parameter t
/// (SingularParameter when |t| = 1).
Model nakamura_model(const GaussRat& t);
/// name in {torus, iwasawa4, nakamura4}; torus needs binding "m", nakamura4 needs "t".
Model builtin_model(std::string_view name, const Binding& bindings = {});

}  // namespace csym
