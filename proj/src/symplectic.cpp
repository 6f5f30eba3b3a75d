#include "csym/symplectic.hpp"

#include "csym/cohomology.hpp"

namespace csym {

namespace {

void require_even(const Model& model) {
  if (model.dim() % 2 != 0)
    throw Error(Errc::OddDimension, "complex symplectic forms need even dimension, got " + std::to_string(model.dim()));
}

Monomial holomorphic_volume(int m) { return Monomial((1u << m) - 1, 0); }

}  // namespace

SymplecticVerdict is_symplectic(std::shared_ptr<const Model> model, const CForm& sigma) {
  require_even(*model);
  if (sigma.dim() != model->dim()) throw Error(Errc::DimensionMismatch, "sigma has the wrong dimension");
  for (const auto& [p, q] : sigma.bidegrees())
    if (p != 2 || q != 0) throw Error(Errc::WrongBidegree, "sigma must be a (2,0)-form");
  const int n = model->dim() / 2;
  SymplecticVerdict out;
  if (!model->d(sigma).is_zero()) {
    out.reason = "not d-closed";
    return out;
  }
  if (power(sigma, n).coefficient(holomorphic_volume(model->dim())).is_zero()) {
    out.reason = "degenerate";
    return out;
  }
  const GaussRat norm = model->integrate(power(wedge(sigma, conjugate_form(sigma)), n));
  out.form = SymplecticForm{std::move(model), sigma, n, norm};
  return out;
}

SymplecticForm require_symplectic(std::shared_ptr<const Model> model, const CForm& sigma) {
  auto v = is_symplectic(std::move(model), sigma);
  if (!v.yes()) throw Error(Errc::NotSymplectic, "sigma is not symplectic: " + v.reason);
  return *v.form;
}

std::vector<CForm> closed_20_space(const Model& model) {
  const auto ambient = enumerate_basis(model.dim(), 2, 0);
  const auto target = enumerate_degree(model.dim(), 3);
  const auto dm = operator_matrix(ambient, target, [&model](const Monomial& a) {
    return model.d(CForm::monomial(model.dim(), a));
  });
  std::vector<CForm> out;
  for (const auto& v : kernel_basis(dm)) out.push_back(form_from_coordinates(model.dim(), ambient, v));
  return out;
}

std::size_t dbar_closed_20_dim(const Model& model) {
  const auto ambient = enumerate_basis(model.dim(), 2, 0);
  const auto target = enumerate_basis(model.dim(), 2, 1);
  const auto dm = operator_matrix(ambient, target, [&model](const Monomial& a) {
    return model.delbar(CForm::monomial(model.dim(), a));
  });
  return ambient.size() - rank(dm);
}

CForm SymplecticLocus::form_at(const Binding& binding) const {
  CForm out(dim);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto it = binding.find(coordinates[i]);
    if (it == binding.end()) throw Error(Errc::UnboundParameter, "no value for " + coordinates[i]);
    out += it->second * basis[i];
  }
  return out;
}

SymplecticLocus symplectic_locus(const Model& model) {
  require_even(model);
  const int m = model.dim();
  SymplecticLocus out;
  out.dim = m;
  out.basis = closed_20_space(model);
  out.dbar_closed_dim = dbar_closed_20_dim(model);
  PForm generic(m);
  for (std::size_t i = 0; i < out.basis.size(); ++i) {
    out.coordinates.push_back("a" + std::to_string(i + 1));
    PForm term = promote(out.basis[i]);
    term *= ParamPoly::variable(out.coordinates.back());
    generic += term;
  }
  out.polynomial = power(generic, m / 2).coefficient(holomorphic_volume(m));
  return out;
}

}  // namespace csym
