#include "csym/model.hpp"

#include "csym/text.hpp"

namespace csym {

namespace {

std::string generator_name(bool wbar, int i) { return (wbar ? "w" : "f") + std::to_string(i); }

}  // namespace

Model::Model(int m, std::vector<CForm> d_phi, std::vector<std::optional<CForm>> d_wbar, Rational mu,
             Binding params, std::string name)
    : m_(m), mu_(std::move(mu)), params_(std::move(params)), name_(std::move(name)) {
  if (m < 1 || m > kMaxDim)
    throw Error(Errc::InvalidModel, "dimension must be within 1.." + std::to_string(kMaxDim));
  if (mu_.sign() <= 0) throw Error(Errc::InvalidModel, "volume normalization mu must be positive");
  if (d_phi.size() > static_cast<std::size_t>(m) || d_wbar.size() > static_cast<std::size_t>(m))
    throw Error(Errc::InvalidModel, "more structure equations than generators");
  d_phi.resize(m, CForm(m));
  d_wbar.resize(m);

  for (int i = 1; i <= m; ++i) {
    CForm& dp = d_phi[i - 1];
    if (dp.dim() != m) {
      if (!dp.is_zero()) throw Error(Errc::DimensionMismatch, "d" + generator_name(false, i) + " has the wrong dimension", {}, generator_name(false, i));
      dp = CForm(m);
    }
    if (!dp.has_total_degree(2))
      throw Error(Errc::InvalidModel, "d" + generator_name(false, i) + " must be a 2-form", {}, generator_name(false, i));
    if (!bidegree_component(dp, 0, 2).is_zero())
      throw Error(Errc::NotIntegrable, "d" + generator_name(false, i) + " has a (0,2) component", {}, generator_name(false, i));
    d_phi_.push_back(dp);

    CForm dw = conjugate_form(dp);
    if (d_wbar[i - 1]) {
      dw = *d_wbar[i - 1];
      if (dw.dim() != m) {
        if (!dw.is_zero()) throw Error(Errc::DimensionMismatch, "d" + generator_name(true, i) + " has the wrong dimension", {}, generator_name(true, i));
        dw = CForm(m);
      }
      if (!dw.has_total_degree(2))
        throw Error(Errc::InvalidModel, "d" + generator_name(true, i) + " must be a 2-form", {}, generator_name(true, i));
      if (!bidegree_component(dw, 2, 0).is_zero())
        throw Error(Errc::NotIntegrable, "d" + generator_name(true, i) + " has a (2,0) component", {}, generator_name(true, i));
    }
    if (dw != conjugate_form(dp)) conjugation_compatible_ = false;
    d_wbar_.push_back(std::move(dw));
  }

  // Leibniz extension over every monomial.
  table_.assign(std::size_t{1} << (2 * m), CForm(m));
  for (std::uint32_t h = 0; h < (1u << m); ++h)
    for (std::uint32_t a = 0; a < (1u << m); ++a) {
      const Monomial mono(h, a);
      std::vector<std::pair<bool, int>> factors;
      for (int i : mono.holo_indices()) factors.emplace_back(false, i);
      for (int i : mono.anti_indices()) factors.emplace_back(true, i);
      CForm out(m);
      std::uint32_t pre_h = 0, pre_a = 0;
      for (std::size_t j = 0; j < factors.size(); ++j) {
        const auto [is_wbar, idx] = factors[j];
        const std::uint32_t bit = 1u << (idx - 1);
        const Monomial prefix(pre_h, pre_a);
        const Monomial suffix(h & ~(pre_h | (is_wbar ? 0u : bit)), a & ~(pre_a | (is_wbar ? bit : 0u)));
        const CForm& dg = is_wbar ? d_wbar_[idx - 1] : d_phi_[idx - 1];
        CForm piece = wedge(wedge(CForm::monomial(m, prefix), dg), CForm::monomial(m, suffix));
        if (j % 2 == 1) piece = -piece;
        out += piece;
        if (is_wbar) pre_a |= bit; else pre_h |= bit;
      }
      table_[slot(mono)] = std::move(out);
    }

  for (int i = 1; i <= m; ++i) {
    if (!d(d_phi_[i - 1]).is_zero())
      throw Error(Errc::NotClosedSquare, "d^2(" + generator_name(false, i) + ") != 0", {}, generator_name(false, i));
    if (!d(d_wbar_[i - 1]).is_zero())
      throw Error(Errc::NotClosedSquare, "d^2(" + generator_name(true, i) + ") != 0", {}, generator_name(true, i));
  }

  // Unimodularity: d of every (2m-1)-form integrates to zero.
  for (const Monomial& mono : enumerate_degree(m, 2 * m - 1)) {
    if (!d(mono).coefficient(Monomial::top(m)).is_zero())
      throw Error(Errc::StokesViolation,
                  "integral of d(" + format_monomial(mono) + ") is nonzero; the structure is not unimodular");
  }
}

const CForm& Model::d_phi(int i) const {
  if (i < 1 || i > m_) throw Error(Errc::IndexOutOfRange, "generator index out of range");
  return d_phi_[i - 1];
}

const CForm& Model::d_wbar(int i) const {
  if (i < 1 || i > m_) throw Error(Errc::IndexOutOfRange, "generator index out of range");
  return d_wbar_[i - 1];
}

bool Model::wbar_explicit(int i) const { return d_wbar(i) != conjugate_form(d_phi(i)); }

void Model::check(const CForm& f) const {
  if (f.dim() != m_)
    throw Error(Errc::DimensionMismatch,
                "form of dimension " + std::to_string(f.dim()) + " on a model of dimension " + std::to_string(m_));
}

const CForm& Model::d(const Monomial& mono) const {
  if (!mono.fits(m_)) throw Error(Errc::IndexOutOfRange, "monomial outside the model dimension");
  return table_[slot(mono)];
}

CForm Model::d(const CForm& f) const {
  check(f);
  CForm out(m_);
  for (const auto& [mono, c] : f.terms()) {
    CForm piece = d(mono);
    piece *= c;
    out += piece;
  }
  return out;
}

CForm Model::del(const CForm& f) const {
  check(f);
  CForm out(m_);
  for (const auto& [mono, c] : f.terms()) {
    CForm piece = bidegree_component(d(mono), mono.p() + 1, mono.q());
    piece *= c;
    out += piece;
  }
  return out;
}

CForm Model::delbar(const CForm& f) const {
  check(f);
  CForm out(m_);
  for (const auto& [mono, c] : f.terms()) {
    CForm piece = bidegree_component(d(mono), mono.p(), mono.q() + 1);
    piece *= c;
    out += piece;
  }
  return out;
}

GaussRat Model::integrate(const CForm& f) const {
  check(f);
  return GaussRat(mu_) * f.coefficient(Monomial::top(m_));
}

Model Model::with_mu(Rational mu) const {
  if (mu.sign() <= 0) throw Error(Errc::InvalidModel, "volume normalization mu must be positive");
  Model out = *this;
  out.mu_ = std::move(mu);
  return out;
}

bool operator==(const Model& a, const Model& b) {
  return a.m_ == b.m_ && a.d_phi_ == b.d_phi_ && a.d_wbar_ == b.d_wbar_ && a.mu_ == b.mu_ && a.params_ == b.params_;
}

Model make_builtin(Model model) {
  model.builtin_ = true;
  return model;
}

Model torus_model(int m) {
  return make_builtin(Model(m, {}, {}, Rational(1), {}, "torus:m=" + std::to_string(m)));
}

Model iwasawa_model() {
  std::vector<CForm> d_phi(4, CForm(4));
  d_phi[2] = parse_form("-f12", 4);
  return make_builtin(Model(4, std::move(d_phi), {}, Rational(1), {}, "iwasawa4"));
}

Model nakamura_model(const GaussRat& t) {
  if (t.norm2() == Rational(1))
    throw Error(Errc::SingularParameter, "nakamura4 needs |t| != 1 (structure constants divide by 1 - |t|^2)");
  const Binding b{{"t", t}};
  auto eq = [&b](std::string_view text) { return parse_form(text, 4, b, Errc::SingularParameter); };
  std::vector<CForm> d_phi(4, CForm(4));
  std::vector<std::optional<CForm>> d_wbar(4, CForm(4));
  // The (0,1)-coframe of this example is not the conjugate of the (1,0)-coframe,
  // so both halves of the structure equations are given.
  d_phi[1] = eq("-1/(1 - t*t~)*f12 + t/(1 - t*t~)*f2w1");
  d_phi[2] = eq("1/(1 - t*t~)*f13 - t/(1 - t*t~)*f3w1");
  d_wbar[1] = eq("-1/(1 - t*t~)*f1w2 - t/(1 - t*t~)*w12");
  d_wbar[2] = eq("1/(1 - t*t~)*f1w3 + t/(1 - t*t~)*w13");
  return make_builtin(Model(4, std::move(d_phi), std::move(d_wbar), Rational(1), b, "nakamura4:t=" + t.to_string()));
}

Model builtin_model(std::string_view name, const Binding& bindings) {
  auto require = [&](const std::string& key) -> const GaussRat& {
    auto it = bindings.find(key);
    if (it == bindings.end())
      throw Error(Errc::UnboundParameter, "builtin model '" + std::string(name) + "' needs " + key);
    return it->second;
  };
  if (name == "torus") {
    const GaussRat& m = require("m");
    if (!m.is_real() || !m.re().is_integer() || m.re().sign() <= 0)
      throw Error(Errc::InvalidModel, "torus dimension must be a positive integer");
    return torus_model(std::stoi(m.re().numerator()));
  }
  if (name == "iwasawa4") return iwasawa_model();
  if (name == "nakamura4") return nakamura_model(require("t"));
  throw Error(Errc::UnknownModel, "unknown builtin model '" + std::string(name) + "'");
}

}  // namespace csym
