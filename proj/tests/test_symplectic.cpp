#include "doctest.h"
#include "csym/symplectic.hpp"
#include "csym/text.hpp"
#include "support.hpp"

using namespace csym;
using support::form;
using support::share;

namespace {

const GaussRat I = GaussRat::i();

// P(lambda * a) with lambda a fresh variable.
ParamPoly scale(const ParamPoly& p) {
  ParamPoly out;
  for (const auto& [mono, coeff] : p.terms()) {
    ParamPoly term(coeff);
    for (const auto& [var, exp] : mono.factors())
      for (unsigned e = 0; e < exp; ++e) term *= ParamPoly::variable("lambda") * ParamPoly::variable(var.name, var.conjugate);
    out += term;
  }
  return out;
}

ParamPoly lambda_power(int n) {
  ParamPoly out(1);
  for (int i = 0; i < n; ++i) out *= ParamPoly::variable("lambda");
  return out;
}

std::vector<Binding> grid(const std::vector<std::string>& coords, const std::vector<GaussRat>& values) {
  std::vector<Binding> out{{}};
  for (const auto& c : coords) {
    std::vector<Binding> next;
    for (const auto& b : out)
      for (const auto& v : values) {
        Binding nb = b;
        nb[c] = v;
        next.push_back(nb);
      }
    out = next;
  }
  return out;
}

}  // namespace

TEST_CASE("closed (2,0) spaces") {
  const auto names = [](const std::vector<CForm>& forms) {
    std::vector<std::string> out;
    for (const auto& f : forms) out.push_back(format_form(f));
    return out;
  };
  CHECK(names(closed_20_space(torus_model(2))) == std::vector<std::string>{"f12"});
  CHECK(names(closed_20_space(iwasawa_model())) == std::vector<std::string>{"f12", "f13", "f14", "f23", "f24"});
  CHECK(names(closed_20_space(nakamura_model(Rational(1, 2)))) == std::vector<std::string>{"f14", "f23"});
}

TEST_CASE("symplectic detection") {
  const auto iw = share(iwasawa_model());
  CHECK(is_symplectic(iw, form("f13 + f24")).yes());
  CHECK_FALSE(is_symplectic(iw, form("f13 + f14")).yes());
  CHECK(is_symplectic(iw, form("f13 + f14")).reason == "degenerate");
  const SymplecticVerdict v = is_symplectic(iw, form("f34"));
  CHECK_FALSE(v.yes());
  CHECK(v.reason == "not d-closed");

  const auto nak = share(nakamura_model(Rational(1, 2)));
  CHECK(is_symplectic(nak, form("f14 + 3*f23")).yes());
  CHECK_FALSE(is_symplectic(nak, form("f14")).yes());

  try {
    is_symplectic(share(torus_model(3)), form("f12", 3));
    FAIL("expected OddDimension");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OddDimension);
  }
  try {
    is_symplectic(iw, form("f1w1"));
    FAIL("expected WrongBidegree");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::WrongBidegree);
  }
  try {
    require_symplectic(iw, form("f34"));
    FAIL("expected NotSymplectic");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSymplectic);
  }
}

TEST_CASE("normalization") {
  const auto nak = share(nakamura_model(Rational(1, 2)));
  const SymplecticForm s = require_symplectic(nak, form("1/2*f14 + f23"));
  CHECK(s.n == 2);
  CHECK(s.normalized());
  const SymplecticForm raw = require_symplectic(nak, form("f14 + f23"));
  CHECK_FALSE(raw.normalized());
  CHECK(raw.normalization == GaussRat(4));
  const SymplecticForm scaled = require_symplectic(nak, (1 + I) * form("1/2*f14 + f23"));
  CHECK(scaled.normalization == GaussRat(4));
  const SymplecticForm heavy = require_symplectic(share(nak->with_mu(Rational(2))), form("1/2*f14 + f23"));
  CHECK(heavy.normalization == GaussRat(2));
}

TEST_CASE("locus polynomials") {
  const SymplecticLocus iw = symplectic_locus(iwasawa_model());
  CHECK(iw.coordinates == std::vector<std::string>{"a1", "a2", "a3", "a4", "a5"});
  CHECK(iw.polynomial == parse_poly("-2*(a2*a5 - a3*a4)"));
  CHECK(iw.dbar_closed_dim == 6);
  CHECK(iw.gap() == 1);

  const SymplecticLocus nak = symplectic_locus(nakamura_model(Rational(1, 2)));
  CHECK(nak.polynomial == parse_poly("2*a1*a2"));
  CHECK(nak.gap() == 0);

  const SymplecticLocus t2 = symplectic_locus(torus_model(2));
  CHECK(t2.polynomial == parse_poly("a1"));
  CHECK_THROWS_AS(symplectic_locus(torus_model(3)), Error);
}

TEST_CASE("locus polynomials are homogeneous cones") {
  for (const auto& model : {iwasawa_model(), nakamura_model(Rational(1, 3)), torus_model(2), torus_model(4)}) {
    const SymplecticLocus locus = symplectic_locus(model);
    const int n = model.dim() / 2;
    CHECK(locus.polynomial.is_homogeneous());
    CHECK(static_cast<int>(locus.polynomial.degree()) == n);
    CHECK(scale(locus.polynomial) == lambda_power(n) * locus.polynomial);
  }
}

TEST_CASE("locus agrees with the symplectic test on a grid") {
  const std::vector<GaussRat> values{0, 1, I, Rational(-1, 2)};
  for (const auto& model : {iwasawa_model(), nakamura_model(Rational(1, 2)), torus_model(4)}) {
    const auto shared = share(model);
    const SymplecticLocus locus = symplectic_locus(model);
    bool found_nonzero = false;
    for (const auto& b : grid(locus.coordinates, values)) {
      const CForm sigma = locus.form_at(b);
      const bool nonzero = !locus.polynomial.eval(b).is_zero();
      found_nonzero = found_nonzero || nonzero;
      const SymplecticVerdict v = is_symplectic(shared, sigma);
      REQUIRE(v.yes() == nonzero);
      if (v.yes()) {
        REQUIRE(model.d(sigma).is_zero());
        REQUIRE(model.delbar(sigma).is_zero());
      }
    }
    CHECK(found_nonzero);
  }
}
