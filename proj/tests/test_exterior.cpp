#include <random>

#include "doctest.h"
#include "csym/exterior.hpp"
#include "csym/text.hpp"
#include "support.hpp"

using namespace csym;
using support::form;

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

PForm symbolic(const std::string& text) { return parse_form_symbolic(text, 4); }

}  // namespace

TEST_CASE("enumerate_basis examples") {
  CHECK(enumerate_basis(2, 2, 0) == std::vector<Monomial>{Monomial::from_indices({1, 2}, {})});
  const auto b11 = enumerate_basis(4, 1, 1);
  CHECK(b11.size() == 16);
  CHECK(b11.front() == Monomial::from_indices({1}, {1}));
  const auto b20 = enumerate_basis(4, 2, 0);
  REQUIRE(b20.size() == 6);
  std::vector<std::string> names;
  for (const auto& mono : b20) names.push_back(format_monomial(mono));
  CHECK(names == std::vector<std::string>{"f12", "f13", "f14", "f23", "f24", "f34"});
  CHECK_THROWS_AS(enumerate_basis(2, 3, 0), Error);
}

TEST_CASE("bidegree spaces have binomial dimension") {
  for (int m = 0; m <= 4; ++m)
    for (int p = 0; p <= m; ++p)
      for (int q = 0; q <= m; ++q) {
        const auto basis = enumerate_basis(m, p, q);
        CHECK(static_cast<long>(basis.size()) == binomial(m, p) * binomial(m, q));
        for (std::size_t i = 0; i + 1 < basis.size(); ++i) CHECK(basis[i] < basis[i + 1]);
      }
}

TEST_CASE("wedge examples") {
  CHECK(wedge(form("f2"), form("f1")) == form("-f12"));
  const PForm sigma = symbolic("alpha*f14 + beta*f23");
  CHECK(wedge(sigma, sigma) == symbolic("2*alpha*beta*f1234"));
  const PForm ss = wedge(sigma, conjugate_form(sigma));
  CHECK(wedge(ss, ss) == symbolic("4*alpha*alpha~*beta*beta~*f1234w1234"));
  const CForm s = form("1/2*f14 + f23");
  CHECK(top_coefficient(power(wedge(s, conjugate_form(s)), 2)) == GaussRat(1));
  CHECK_THROWS_AS(wedge(form("f1", 3), form("f1", 4)), Error);
}

TEST_CASE("conjugation examples") {
  CHECK(conjugate_form(form("f14")) == form("w14"));
  CHECK(conjugate_form(form("f1w4")) == form("-f4w1"));
  CHECK(conjugate_form(form("f1w1")) == form("-f1w1"));
  CHECK(conjugate_form(form("(1+2i)*f12w3")) == form("(1-2i)*f3w12"));
}

TEST_CASE("bidegree components") {
  CHECK(bidegree_component(form("f12 + f1w1"), 2, 0) == form("f12"));
  CHECK(bidegree_component(form("f12"), 1, 1).is_zero());
  const Model nak = nakamura_model(Rational(1, 2));
  CHECK(bidegree_component(nak.d_phi(2), 2, 0) == form("-4/3*f12"));
  CHECK(bidegree_component(nak.d_phi(2), 1, 1) == form("2/3*f2w1"));
  std::mt19937 rng(support::kSeed);
  for (int c = 0; c < support::kCases; ++c) {
    const CForm f = support::random_form(rng, 3, enumerate_degree(3, 3), 5) +
                    support::random_form(rng, 3, enumerate_degree(3, 2), 3);
    CForm sum(3);
    for (const auto& [p, q] : f.bidegrees()) {
      const CForm part = bidegree_component(f, p, q);
      CHECK(part.is_homogeneous());
      sum += part;
    }
    CHECK(sum == f);
  }
}

TEST_CASE("top coefficient") {
  CHECK(top_coefficient(CForm(4)) == GaussRat(0));
  CHECK(top_coefficient(form("7*f1234w1234")) == GaussRat(7));
  try {
    top_coefficient(form("f1234w123"));
    FAIL("expected NotTopDegree");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotTopDegree);
  }
}

TEST_CASE("form syntax") {
  CHECK(form("1/2*f14 + 1*f23") == CForm::monomial(4, Monomial::from_indices({1, 4}, {}), Rational(1, 2)) +
                                        CForm::monomial(4, Monomial::from_indices({2, 3}, {})));
  CHECK(form("-1*f4w1") == -CForm::monomial(4, Monomial::from_indices({4}, {1})));
  CHECK(form("f13 + f31").is_zero());
  CHECK(form("  f1 *  f2 ") == form("f12"));
  CHECK(format_form(form("-4/3*f12 + 2/3*f2w1")) == "-4/3*f12 + 2/3*f2w1");
  CHECK(format_form(CForm(4)) == "0");
  try {
    form("f15");
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IndexOutOfRange);
  }
  try {
    form("f1 + * f2");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SyntaxError);
    CHECK(e.where().column > 0);
  }
}

TEST_CASE("formatted forms parse back") {
  std::mt19937 rng(support::kSeed + 1);
  for (int c = 0; c < support::kCases; ++c) {
    const CForm f = support::random_degree_form(rng, 4, c % 5, 4);
    CHECK(parse_form(format_form(f), 4) == f);
  }
}

TEST_CASE("wedge is associative and bilinear") {
  std::mt19937 rng(support::kSeed + 2);
  std::uniform_int_distribution<int> deg(0, 3);
  for (int c = 0; c < support::kCases; ++c) {
    const CForm a = support::random_degree_form(rng, 4, deg(rng), 3);
    const CForm b = support::random_degree_form(rng, 4, deg(rng), 3);
    const CForm d = support::random_degree_form(rng, 4, deg(rng), 3);
    const GaussRat s = support::small_gauss(rng);
    CHECK(wedge(wedge(a, b), d) == wedge(a, wedge(b, d)));
    CHECK(wedge(a, b + d) == wedge(a, b) + wedge(a, d));
    CHECK(wedge(s * a, b) == s * wedge(a, b));
  }
}

TEST_CASE("graded commutativity on all monomial pairs") {
  for (int m = 1; m <= 4; ++m)
    for (int k = 0; k <= 2 * m; ++k)
      for (int l = 0; l <= 2 * m; ++l)
        for (const auto& a : enumerate_degree(m, k))
          for (const auto& b : enumerate_degree(m, l)) {
            const CForm fa = CForm::monomial(m, a), fb = CForm::monomial(m, b);
            const CForm lhs = wedge(fa, fb);
            const CForm rhs = wedge(fb, fa);
            if ((k * l) % 2 == 0)
              REQUIRE(lhs == rhs);
            else
              REQUIRE(lhs == -rhs);
          }
}

TEST_CASE("odd forms square to zero") {
  std::mt19937 rng(support::kSeed + 3);
  for (int c = 0; c < support::kCases; ++c) {
    const int k = 2 * (c % 4) + 1;
    const CForm f = support::random_degree_form(rng, 4, k, 5);
    CHECK(wedge(f, f).is_zero());
  }
}

TEST_CASE("conjugation is an involutive algebra map") {
  std::mt19937 rng(support::kSeed + 4);
  std::uniform_int_distribution<int> deg(0, 4);
  for (int c = 0; c < support::kCases; ++c) {
    const CForm f = support::random_degree_form(rng, 4, deg(rng), 4);
    const CForm g = support::random_degree_form(rng, 4, deg(rng), 4);
    CHECK(conjugate_form(conjugate_form(f)) == f);
    CHECK(conjugate_form(wedge(f, g)) == wedge(conjugate_form(f), conjugate_form(g)));
  }
}
