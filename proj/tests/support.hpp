#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "csym/cohomology.hpp"
#include "csym/exterior.hpp"
#include "csym/matrix.hpp"
#include "csym/model.hpp"
#include "csym/text.hpp"

namespace support {

using namespace csym;

inline constexpr unsigned kSeed = 20240611;
inline constexpr int kCases = 120;

inline Rational small_rational(std::mt19937& rng, int span = 5) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, 4);
  return Rational(num(rng), den(rng));
}

inline GaussRat small_gauss(std::mt19937& rng, int span = 5) {
  std::bernoulli_distribution complex(0.5);
  if (!complex(rng)) return small_rational(rng, span);
  return GaussRat(small_rational(rng, span), small_rational(rng, span));
}

inline GaussRat nonzero_gauss(std::mt19937& rng) {
  GaussRat x;
  while (x.is_zero()) x = small_gauss(rng);
  return x;
}

inline CForm random_form(std::mt19937& rng, int m, const std::vector<Monomial>& pool, int terms = 4) {
  CForm f(m);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < terms; ++i) f.add_term(pool[pick(rng)], small_gauss(rng));
  return f;
}

inline CForm random_bidegree_form(std::mt19937& rng, int m, int p, int q, int terms = 4) {
  return random_form(rng, m, enumerate_basis(m, p, q), terms);
}

inline CForm random_degree_form(std::mt19937& rng, int m, int k, int terms = 4) {
  return random_form(rng, m, enumerate_degree(m, k), terms);
}

inline Matrix<GaussRat> random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density = 0.6) {
  std::bernoulli_distribution fill(density);
  Matrix<GaussRat> a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (fill(rng)) a(i, j) = small_gauss(rng, 3);
  return a;
}

// Two-step nilpotent structure: the first r generators are closed and the
// rest have differentials built from them, with no (0,2) part.
inline Model random_nilpotent_model(std::mt19937& rng, int m) {
  std::uniform_int_distribution<int> layer(1, m - 1);
  const int r = layer(rng);
  std::vector<Monomial> pool;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      if (i < j) pool.push_back(Monomial::from_indices({i, j}, {}));
      pool.push_back(Monomial::from_indices({i}, {j}));
    }
  std::vector<CForm> d_phi(m, CForm(m));
  std::bernoulli_distribution active(0.75);
  for (int k = r + 1; k <= m; ++k)
    if (active(rng)) d_phi[k - 1] = random_form(rng, m, pool, 2);
  return Model(m, std::move(d_phi));
}

inline std::shared_ptr<const Model> share(Model m) { return std::make_shared<const Model>(std::move(m)); }

inline std::shared_ptr<const CohomologyEngine> engine_for(Model m) {
  return std::make_shared<const CohomologyEngine>(share(std::move(m)));
}

inline CForm form(const std::string& text, int m = 4) { return parse_form(text, m); }

inline std::vector<GaussRat> unit(std::size_t n, std::size_t i) {
  std::vector<GaussRat> v(n, GaussRat(0));
  v[i] = GaussRat(1);
  return v;
}

}  // namespace support
