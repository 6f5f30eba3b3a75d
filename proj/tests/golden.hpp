#pragma once

#include <string>
#include <vector>

#include "csym/matrix.hpp"
#include "csym/text.hpp"

namespace golden {

using namespace csym;

// Hand-ordered H^2 basis for nakamura4: a14, a23, b11, b14, b23, b32, b41, b44, c14, c23.
inline const std::vector<std::string> kNakamuraBasis{"f14",  "f23",  "f1w1", "f1w4", "f2w3",
                                                     "f3w2", "f4w1", "f4w4", "w14",  "w23"};

inline std::vector<CForm> nakamura_basis() {
  std::vector<CForm> out;
  for (const auto& s : kNakamuraBasis) out.push_back(parse_form(s, 4));
  return out;
}

// Gram matrix in that basis for sigma = 1/2*f14 + f23 at t = 1/2.
inline Matrix<GaussRat> nakamura_gram() {
  const Rational h(1, 2), q(1, 4), e(1, 8);
  Matrix<GaussRat> g(10, 10);
  g(0, 8) = h;
  g(0, 9) = q;
  g(1, 8) = q;
  g(1, 9) = e;
  g(2, 7) = -1;
  g(3, 6) = 1;
  g(4, 5) = q;
  g(5, 4) = q;
  g(6, 3) = 1;
  g(7, 2) = -1;
  g(8, 0) = h;
  g(8, 1) = q;
  g(9, 0) = q;
  g(9, 1) = e;
  return g;
}

}  // namespace golden
