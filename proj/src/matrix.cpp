#include "csym/matrix.hpp"

namespace csym {

std::ostream& operator<<(std::ostream& os, const Signature& s) {
  return os << "(" << s.p_plus << ", " << s.p_minus << ", " << s.p_zero << ")";
}

std::vector<Rational> characteristic_polynomial(const Matrix<Rational>& a) {
  if (!a.is_square()) throw Error(Errc::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  // Faddeev-LeVerrier: exact over Q since it only divides by 1..n.
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = Rational(1);
  Matrix<Rational> m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<Rational> next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    const Matrix<Rational> am = a * m;
    Rational trace(0);
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  return c;
}

namespace {

std::size_t sign_variations(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

Signature symmetric_signature(const Matrix<Rational>& m) {
  if (!m.is_symmetric()) throw Error(Errc::NonSymmetric, "signature requires a symmetric matrix");
  const auto c = characteristic_polynomial(m);
  std::size_t zero = 0;
  while (zero < c.size() && c[zero].is_zero()) ++zero;
  std::vector<int> pos, neg;
  for (std::size_t k = 0; k < c.size(); ++k) {
    pos.push_back(c[k].sign());
    neg.push_back(k % 2 == 0 ? c[k].sign() : -c[k].sign());
  }
  return {sign_variations(pos), sign_variations(neg), zero};
}

Matrix<GaussRat> to_gauss(const Matrix<Rational>& m) {
  Matrix<GaussRat> g(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g(i, j) = GaussRat(m(i, j));
  return g;
}

Matrix<Rational> require_real(const Matrix<GaussRat>& m) {
  Matrix<Rational> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_real())
        throw Error(Errc::NonRealEntry, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                            ") is not real: " + m(i, j).to_string());
      r(i, j) = m(i, j).re();
    }
  return r;
}

}  // namespace csym
