#pragma once

// Bigraded exterior algebra on the invariant coframe phi_1..phi_m (type
// (1,0)) and wbar_1..wbar_m (type (0,1)). A basis monomial is written
// phi_S ^ wbar_T with S and T ascending; all signs are transposition
// parities against that written order.

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "csym/error.hpp"
#include "csym/param_poly.hpp"
#include "csym/scalar.hpp"

namespace csym {

inline constexpr int kMaxDim = 6;

class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr Monomial(std::uint32_t holo, std::uint32_t anti) : holo_(holo), anti_(anti) {}
  /// Builds from 1-based index lists (must be ascending and distinct).
  static Monomial from_indices(const std::vector<int>& holo, const std::vector<int>& anti);
  static constexpr Monomial phi(int i) { return {1u << (i - 1), 0}; }
  static constexpr Monomial wbar(int i) { return {0, 1u << (i - 1)}; }
  /// phi_1..m ^ wbar_1..m.
  static constexpr Monomial top(int m) { return {(1u << m) - 1, (1u << m) - 1}; }

  std::uint32_t holo_mask() const { return holo_; }
  std::uint32_t anti_mask() const { return anti_; }
  int p() const;
  int q() const;
  int degree() const { return p() + q(); }
  std::vector<int> holo_indices() const;
  std::vector<int> anti_indices() const;
  /// True if every index is within 1..m.
  bool fits(int m) const;

  /// Canonical order: total degree, then more holomorphic factors first,
  /// then lexicographic on the holo and anti index lists.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::uint32_t holo_ = 0;
  std::uint32_t anti_ = 0;
};

/// a ^ b = sign * result; sign is 0 when a factor repeats.
std::pair<int, Monomial> multiply(const Monomial& a, const Monomial& b);

/// conj(phi_S ^ wbar_T) = (-1)^{|S||T|} phi_T ^ wbar_S.
std::pair<int, Monomial> conjugate(const Monomial& a);

/// All (p,q) monomials for dimension m, lexicographic in (holo, anti).
std::vector<Monomial> enumerate_basis(int m, int p, int q);
/// All total-degree-k monomials: bidegree blocks (k,0), (k-1,1), ..., each lexicographic.
std::vector<Monomial> enumerate_degree(int m, int k);

template <class T>
class Form {
 public:
  using Terms = std::map<Monomial, T>;

  explicit Form(int m = 0) : m_(m) {
    if (m < 0 || m > kMaxDim)
      throw Error(Errc::OutOfRange, "dimension must be within 0.." + std::to_string(kMaxDim));
  }
  static Form constant(int m, const T& c) { return monomial(m, Monomial(), c); }
  static Form monomial(int m, const Monomial& mono, const T& c = T(1)) {
    Form f(m);
    f.add_term(mono, c);
    return f;
  }

  int dim() const { return m_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  T coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? T(0) : it->second;
  }

  void add_term(const Monomial& mono, const T& c) {
    if (!mono.fits(m_))
      throw Error(Errc::IndexOutOfRange, "monomial index exceeds dimension " + std::to_string(m_));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Bidegrees present, ascending by (degree, -p).
  std::set<std::pair<int, int>> bidegrees() const {
    std::set<std::pair<int, int>> out;
    for (const auto& [mono, c] : terms_) out.emplace(mono.p(), mono.q());
    return out;
  }
  bool is_homogeneous() const { return bidegrees().size() <= 1; }
  /// True if every term has total degree k (the zero form has every degree).
  bool has_total_degree(int k) const {
    for (const auto& [mono, c] : terms_)
      if (mono.degree() != k) return false;
    return true;
  }

  Form& operator+=(const Form& o) {
    check_dim(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
  }
  Form& operator-=(const Form& o) {
    check_dim(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
  }
  Form& operator*=(const T& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [mono, c] : terms_) c *= s;
    return *this;
  }
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const T& s, Form f) { return f *= s; }
  Form operator-() const {
    Form out(m_);
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
    return out;
  }

  friend bool operator==(const Form& a, const Form& b) { return a.m_ == b.m_ && a.terms_ == b.terms_; }

  void check_dim(const Form& o) const {
    if (o.m_ != m_)
      throw Error(Errc::DimensionMismatch,
                  "forms of dimension " + std::to_string(m_) + " and " + std::to_string(o.m_));
  }

 private:
  int m_ = 0;
  Terms terms_;
};

using CForm = Form<GaussRat>;
using PForm = Form<ParamPoly>;

template <class T>
Form<T> wedge(const Form<T>& f, const Form<T>& g) {
  f.check_dim(g);
  Form<T> out(f.dim());
  for (const auto& [a, x] : f.terms())
    for (const auto& [b, y] : g.terms()) {
      const auto [sign, mono] = multiply(a, b);
      if (sign == 0) continue;
      T c = x * y;
      if (sign < 0) c = -c;
      out.add_term(mono, c);
    }
  return out;
}

/// f^k with f^0 = 1.
template <class T>
Form<T> power(const Form<T>& f, int k) {
  Form<T> out = Form<T>::constant(f.dim(), T(1));
  for (int i = 0; i < k; ++i) out = wedge(out, f);
  return out;
}

template <class T>
Form<T> conjugate_form(const Form<T>& f) {
  Form<T> out(f.dim());
  for (const auto& [a, x] : f.terms()) {
    const auto [sign, mono] = conjugate(a);
    T c = conj(x);
    if (sign < 0) c = -c;
    out.add_term(mono, c);
  }
  return out;
}

template <class T>
Form<T> bidegree_component(const Form<T>& f, int p, int q) {
  Form<T> out(f.dim());
  for (const auto& [a, x] : f.terms())
    if (a.p() == p && a.q() == q) out.add_term(a, x);
  return out;
}

template <class T>
Form<T> degree_component(const Form<T>& f, int k) {
  Form<T> out(f.dim());
  for (const auto& [a, x] : f.terms())
    if (a.degree() == k) out.add_term(a, x);
  return out;
}

/// Coefficient of phi_1..m ^ wbar_1..m; throws NotTopDegree if f has any
/// other component.
template <class T>
T top_coefficient(const Form<T>& f) {
  const Monomial top = Monomial::top(f.dim());
  for (const auto& [a, x] : f.terms())
    if (a != top) throw Error(Errc::NotTopDegree, "form has components below the top degree");
  return f.coefficient(top);
}

/// Coordinates of f on an ordered monomial list; throws if f has other terms.
template <class T>
std::vector<T> coordinates_on(const Form<T>& f, const std::vector<Monomial>& basis) {
  std::vector<T> v(basis.size(), T(0));
  std::size_t found = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    v[i] = f.coefficient(basis[i]);
    if (!v[i].is_zero()) ++found;
  }
  if (found != f.size()) throw Error(Errc::WrongBidegree, "form has terms outside the ambient space");
  return v;
}

template <class T>
Form<T> form_from_coordinates(int m, const std::vector<Monomial>& basis, const std::vector<T>& v) {
  Form<T> f(m);
  for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], v[i]);
  return f;
}

/// Substitutes a binding into every coefficient.
CForm evaluate(const PForm& f, const Binding& binding);
PForm promote(const CForm& f);

}  // namespace csym
