#pragma once

// Exact scalars: rationals and Gaussian rationals a + b i with a, b in Q.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace csym {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT: implicit from integers
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  /// Parses "p" or "p/q" (optional leading '-'); result is canonical.
  static Rational parse(std::string_view text);

  std::string numerator() const { return v_.get_num().get_str(); }
  std::string denominator() const { return v_.get_den().get_str(); }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  const mpq_class& raw() const { return v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inverse() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

 private:
  mpq_class v_{0};
};

inline Rational conj(const Rational& x) { return x; }
std::ostream& operator<<(std::ostream& os, const Rational& x);

class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long value) : re_(value) {}  // NOLINT: implicit from integers
  GaussRat(Rational re) : re_(std::move(re)) {}  // NOLINT: implicit from rationals
  GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }
  /// Parses the canonical serialization produced by to_string ("p/q", "p/q+r/si", "r/si").
  static GaussRat parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  /// |x|^2 = re^2 + im^2.
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  GaussRat inverse() const;

  GaussRat& operator+=(const GaussRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o) { return *this *= o.inverse(); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  GaussRat operator-() const { return GaussRat(-re_, -im_); }

  friend bool operator==(const GaussRat& a, const GaussRat& b) = default;

  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

inline GaussRat conj(const GaussRat& x) { return x.conj(); }
std::ostream& operator<<(std::ostream& os, const GaussRat& x);

}  // namespace csym
