#include "csym/scalar.hpp"

#include <cctype>

#include "csym/error.hpp"

namespace csym {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(Errc::SyntaxError, "malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

GaussRat GaussRat::inverse() const {
  const Rational n = norm2();
  if (n.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  return GaussRat(re_ / n, -im_ / n);
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussRat::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  const std::string imag = im_.abs().to_string() + "i";
  if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + imag;
  return re_.to_string() + (im_.sign() < 0 ? "-" : "+") + imag;
}

GaussRat GaussRat::parse(std::string_view text) {
  if (text.empty()) throw Error(Errc::SyntaxError, "empty scalar");
  if (text.back() != 'i') return GaussRat(Rational::parse(text));
  std::string_view body = text.substr(0, text.size() - 1);
  // split at the last sign that is not the leading one
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return GaussRat(Rational(0), Rational::parse(body));
  return GaussRat(Rational::parse(body.substr(0, split)), Rational::parse(body.substr(split)));
}

std::ostream& operator<<(std::ostream& os, const GaussRat& x) { return os << x.to_string(); }

}  // namespace csym
