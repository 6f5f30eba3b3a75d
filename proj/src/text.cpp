#include "csym/text.hpp"

#include <cctype>
#include <functional>
#include <sstream>
#include <vector>

namespace csym {

namespace {

enum class Tok { Number, Ident, Mono, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int column;  // 1-based
  GaussRat number;
  bool conjugate = false;
};

bool is_monomial_token(std::string_view s) {
  std::size_t k = 0;
  bool any = false;
  for (char letter : {'f', 'w'}) {
    if (k < s.size() && s[k] == letter) {
      ++k;
      const std::size_t start = k;
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      if (k == start) return false;
      any = true;
    }
  }
  return any && k == s.size();
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t k = 0;
  auto fail = [&](const std::string& msg, std::size_t at) {
    throw Error(Errc::SyntaxError, msg, Location{1, static_cast<int>(at) + 1});
  };
  while (k < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[k]);
    const int column = static_cast<int>(k) + 1;
    if (std::isspace(c)) {
      ++k;
      continue;
    }
    if (std::isdigit(c)) {
      const std::size_t start = k;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      if (k + 1 < text.size() && text[k] == '/' && std::isdigit(static_cast<unsigned char>(text[k + 1]))) {
        ++k;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      }
      const std::string literal(text.substr(start, k - start));
      Rational value;
      try {
        value = Rational::parse(literal);
      } catch (const Error& e) {
        throw Error(e.code(), e.what(), Location{1, column});
      }
      Token t{Tok::Number, literal, column, GaussRat(value)};
      if (k < text.size() && text[k] == 'i' &&
          (k + 1 == text.size() || !std::isalnum(static_cast<unsigned char>(text[k + 1])))) {
        t.number = GaussRat(Rational(0), value);
        t.text += "i";
        ++k;
      }
      out.push_back(std::move(t));
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      const std::size_t start = k;
      while (k < text.size() && (std::isalnum(static_cast<unsigned char>(text[k])) || text[k] == '_')) ++k;
      std::string word(text.substr(start, k - start));
      Token t{Tok::Ident, word, column, GaussRat(0)};
      if (k < text.size() && text[k] == '~') {
        t.conjugate = true;
        ++k;
      }
      if (is_monomial_token(word)) {
        if (t.conjugate) fail("'~' is not allowed on a monomial", k - 1);
        t.kind = Tok::Mono;
      } else if (word == "i") {
        if (t.conjugate) fail("'~' is not allowed on the imaginary unit", k - 1);
        t.kind = Tok::Number;
        t.number = GaussRat::i();
      }
      out.push_back(std::move(t));
      continue;
    }
    // U+2212 MINUS SIGN
    if (c == 0xE2 && k + 2 < text.size() && static_cast<unsigned char>(text[k + 1]) == 0x88 &&
        static_cast<unsigned char>(text[k + 2]) == 0x92) {
      out.push_back({Tok::Minus, "-", column, GaussRat(0)});
      k += 3;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: fail(std::string("unexpected character '") + text[k] + "'", k);
    }
    out.push_back({kind, std::string(1, text[k]), column, GaussRat(0)});
    ++k;
  }
  out.push_back({Tok::End, "", static_cast<int>(text.size()) + 1, GaussRat(0)});
  return out;
}

// Sign of sorting a digit sequence; 0 if an index repeats.
int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

template <class T>
class Parser {
 public:
  using Resolve = std::function<T(const Variable&, const Token&)>;

  Parser(std::string_view text, int m, bool allow_monomials, Resolve resolve, Errc zero_division)
      : tokens_(tokenize(text)), m_(m), allow_monomials_(allow_monomials),
        resolve_(std::move(resolve)), zero_division_(zero_division) {}

  Form<T> parse() {
    if (peek().kind == Tok::End) fail("empty expression");
    Form<T> value = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return value;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::SyntaxError, msg, Location{1, peek().column});
  }

  Form<T> expr() {
    Form<T> value(m_);
    bool negate = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negate = next().kind == Tok::Minus;
    value = term();
    if (negate) value = -value;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = next().kind == Tok::Minus;
      Form<T> rhs = term();
      if (minus) value -= rhs; else value += rhs;
    }
    return value;
  }

  Form<T> term() {
    Form<T> value = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token op = next();
      Form<T> rhs = unary();
      if (op.kind == Tok::Star) {
        value = wedge(value, rhs);
      } else {
        const T divisor = scalar_of(rhs, op, "divisor");
        if (divisor.is_zero()) throw Error(zero_division_, "division by zero", Location{1, op.column});
        value = divide(value, divisor, op);
      }
    }
    return value;
  }

  Form<T> unary() {
    if (peek().kind == Tok::Minus) {
      next();
      return -unary();
    }
    if (peek().kind == Tok::Plus) {
      next();
      return unary();
    }
    return power_expr();
  }

  Form<T> power_expr() {
    Form<T> base = primary();
    if (peek().kind != Tok::Caret) return base;
    const Token op = next();
    const Token& e = next();
    if (e.kind != Tok::Number || !e.number.is_real() || !e.number.re().is_integer() || e.number.re().sign() < 0)
      throw Error(Errc::SyntaxError, "exponent must be a non-negative integer", Location{1, e.column});
    const long exponent = std::stol(e.number.re().numerator());
    const T b = scalar_of(base, op, "base of '^'");
    T result(1);
    for (long k = 0; k < exponent; ++k) result = result * b;
    return Form<T>::constant(m_, result);
  }

  Form<T> primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Number:
        return Form<T>::constant(m_, T(t.number));
      case Tok::Ident:
        return Form<T>::constant(m_, resolve_(Variable{t.text, t.conjugate}, t));
      case Tok::Mono:
        return monomial(t);
      case Tok::LParen: {
        Form<T> inner = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        next();
        return inner;
      }
      default:
        --pos_;
        fail(t.kind == Tok::End ? "unexpected end of expression" : "unexpected '" + t.text + "'");
    }
  }

  Form<T> monomial(const Token& t) {
    if (!allow_monomials_)
      throw Error(Errc::SyntaxError, "form monomial '" + t.text + "' in a scalar expression", Location{1, t.column});
    std::vector<int> holo, anti;
    std::vector<int>* cur = nullptr;
    for (char ch : t.text) {
      if (ch == 'f') cur = &holo;
      else if (ch == 'w') cur = &anti;
      else {
        const int idx = ch - '0';
        if (idx < 1 || idx > m_)
          throw Error(Errc::IndexOutOfRange,
                      "index " + std::to_string(idx) + " in '" + t.text + "' outside 1.." + std::to_string(m_),
                      Location{1, t.column});
        cur->push_back(idx);
      }
    }
    const int sign = sort_sign(holo) * sort_sign(anti);
    if (sign == 0) return Form<T>(m_);
    return Form<T>::monomial(m_, Monomial::from_indices(holo, anti), T(sign));
  }

  T scalar_of(const Form<T>& f, const Token& at, const std::string& what) const {
    for (const auto& [mono, c] : f.terms())
      if (mono != Monomial())
        throw Error(Errc::SyntaxError, what + " must be a scalar", Location{1, at.column});
    return f.coefficient(Monomial());
  }

  Form<T> divide(const Form<T>& f, const T& d, const Token& at) const {
    try {
      const T inv = T(1) / d;
      Form<T> out = f;
      out *= inv;
      return out;
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), Location{1, at.column});
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int m_;
  bool allow_monomials_;
  Resolve resolve_;
  Errc zero_division_;
};

Parser<GaussRat>::Resolve bound_resolver(const Binding& binding) {
  return [&binding](const Variable& v, const Token& t) {
    if (!valid_parameter_name(v.name))
      throw Error(Errc::SyntaxError, "'" + v.name + "' is not a parameter name", Location{1, t.column});
    try {
      return bound_value(binding, v);
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), Location{1, t.column});
    }
  };
}

ParamPoly symbolic_resolver(const Variable& v, const Token& t) {
  if (!valid_parameter_name(v.name))
    throw Error(Errc::SyntaxError, "'" + v.name + "' is not a parameter name", Location{1, t.column});
  return ParamPoly::variable(v.name, v.conjugate);
}

// Coefficient text and sign for the joiner; empty text means "1".
template <class T>
std::pair<bool, std::string> coefficient_text(const T& c);

template <>
std::pair<bool, std::string> coefficient_text(const GaussRat& c) {
  if (c.is_real() || c.re().is_zero()) {
    const bool negative = c.is_real() ? c.re().sign() < 0 : c.im().sign() < 0;
    const std::string s = (negative ? -c : c).to_string();
    return {negative, s == "1" ? "" : s};
  }
  return {false, "(" + c.to_string() + ")"};
}

template <>
std::pair<bool, std::string> coefficient_text(const ParamPoly& c) {
  if (c.is_constant()) return coefficient_text(c.terms().begin()->second);
  if (c.terms().size() == 1) {
    const auto& [mono, k] = *c.terms().begin();
    auto [negative, s] = coefficient_text(k);
    return {negative, (s.empty() ? "" : s + "*") + mono.to_string()};
  }
  return {false, "(" + c.to_string() + ")"};
}

template <class T>
std::string format_terms(const Form<T>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : f.terms()) {
    const auto [negative, coeff] = coefficient_text(c);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (mono == Monomial()) {
      os << (coeff.empty() ? "1" : coeff);
    } else {
      if (!coeff.empty()) os << coeff << "*";
      os << format_monomial(mono);
    }
  }
  return os.str();
}

}  // namespace

bool valid_parameter_name(std::string_view name) {
  if (name.empty() || name == "i" || is_monomial_token(name)) return false;
  if (!std::isalpha(static_cast<unsigned char>(name.front())) && name.front() != '_') return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string format_monomial(const Monomial& mono) {
  std::string s;
  if (mono.p() > 0) {
    s += "f";
    for (int i : mono.holo_indices()) s += std::to_string(i);
  }
  if (mono.q() > 0) {
    s += "w";
    for (int i : mono.anti_indices()) s += std::to_string(i);
  }
  return s.empty() ? "1" : s;
}

std::string format_form(const CForm& f) { return format_terms(f); }
std::string format_form(const PForm& f) { return format_terms(f); }

CForm parse_form(std::string_view text, int m, const Binding& binding, Errc zero_division) {
  return Parser<GaussRat>(text, m, true, bound_resolver(binding), zero_division).parse();
}

PForm parse_form_symbolic(std::string_view text, int m) {
  return Parser<ParamPoly>(text, m, true, symbolic_resolver, Errc::DivisionByZero).parse();
}

GaussRat parse_scalar(std::string_view text, const Binding& binding) {
  const CForm f = Parser<GaussRat>(text, 0, false, bound_resolver(binding), Errc::DivisionByZero).parse();
  return f.coefficient(Monomial());
}

ParamPoly parse_poly(std::string_view text) {
  const PForm f = Parser<ParamPoly>(text, 0, false, symbolic_resolver, Errc::DivisionByZero).parse();
  return f.coefficient(Monomial());
}

ParamPoly ParamPoly::parse(std::string_view text) { return parse_poly(text); }

}  // namespace csym
