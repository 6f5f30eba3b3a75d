#pragma once

// Multivariate polynomials in named parameters with Gaussian-rational
// coefficients. Each parameter t has a formal conjugate partner t~ which is
// an independent variable; conjugation swaps the partners and conjugates the
// coefficients.

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "csym/scalar.hpp"

namespace csym {

struct Variable {
  std::string name;
  bool conjugate = false;

  Variable partner() const { return {name, !conjugate}; }
  /// Display name: "t" or "t~".
  std::string to_string() const { return conjugate ? name + "~" : name; }

  friend auto operator<=>(const Variable&, const Variable&) = default;
  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Power product of variables; factors sorted by variable, exponents > 0.
class PolyMonomial {
 public:
  PolyMonomial() = default;
  explicit PolyMonomial(const Variable& v, unsigned exponent = 1);

  const std::vector<std::pair<Variable, unsigned>>& factors() const { return factors_; }
  unsigned degree() const;
  bool is_one() const { return factors_.empty(); }
  PolyMonomial conj() const;

  friend PolyMonomial operator*(const PolyMonomial& a, const PolyMonomial& b);
  friend bool operator==(const PolyMonomial&, const PolyMonomial&) = default;

  std::string to_string() const;

 private:
  std::vector<std::pair<Variable, unsigned>> factors_;
};

/// Graded lexicographic order, largest first: higher degree first, then
/// lexicographic on (variable, exponent) sequences.
struct GrlexGreater {
  bool operator()(const PolyMonomial& a, const PolyMonomial& b) const;
};

/// Binding of parameter names (display names, "t" or "t~") to values.
using Binding = std::map<std::string, GaussRat>;

class ParamPoly {
 public:
  using Terms = std::map<PolyMonomial, GaussRat, GrlexGreater>;

  ParamPoly() = default;
  ParamPoly(long c) : ParamPoly(GaussRat(c)) {}  // NOLINT: implicit constant
  ParamPoly(const GaussRat& c);                   // NOLINT: implicit constant
  static ParamPoly variable(const std::string& name, bool conjugate = false);
  static ParamPoly term(const PolyMonomial& mono, const GaussRat& coeff);

  /// Parses the text produced by to_string (and general scalar expressions
  /// over parameters with +, -, *, ^ and division by nonzero constants).
  static ParamPoly parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  unsigned degree() const;
  bool is_homogeneous() const;
  std::vector<Variable> variables() const;
  GaussRat coefficient(const PolyMonomial& mono) const;

  ParamPoly conj() const;

  /// Evaluates at a binding; formal conjugates take the conjugate of their
  /// partner's value. Throws UnboundParameter / InconsistentConjugateBinding.
  GaussRat eval(const Binding& binding) const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(ParamPoly a, const ParamPoly& b) { return a *= b; }
  /// Division is defined only by nonzero constants.
  friend ParamPoly operator/(const ParamPoly& a, const ParamPoly& b);
  ParamPoly operator-() const;

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(const PolyMonomial& mono, const GaussRat& coeff);
  Terms terms_;
};

inline ParamPoly conj(const ParamPoly& p) { return p.conj(); }
std::ostream& operator<<(std::ostream& os, const ParamPoly& p);

/// Value of one variable under a binding, applying the conjugate-partner rule.
GaussRat bound_value(const Binding& binding, const Variable& v);

}  // namespace csym
