#pragma once

// Text syntax for scalars, parameter polynomials and forms.
//
//   scalars   "3", "-1/2", "3/4+1/2i", "1i"; parameters by name, conjugates "t~"
//   monomials "f13" = phi_1^phi_3, "w24" = wbar_2^wbar_4, "f1w4" = phi_1^wbar_4
//   forms     "1/2*f14 + 1*f23", "-(1/(1-t*t~))*f12 + t/(1-t*t~)*f2w1"
//
// Expressions combine with + - * / ^ and parentheses; '*' between forms is
// the wedge product, division is by nonzero scalars only. Unsorted monomial
// tokens are normalized with their permutation sign ("f31" = -"f13").

#include <string>
#include <string_view>

#include "csym/error.hpp"
#include "csym/exterior.hpp"
#include "csym/param_poly.hpp"

namespace csym {

std::string format_monomial(const Monomial& mono);
std::string format_form(const CForm& f);
std::string format_form(const PForm& f);

/// Parses a form over dimension m, substituting parameters from `binding`.
/// `zero_division` is the error raised when a divisor evaluates to zero.
CForm parse_form(std::string_view text, int m, const Binding& binding = {},
                 Errc zero_division = Errc::DivisionByZero);
/// Parses a form keeping parameters symbolic.
PForm parse_form_symbolic(std::string_view text, int m);

/// Parses a scalar expression (no monomials) under a binding.
GaussRat parse_scalar(std::string_view text, const Binding& binding = {});
/// Parses a polynomial expression in parameters.
ParamPoly parse_poly(std::string_view text);

/// True if `name` is usable as a parameter name (not "i", not a monomial token).
bool valid_parameter_name(std::string_view name);

}  // namespace csym
