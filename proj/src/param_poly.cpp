#include "csym/param_poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "csym/error.hpp"

namespace csym {

PolyMonomial::PolyMonomial(const Variable& v, unsigned exponent) {
  if (exponent > 0) factors_.emplace_back(v, exponent);
}

unsigned PolyMonomial::degree() const {
  unsigned d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

PolyMonomial PolyMonomial::conj() const {
  PolyMonomial out;
  out.factors_.reserve(factors_.size());
  for (const auto& [v, e] : factors_) out.factors_.emplace_back(v.partner(), e);
  std::sort(out.factors_.begin(), out.factors_.end());
  return out;
}

PolyMonomial operator*(const PolyMonomial& a, const PolyMonomial& b) {
  PolyMonomial out;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

std::string PolyMonomial::to_string() const {
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += "*";
    s += v.to_string();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool GrlexGreater::operator()(const PolyMonomial& a, const PolyMonomial& b) const {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first != fb[j].first) return fa[i].first < fb[j].first;
    if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
    ++i;
    ++j;
  }
  return i < fa.size() && j == fb.size();
}

ParamPoly::ParamPoly(const GaussRat& c) {
  if (!c.is_zero()) terms_.emplace(PolyMonomial(), c);
}

ParamPoly ParamPoly::variable(const std::string& name, bool conjugate) {
  return term(PolyMonomial(Variable{name, conjugate}), GaussRat(1));
}

ParamPoly ParamPoly::term(const PolyMonomial& mono, const GaussRat& coeff) {
  ParamPoly p;
  p.add_term(mono, coeff);
  return p;
}

void ParamPoly::add_term(const PolyMonomial& mono, const GaussRat& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

unsigned ParamPoly::degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

bool ParamPoly::is_homogeneous() const {
  const unsigned d = degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

std::vector<Variable> ParamPoly::variables() const {
  std::set<Variable> vars;
  for (const auto& [mono, c] : terms_)
    for (const auto& [v, e] : mono.factors()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

GaussRat ParamPoly::coefficient(const PolyMonomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? GaussRat(0) : it->second;
}

ParamPoly ParamPoly::conj() const {
  ParamPoly out;
  for (const auto& [mono, c] : terms_) out.add_term(mono.conj(), c.conj());
  return out;
}

GaussRat bound_value(const Binding& binding, const Variable& v) {
  const auto direct = binding.find(v.to_string());
  const auto partner = binding.find(v.partner().to_string());
  if (direct != binding.end()) {
    if (partner != binding.end() && partner->second.conj() != direct->second)
      throw Error(Errc::InconsistentConjugateBinding,
                  "binding of '" + v.to_string() + "' is not the conjugate of '" +
                      v.partner().to_string() + "'");
    return direct->second;
  }
  if (partner != binding.end()) return partner->second.conj();
  throw Error(Errc::UnboundParameter, "parameter '" + v.name + "' is not bound");
}

GaussRat ParamPoly::eval(const Binding& binding) const {
  GaussRat sum(0);
  for (const auto& [mono, c] : terms_) {
    GaussRat value = c;
    for (const auto& [v, e] : mono.factors()) {
      const GaussRat x = bound_value(binding, v);
      for (unsigned k = 0; k < e; ++k) value *= x;
    }
    sum += value;
  }
  return sum;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
  ParamPoly out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
  *this = std::move(out);
  return *this;
}

ParamPoly operator/(const ParamPoly& a, const ParamPoly& b) {
  if (!b.is_constant())
    throw Error(Errc::SyntaxError, "division by a non-constant polynomial");
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  return a * ParamPoly(b.terms_.begin()->second.inverse());
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out;
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
  return out;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    // real or purely imaginary coefficients carry their sign into the joiner
    const bool signed_part = c.is_real() || c.re().is_zero();
    const bool negative = signed_part && (c.is_real() ? c.re().sign() < 0 : c.im().sign() < 0);
    std::string coeff;
    if (signed_part) {
      coeff = (negative ? -c : c).to_string();
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (mono.is_one()) {
      os << coeff;
    } else {
      if (coeff != "1") os << coeff << "*";
      os << mono.to_string();
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.to_string(); }

}  // namespace csym
