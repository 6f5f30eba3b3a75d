#include "csym/model_io.hpp"

#include <fstream>
#include <sstream>

#include "csym/text.hpp"

namespace csym {

namespace {

struct Line {
  int number;
  std::string text;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

int column_of(const std::string& line, std::string_view part) {
  return static_cast<int>(part.data() - line.data()) + 1;
}

[[noreturn]] void syntax(const Line& line, int column, const std::string& msg) {
  throw Error(Errc::SyntaxError, msg, Location{line.number, column});
}

// Re-anchors an error raised while parsing `expr` at its place in the file.
template <class F>
auto located(const Line& line, std::string_view expr, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    const int base = column_of(line.text, expr);
    const int col = e.where().column > 0 ? base + e.where().column - 1 : base;
    throw Error(e.code(), e.what(), Location{line.number, col});
  }
}

// Splits "lhs = rhs"; returns the rhs.
std::string_view after_equals(const Line& line, std::string_view rest) {
  const auto eq = rest.find('=');
  if (eq == std::string_view::npos) syntax(line, column_of(line.text, rest), "expected '='");
  const auto rhs = trim(rest.substr(eq + 1));
  if (rhs.empty()) syntax(line, column_of(line.text, rest) + static_cast<int>(eq) + 1, "missing expression after '='");
  return rhs;
}

}  // namespace

Model parse_model_file(std::string_view text, const ModelOverrides& overrides, std::string name) {
  std::vector<Line> lines;
  {
    std::istringstream in{std::string(text)};
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
      ++number;
      const auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      if (!trim(raw).empty()) lines.push_back({number, raw});
    }
  }
  if (lines.empty()) throw Error(Errc::SyntaxError, "empty model file: expected 'dim m'", Location{1, 1});

  int m = 0;
  Binding params;
  Rational mu(1);
  struct Equation {
    const Line* line;
    bool wbar;
    int index;
    std::string_view expr;
  };
  std::vector<Equation> equations;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const std::string_view body = trim(line.text);
    const auto space = body.find_first_of(" \t=");
    const std::string_view keyword = body.substr(0, space);
    const std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim(body.substr(space));
    if (li == 0 && keyword != "dim") syntax(line, column_of(line.text, body), "model file must start with 'dim m'");

    if (keyword == "dim") {
      if (li != 0) syntax(line, column_of(line.text, body), "'dim' may appear only once, first");
      int value = 0;
      for (char c : rest) {
        if (c < '0' || c > '9') syntax(line, column_of(line.text, rest), "dimension must be a positive integer");
        value = value * 10 + (c - '0');
        if (value > kMaxDim) break;
      }
      if (rest.empty() || value < 1 || value > kMaxDim)
        throw Error(Errc::InvalidModel, "dimension must be within 1.." + std::to_string(kMaxDim),
                    Location{line.number, column_of(line.text, rest.empty() ? body : rest)});
      m = value;
    } else if (keyword == "param") {
      const auto eq = rest.find('=');
      const std::string pname(trim(rest.substr(0, eq)));
      if (!valid_parameter_name(pname)) syntax(line, column_of(line.text, rest), "invalid parameter name '" + pname + "'");
      if (params.count(pname)) syntax(line, column_of(line.text, rest), "parameter '" + pname + "' declared twice");
      const auto rhs = after_equals(line, rest);
      params[pname] = located(line, rhs, [&] { return parse_scalar(rhs, params); });
    } else if (keyword == "mu") {
      const auto rhs = after_equals(line, body);
      const GaussRat value = located(line, rhs, [&] { return parse_scalar(rhs, params); });
      if (!value.is_real() || value.re().sign() <= 0)
        throw Error(Errc::InvalidModel, "mu must be a positive rational", Location{line.number, column_of(line.text, rhs)});
      mu = value.re();
    } else if (keyword == "d") {
      const auto eq = rest.find('=');
      const std::string_view gen = trim(rest.substr(0, eq));
      if (gen.size() < 2 || (gen[0] != 'f' && gen[0] != 'w'))
        syntax(line, column_of(line.text, rest), "expected a generator such as 'f3' or 'w3'");
      int index = 0;
      for (char c : gen.substr(1)) {
        if (c < '0' || c > '9') syntax(line, column_of(line.text, gen), "expected a generator such as 'f3' or 'w3'");
        index = index * 10 + (c - '0');
        if (index > kMaxDim) break;
      }
      if (index < 1 || index > m)
        throw Error(Errc::IndexOutOfRange, "generator index out of range 1.." + std::to_string(m),
                    Location{line.number, column_of(line.text, gen)});
      const bool wbar = gen[0] == 'w';
      for (const auto& e : equations)
        if (e.wbar == wbar && e.index == index)
          syntax(line, column_of(line.text, gen), "second equation for d" + std::string(gen));
      equations.push_back({&line, wbar, index, after_equals(line, rest)});
    } else {
      syntax(line, column_of(line.text, body), "unknown directive '" + std::string(keyword) + "'");
    }
  }

  for (const auto& [key, value] : overrides.params)
    if (params.count(key)) params[key] = value;
  if (overrides.mu) mu = *overrides.mu;

  std::vector<CForm> d_phi(m, CForm(m));
  std::vector<std::optional<CForm>> d_wbar(m);
  for (const auto& e : equations) {
    CForm f = located(*e.line, e.expr, [&] { return parse_form(e.expr, m, params, Errc::SingularParameter); });
    if (e.wbar)
      d_wbar[e.index - 1] = std::move(f);
    else
      d_phi[e.index - 1] = std::move(f);
  }
  try {
    return Model(m, std::move(d_phi), std::move(d_wbar), mu, std::move(params), std::move(name));
  } catch (const Error& err) {
    if (err.where().line != 0 || err.subject().size() < 2) throw;
    // dw defaults to the conjugate of df, so fall back to the f equation.
    const bool wbar = err.subject()[0] == 'w';
    const int index = std::stoi(err.subject().substr(1));
    const Equation* hit = nullptr;
    for (const auto& e : equations)
      if (e.index == index && (e.wbar == wbar || (!hit && !e.wbar))) hit = &e;
    if (!hit) throw;
    throw Error(err.code(), err.what(), Location{hit->line->number, column_of(hit->line->text, hit->expr)}, err.subject());
  }
}

std::string format_model_file(const Model& model) {
  std::ostringstream out;
  out << "dim " << model.dim() << "\n";
  for (const auto& [key, value] : model.params()) out << "param " << key << " = " << value.to_string() << "\n";
  if (model.mu() != Rational(1)) out << "mu = " << model.mu().to_string() << "\n";
  for (int i = 1; i <= model.dim(); ++i)
    if (!model.d_phi(i).is_zero()) out << "d f" << i << " = " << format_form(model.d_phi(i)) << "\n";
  for (int i = 1; i <= model.dim(); ++i)
    if (model.wbar_explicit(i)) out << "d w" << i << " = " << format_form(model.d_wbar(i)) << "\n";
  return out.str();
}

Model load_model(const std::string& source, const ModelOverrides& overrides) {
  constexpr std::string_view prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) {
    std::string_view spec = std::string_view(source).substr(prefix.size());
    const auto colon = spec.find(':');
    const std::string name(spec.substr(0, colon));
    Binding bindings;
    if (colon != std::string_view::npos) {
      std::string_view rest = spec.substr(colon + 1);
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos)
          throw Error(Errc::Usage, "builtin parameter '" + std::string(item) + "' needs the form key=value");
        bindings[std::string(trim(item.substr(0, eq)))] = parse_scalar(trim(item.substr(eq + 1)));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
    }
    for (const auto& [key, value] : overrides.params)
      if (key == "t" || key == "m") bindings[key] = value;
    Model model = builtin_model(name, bindings);
    return overrides.mu ? model.with_mu(*overrides.mu) : model;
  }
  std::ifstream in(source);
  if (!in) throw Error(Errc::Usage, "cannot read model file '" + source + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_model_file(buffer.str(), overrides, source);
}

}  // namespace csym
