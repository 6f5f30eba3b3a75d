#include "csym/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "csym/bbf.hpp"
#include "csym/lefschetz.hpp"
#include "csym/model_io.hpp"
#include "csym/text.hpp"

namespace csym {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string model;
  std::vector<std::string> params;
  std::string mu;
  std::string format = "text";
  std::string sigma;
  std::string tau;
  int power = 1;
  std::string theory = "dolbeault";
  std::string source;
  std::string bidegree;
  std::string basis;
  bool allow_unnormalized = false;
};

struct Session {
  Options opt;
  Binding params;
  std::shared_ptr<const Model> model;
  std::shared_ptr<const CohomologyEngine> engine;
  bool json_out() const { return opt.format == "json"; }
};

std::pair<int, int> parse_pair(const std::string& text, const char* what) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    std::size_t a = 0, b = 0;
    const int p = std::stoi(text.substr(0, comma), &a);
    const int q = std::stoi(text.substr(comma + 1), &b);
    if (a != comma || b != text.size() - comma - 1) throw std::invalid_argument(text);
    return {p, q};
  } catch (const std::logic_error&) {
    throw Error(Errc::Usage, std::string(what) + " must read p,q (got '" + text + "')");
  }
}

Binding parse_params(const std::vector<std::string>& items) {
  Binding out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(Errc::Usage, "--param needs name=value (got '" + item + "')");
    out[item.substr(0, eq)] = parse_scalar(item.substr(eq + 1));
  }
  return out;
}

void open_session(Session& s) {
  s.params = parse_params(s.opt.params);
  ModelOverrides ov;
  ov.params = s.params;
  if (!s.opt.mu.empty()) {
    const GaussRat mu = parse_scalar(s.opt.mu);
    if (!mu.is_real() || mu.re().sign() <= 0) throw Error(Errc::InvalidModel, "--mu must be a positive rational");
    ov.mu = mu.re();
  }
  s.model = std::make_shared<const Model>(load_model(s.opt.model, ov));
  s.engine = std::make_shared<const CohomologyEngine>(s.model);
}

CForm parse_expr(const Session& s, const std::string& text) { return parse_form(text, s.model->dim(), s.params); }

std::vector<CForm> read_basis_file(const Session& s, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Usage, "cannot read basis file '" + path + "'");
  std::vector<CForm> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_expr(s, line));
    } catch (const Error& e) {
      throw Error(e.code(), path + ": " + e.what(), Location{number, e.where().column});
    }
  }
  return out;
}

// ---- formatting helpers ----

json scalars(const Vector<GaussRat>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

json matrix_json(const Matrix<GaussRat>& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

json forms_json(const std::vector<CForm>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(format_form(f));
  return out;
}

json signature_json(const std::optional<Signature>& s) {
  if (!s) return nullptr;
  return json::array({s->p_plus, s->p_minus, s->p_zero});
}

std::string signature_text(const std::optional<Signature>& s) {
  if (!s) return "n/a";
  std::ostringstream os;
  os << *s;
  return os.str();
}

void print_matrix(std::ostream& out, const Matrix<GaussRat>& m, const std::string& indent = "  ") {
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) width = std::max(width, m(i, j).to_string().size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << indent;
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << std::setw(static_cast<int>(width)) << m(i, j).to_string();
    out << "\n";
  }
}

// ---- model ----

json model_json(const Model& model) {
  json out;
  out["name"] = model.name();
  out["dim"] = model.dim();
  out["mu"] = model.mu().to_string();
  json params = json::object();
  for (const auto& [k, v] : model.params()) params[k] = v.to_string();
  out["params"] = params;
  out["builtin"] = model.is_builtin();
  out["conjugation_compatible"] = model.conjugation_compatible();
  json eqs = json::object();
  for (int i = 1; i <= model.dim(); ++i) eqs["f" + std::to_string(i)] = format_form(model.d_phi(i));
  for (int i = 1; i <= model.dim(); ++i) eqs["w" + std::to_string(i)] = format_form(model.d_wbar(i));
  out["structure"] = eqs;
  return out;
}

int cmd_validate(Session& s, std::ostream& out) {
  const Model& m = *s.model;
  if (s.json_out()) {
    json j;
    j["valid"] = true;
    j["model"] = model_json(m);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "valid model" << (m.name().empty() ? "" : " " + m.name()) << ": dim " << m.dim() << ", mu " << m.mu() << "\n";
  for (int i = 1; i <= m.dim(); ++i)
    if (!m.d_phi(i).is_zero()) out << "  d f" << i << " = " << format_form(m.d_phi(i)) << "\n";
  for (int i = 1; i <= m.dim(); ++i)
    if (m.wbar_explicit(i)) out << "  d w" << i << " = " << format_form(m.d_wbar(i)) << "\n";
  if (!m.conjugation_compatible()) out << "  (d does not commute with conjugation of the coframe)\n";
  return 0;
}

// ---- cohomology ----

json space_json(const CohomologySpace& sp) {
  json j;
  j["theory"] = theory_name(sp.theory());
  if (sp.theory() == Theory::DeRham) {
    j["k"] = sp.p();
  } else {
    j["p"] = sp.p();
    j["q"] = sp.q();
  }
  j["dim"] = sp.dim();
  j["basis"] = forms_json(sp.basis());
  return j;
}

json table_json(const CohomologyEngine& e, Theory th) {
  const int m = e.model().dim();
  json rows = json::array();
  for (int p = 0; p <= m; ++p) {
    json row = json::array();
    for (int q = 0; q <= m; ++q) row.push_back(e.space(th, p, q)->dim());
    rows.push_back(std::move(row));
  }
  return rows;
}

json betti_json(const CohomologyEngine& e) {
  json out = json::array();
  for (int k = 0; k <= 2 * e.model().dim(); ++k) out.push_back(e.de_rham(k)->dim());
  return out;
}

void print_table(std::ostream& out, const CohomologyEngine& e, Theory th) {
  const int m = e.model().dim();
  out << "h^{p,q} " << theory_name(th) << " (rows p, columns q)\n";
  for (int p = 0; p <= m; ++p) {
    out << "  p=" << p << ":";
    for (int q = 0; q <= m; ++q) out << " " << std::setw(3) << e.space(th, p, q)->dim();
    out << "\n";
  }
}

int cmd_cohomology(Session& s, std::ostream& out) {
  const Theory th = parse_theory(s.opt.theory);
  const auto& e = *s.engine;
  if (s.opt.bidegree.empty()) {
    if (s.json_out()) {
      json j;
      j["theory"] = theory_name(th);
      if (th == Theory::DeRham)
        j["betti"] = betti_json(e);
      else
        j["table"] = table_json(e, th);
      out << j.dump(2) << "\n";
    } else if (th == Theory::DeRham) {
      out << "b_k:";
      for (int k = 0; k <= 2 * e.model().dim(); ++k) out << " " << e.de_rham(k)->dim();
      out << "\n";
    } else {
      print_table(out, e, th);
    }
    return 0;
  }
  std::shared_ptr<const CohomologySpace> sp;
  if (th == Theory::DeRham) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(s.opt.bidegree, &used);
      if (used != s.opt.bidegree.size()) throw std::invalid_argument(s.opt.bidegree);
    } catch (const std::logic_error&) {
      throw Error(Errc::Usage, "de Rham cohomology takes --bidegree k (a single degree)");
    }
    sp = e.de_rham(k);
  } else {
    const auto [p, q] = parse_pair(s.opt.bidegree, "--bidegree");
    sp = e.space(th, p, q);
  }
  if (s.json_out()) {
    out << space_json(*sp).dump(2) << "\n";
    return 0;
  }
  out << sp->label() << ": dim " << sp->dim() << "\n";
  for (const auto& f : sp->basis()) out << "  [" << format_form(f) << "]\n";
  return 0;
}

// ---- ddbar ----

json ddbar_json(const DdbarVerdict& v) {
  json j;
  j["verdict"] = v.holds ? "holds" : "fails";
  j["witness"] = v.witness ? json::array({v.witness->first, v.witness->second}) : json(nullptr);
  j["caveat"] = v.caveat;
  return j;
}

int cmd_ddbar(Session& s, std::ostream& out) {
  const auto v = s.engine->ddbar_verdict();
  if (s.json_out()) {
    out << ddbar_json(v).dump(2) << "\n";
    return 0;
  }
  if (v.holds)
    out << "holds\n";
  else
    out << "fails at (" << v.witness->first << "," << v.witness->second << ")\n";
  if (v.caveat) out << "note: computed on invariant forms; the manifold may differ for user models\n";
  return 0;
}

// ---- symplectic ----

json sigma_json(const Session& s, const CForm& sigma) {
  json j;
  j["form"] = format_form(sigma);
  const auto v = is_symplectic(s.model, sigma);
  j["symplectic"] = v.yes();
  if (v.yes()) {
    j["normalization"] = v.form->normalization.to_string();
    j["normalized"] = v.form->normalized();
  } else {
    j["reason"] = v.reason;
  }
  return j;
}

json symplectic_json(const Session& s) {
  const auto locus = symplectic_locus(*s.model);
  json j;
  json basis = json::array();
  for (std::size_t i = 0; i < locus.basis.size(); ++i)
    basis.push_back(json{{"coordinate", locus.coordinates[i]}, {"form", format_form(locus.basis[i])}});
  j["closed_20"] = basis;
  j["polynomial"] = locus.polynomial.to_string();
  j["dbar_closed_20_dim"] = locus.dbar_closed_dim;
  j["not_d_closed_dim"] = locus.gap();
  bool bound = !locus.coordinates.empty();
  for (const auto& c : locus.coordinates) bound = bound && s.params.count(c);
  if (bound) {
    json ev;
    const GaussRat value = locus.polynomial.eval(s.params);
    ev["value"] = value.to_string();
    ev["symplectic"] = !value.is_zero();
    ev["form"] = format_form(locus.form_at(s.params));
    j["evaluation"] = ev;
  } else {
    j["evaluation"] = nullptr;
  }
  j["sigma"] = s.opt.sigma.empty() ? json(nullptr) : sigma_json(s, parse_expr(s, s.opt.sigma));
  return j;
}

int cmd_symplectic(Session& s, std::ostream& out) {
  const json j = symplectic_json(s);
  if (s.json_out()) {
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "d-closed (2,0)-forms: " << j["closed_20"].size() << " (dbar-closed: " << j["dbar_closed_20_dim"].get<int>()
      << ", not d-closed: " << j["not_d_closed_dim"].get<int>() << ")\n";
  for (const auto& b : j["closed_20"])
    out << "  " << b["coordinate"].get<std::string>() << ": " << b["form"].get<std::string>() << "\n";
  out << "locus polynomial: " << j["polynomial"].get<std::string>() << "\n";
  if (!j["evaluation"].is_null())
    out << "at the given binding: " << j["evaluation"]["value"].get<std::string>() << " ("
        << (j["evaluation"]["symplectic"].get<bool>() ? "symplectic" : "not symplectic") << ")\n";
  if (!j["sigma"].is_null()) {
    const auto& sg = j["sigma"];
    out << "sigma = " << sg["form"].get<std::string>() << ": ";
    if (sg["symplectic"].get<bool>())
      out << "symplectic, integral of (s sbar)^n = " << sg["normalization"].get<std::string>()
          << (sg["normalized"].get<bool>() ? " (normalized)" : " (not normalized)") << "\n";
    else
      out << "not symplectic (" << sg["reason"].get<std::string>() << ")\n";
  }
  return 0;
}

// ---- bbf ----

BbfContext make_context(const Session& s) {
  if (s.opt.sigma.empty()) throw Error(Errc::Usage, "--sigma is required");
  SymplecticForm sigma = require_symplectic(s.model, parse_expr(s, s.opt.sigma));
  std::optional<std::vector<CForm>> basis;
  if (!s.opt.basis.empty()) basis = read_basis_file(s, s.opt.basis);
  return BbfContext(s.engine, std::move(sigma), std::move(basis), s.opt.allow_unnormalized);
}

json block_json(const BbfContext& ctx, const std::vector<Vector<GaussRat>>& block) {
  json out = json::array();
  for (const auto& v : block) out.push_back(format_form(ctx.representative(v)));
  return out;
}

json bbf_json(const BbfContext& ctx, const QuadricReport& r) {
  json j;
  j["sigma"] = format_form(ctx.sigma().sigma);
  j["normalization"] = ctx.sigma().normalization.to_string();
  j["watermark"] = r.watermarked ? json("unnormalized sigma: values depend on the scale of sigma") : json(nullptr);
  j["basis"] = forms_json(ctx.basis());
  j["b2"] = ctx.b2();
  j["gram"] = matrix_json(r.gram);
  j["rank"] = r.rank;
  json kernel = json::array();
  for (const auto& v : r.kernel)
    kernel.push_back(json{{"coords", scalars(v)},
                          {"engine_coords", scalars(ctx.engine_coordinates(v))},
                          {"form", format_form(ctx.representative(v))}});
  j["kernel"] = kernel;
  json sig;
  sig["coordinate"] = signature_json(r.coordinate);
  sig["real_structure"] = signature_json(r.real_structure);
  sig["h11_coordinate"] = signature_json(r.h11_coordinate);
  sig["h11_real_structure"] = signature_json(r.h11_real_structure);
  if (!r.real_structure) sig["real_structure_error"] = r.real_structure_error;
  j["signature"] = sig;
  if (r.blocks) {
    j["blocks"] = json{{"V", block_json(ctx, r.blocks->v)},
                       {"W", block_json(ctx, r.blocks->w)},
                       {"H11", block_json(ctx, r.blocks->h11)}};
  } else {
    j["blocks"] = nullptr;
  }
  j["predicates"] = json{{"smooth", r.smooth}, {"irreducible", r.irreducible}};
  j["ddbar_applicable"] = r.ddbar;
  if (r.ddbar) {
    j["theorems"] = json{{"h20", r.h20},
                         {"h11", r.h11},
                         {"smooth_iff_h20_is_1", r.smooth == (r.h20 == 1)},
                         {"irreducible_iff_h11_positive", r.irreducible == (r.h11 > 0)}};
    j["bc_blocks"] = nullptr;
  } else {
    j["theorems"] = nullptr;
    j["bc_blocks"] = json{{"dim_20_02", r.bc_blocks->dim_20_02},
                          {"rank_20_02", r.bc_blocks->rank_20_02},
                          {"dim_11", r.bc_blocks->dim_11},
                          {"rank_11", r.bc_blocks->rank_11},
                          {"orthogonal", r.bc_blocks->orthogonal}};
  }
  return j;
}

void print_bbf(std::ostream& out, const BbfContext& ctx, const QuadricReport& r) {
  out << "sigma = " << format_form(ctx.sigma().sigma) << ", integral of (s sbar)^n = " << ctx.sigma().normalization << "\n";
  if (r.watermarked) out << "WARNING: sigma is not normalized; values depend on its scale\n";
  out << "basis of H^2 (b2 = " << ctx.b2() << "):\n";
  for (std::size_t i = 0; i < ctx.b2(); ++i) out << "  e" << i + 1 << " = [" << format_form(ctx.basis()[i]) << "]\n";
  out << "Gram matrix:\n";
  print_matrix(out, r.gram);
  out << "rank " << r.rank << "\n";
  out << "kernel:";
  if (r.kernel.empty()) out << " 0";
  out << "\n";
  for (const auto& v : r.kernel) out << "  [" << format_form(ctx.representative(v)) << "]\n";
  out << "signature (coordinates): " << signature_text(r.coordinate) << "\n";
  out << "signature (real structure): " << signature_text(r.real_structure) << "\n";
  if (r.blocks) {
    out << "H^{1,1} block signature (coordinates): " << signature_text(r.h11_coordinate) << "\n";
    out << "H^{1,1} block signature (real structure): " << signature_text(r.h11_real_structure) << "\n";
    out << "blocks: dim V = " << r.blocks->v.size() << ", dim W = " << r.blocks->w.size()
        << ", dim H11 = " << r.blocks->h11.size() << "\n";
  }
  out << "quadric: " << (r.smooth ? "smooth" : "singular") << ", " << (r.irreducible ? "irreducible" : "reducible") << "\n";
  if (r.ddbar) {
    out << "ddbar-lemma holds: h^{2,0} = " << r.h20 << ", h^{1,1} = " << r.h11 << " (consistent)\n";
  } else {
    const auto& bc = *r.bc_blocks;
    out << "ddbar-lemma fails; theorems not applicable\n";
    out << "  BC^{2,0}+BC^{0,2} image: dim " << bc.dim_20_02 << ", rank " << bc.rank_20_02 << "\n";
    out << "  BC^{1,1} image: dim " << bc.dim_11 << ", rank " << bc.rank_11 << "\n";
    out << "  images orthogonal: " << (bc.orthogonal ? "yes" : "no") << "\n";
  }
}

int cmd_bbf(Session& s, std::ostream& out) {
  const BbfContext ctx = make_context(s);
  const QuadricReport r = quadric_report(ctx);
  if (s.json_out())
    out << bbf_json(ctx, r).dump(2) << "\n";
  else
    print_bbf(out, ctx, r);
  return 0;
}

// ---- lefschetz ----

int cmd_lefschetz(Session& s, std::ostream& out) {
  if (s.opt.tau.empty()) throw Error(Errc::Usage, "--tau is required");
  if (s.opt.source.empty()) throw Error(Errc::Usage, "--source is required");
  const Theory th = parse_theory(s.opt.theory);
  int p = 0, q = -1;
  if (th == Theory::DeRham) {
    try {
      p = std::stoi(s.opt.source);
    } catch (const std::logic_error&) {
      throw Error(Errc::Usage, "de Rham sources are a single degree");
    }
  } else {
    std::tie(p, q) = parse_pair(s.opt.source, "--source");
  }
  const auto map = lefschetz_matrix(*s.engine, th, parse_expr(s, s.opt.tau), s.opt.power, p, q);
  const auto check = lefschetz_check(map);
  json kernel = json::array();
  for (const auto& v : check.kernel) kernel.push_back(format_form(map.source->representative(v)));
  if (s.json_out()) {
    json j;
    j["theory"] = theory_name(th);
    j["tau"] = format_form(map.tau);
    j["power"] = map.power;
    j["source"] = map.source->label();
    j["target"] = map.target->label();
    j["matrix"] = matrix_json(map.matrix);
    j["rank"] = check.rank;
    j["cokernel_dim"] = check.cokernel_dim;
    j["verdict"] = lefschetz_kind_name(check.kind);
    j["kernel"] = kernel;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "L: " << map.source->label() << " (dim " << map.source->dim() << ") -> " << map.target->label() << " (dim "
      << map.target->dim() << "), tau^" << map.power << " with tau = " << format_form(map.tau) << "\n";
  out << "rank " << check.rank << ", cokernel dim " << check.cokernel_dim << ": " << lefschetz_kind_name(check.kind) << "\n";
  for (const auto& k : kernel) out << "  kernel [" << k.get<std::string>() << "]\n";
  return 0;
}

// ---- report ----

int cmd_report(Session& s, std::ostream& out) {
  const auto& e = *s.engine;
  const int m = s.model->dim();
  json j;
  j["model"] = model_json(*s.model);
  j["cohomology"] = json{{"dolbeault", table_json(e, Theory::Dolbeault)},
                         {"bott_chern", table_json(e, Theory::BottChern)},
                         {"de_rham", betti_json(e)}};
  const auto verdict = e.ddbar_verdict();
  j["ddbar"] = ddbar_json(verdict);
  bool serre = true;
  for (int p = 0; p <= m; ++p)
    for (int q = 0; q <= m; ++q) serre = serre && e.serre_pairing_check(p, q).nondegenerate;
  j["serre_duality"] = serre;
  j["symplectic"] = m % 2 == 0 ? symplectic_json(s) : json(nullptr);
  std::optional<BbfContext> ctx;
  std::optional<QuadricReport> report;
  if (!s.opt.sigma.empty()) {
    ctx.emplace(make_context(s));
    report = quadric_report(*ctx);
    j["bbf"] = bbf_json(*ctx, *report);
  } else {
    j["bbf"] = nullptr;
  }
  if (s.json_out()) {
    out << j.dump(2) << "\n";
    return 0;
  }
  cmd_validate(s, out);
  print_table(out, e, Theory::Dolbeault);
  print_table(out, e, Theory::BottChern);
  out << "b_k:";
  for (const auto& b : j["cohomology"]["de_rham"]) out << " " << b.get<int>();
  out << "\n";
  out << "ddbar-lemma: ";
  cmd_ddbar(s, out);
  out << "Serre pairings: " << (serre ? "all nondegenerate" : "DEGENERATE") << "\n";
  if (m % 2 == 0) cmd_symplectic(s, out);
  if (ctx) print_bbf(out, *ctx, *report);
  return 0;
}

void emit_error(const Session& s, const Error& e, std::ostream& out, std::ostream& err) {
  if (s.json_out()) {
    json j;
    j["error"]["code"] = errc_name(e.code());
    j["error"]["message"] = e.what();
    j["error"]["location"] =
        e.where().line > 0 || e.where().column > 0 ? json{{"line", e.where().line}, {"column", e.where().column}} : json(nullptr);
    out << j.dump(2) << "\n";
    return;
  }
  err << "error [" << errc_name(e.code()) << "]";
  if (e.where().line > 0) err << " at " << e.where().line << ":" << e.where().column;
  err << ": " << e.what() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session s;
  CLI::App app{"Exact cohomology and Beauville-Bogomolov-Fujiki forms of complex symplectic models", "csym"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  auto common = [&s](CLI::App* sub) {
    sub->add_option("--model", s.opt.model, "Model file, or builtin:iwasawa4 | builtin:nakamura4:t=1/2 | builtin:torus:m=2")
        ->required();
    sub->add_option("--param", s.opt.params, "Parameter binding name=value (repeatable)");
    sub->add_option("--mu", s.opt.mu, "Override the volume normalization");
    sub->add_option("--format", s.opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* validate = app.add_subcommand("validate", "Parse and validate a model");
  common(validate);

  auto* cohomology = app.add_subcommand("cohomology", "Cohomology dimensions and representatives");
  common(cohomology);
  cohomology->add_option("--theory", s.opt.theory, "dolbeault | bc | aeppli | derham");
  cohomology->add_option("--bidegree", s.opt.bidegree, "p,q (or k for derham); omit for the full table");

  auto* ddbar = app.add_subcommand("ddbar", "Decide the ddbar-lemma");
  common(ddbar);

  auto* scan = app.add_subcommand("symplectic-scan", "Closed (2,0)-forms and the symplectic locus");
  common(scan);
  scan->add_option("--sigma", s.opt.sigma, "Check this (2,0)-form");

  auto* bbf = app.add_subcommand("bbf", "Beauville-Bogomolov-Fujiki form and quadric");
  common(bbf);
  bbf->add_option("--sigma", s.opt.sigma, "Symplectic form, e.g. \"1/2*f14 + f23\"")->required();
  bbf->add_option("--basis", s.opt.basis, "File with one class expression per line");
  bbf->add_flag("--allow-unnormalized", s.opt.allow_unnormalized, "Accept sigma with integral of (s sbar)^n != 1");

  auto* lef = app.add_subcommand("lefschetz", "Wedge operator on cohomology");
  common(lef);
  lef->add_option("--tau", s.opt.tau, "d-closed form")->required();
  lef->add_option("--power", s.opt.power, "Exponent k")->check(CLI::NonNegativeNumber);
  lef->add_option("--theory", s.opt.theory, "dolbeault | bc | aeppli | derham");
  lef->add_option("--source", s.opt.source, "Source bidegree p,q")->required();

  auto* report = app.add_subcommand("report", "Full pipeline");
  common(report);
  report->add_option("--sigma", s.opt.sigma, "Symplectic form for the BBF report");
  report->add_option("--basis", s.opt.basis, "File with one class expression per line");
  report->add_flag("--allow-unnormalized", s.opt.allow_unnormalized, "Accept an unnormalized sigma");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    if (s.json_out()) {
      emit_error(s, Error(Errc::Usage, e.what()), out, err);
    } else {
      err << "error [Usage]: " << e.what() << "\n";
      err << "run with --help for usage\n";
    }
    return 1;
  }

  try {
    open_session(s);
    if (validate->parsed()) return cmd_validate(s, out);
    if (cohomology->parsed()) return cmd_cohomology(s, out);
    if (ddbar->parsed()) return cmd_ddbar(s, out);
    if (scan->parsed()) return cmd_symplectic(s, out);
    if (bbf->parsed()) return cmd_bbf(s, out);
    if (lef->parsed()) return cmd_lefschetz(s, out);
    if (report->parsed()) return cmd_report(s, out);
  } catch (const Error& e) {
    emit_error(s, e, out, err);
    return exit_status(e.code());
  }
  return 1;
}

}  // namespace csym
