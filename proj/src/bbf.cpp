#include "csym/bbf.hpp"

#include "csym/text.hpp"

namespace csym {

namespace {

Matrix<GaussRat> columns_of(std::size_t n, const std::vector<Vector<GaussRat>>& vs) {
  return Matrix<GaussRat>::from_columns(n, vs);
}

Vector<GaussRat> conj_vector(Vector<GaussRat> v) {
  for (auto& x : v) x = x.conj();
  return v;
}

/// S^T G T for column lists S, T.
Matrix<GaussRat> restrict_gram(const Matrix<GaussRat>& g, const std::vector<Vector<GaussRat>>& s,
                               const std::vector<Vector<GaussRat>>& t) {
  Matrix<GaussRat> out(s.size(), t.size());
  for (std::size_t a = 0; a < s.size(); ++a) {
    const Vector<GaussRat> gs = g.transpose() * s[a];
    for (std::size_t b = 0; b < t.size(); ++b) {
      GaussRat acc;
      for (std::size_t i = 0; i < gs.size(); ++i)
        if (!gs[i].is_zero() && !t[b][i].is_zero()) acc += gs[i] * t[b][i];
      out(a, b) = acc;
    }
  }
  return out;
}

std::vector<Vector<GaussRat>> units(std::size_t n) {
  std::vector<Vector<GaussRat>> out;
  for (std::size_t i = 0; i < n; ++i) {
    Vector<GaussRat> e(n, GaussRat(0));
    e[i] = GaussRat(1);
    out.push_back(std::move(e));
  }
  return out;
}

std::optional<Matrix<Rational>> real_part_if_real(const Matrix<GaussRat>& m) {
  try {
    return require_real(m);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

BbfContext::BbfContext(std::shared_ptr<const CohomologyEngine> engine, SymplecticForm sigma,
                       std::optional<std::vector<CForm>> basis, bool allow_unnormalized)
    : engine_(std::move(engine)), sigma_(std::move(sigma)) {
  if (!sigma_.normalized() && !allow_unnormalized)
    throw Error(Errc::UnnormalizedSigma,
                "sigma is not normalized: integral of (s sbar)^n is " + sigma_.normalization.to_string());
  const auto h2 = engine_->de_rham(2);
  basis_ = basis ? *basis : h2->basis();
  if (basis_.size() != h2->dim())
    throw Error(Errc::InvalidBasis, "basis has " + std::to_string(basis_.size()) + " classes but b2 = " +
                                        std::to_string(h2->dim()));
  std::vector<Vector<GaussRat>> cols;
  for (const auto& f : basis_) {
    check_closed(f);
    cols.push_back(h2->coordinates(f));
  }
  to_engine_ = columns_of(h2->dim(), cols);
  if (rank(to_engine_) != h2->dim()) throw Error(Errc::InvalidBasis, "basis classes are linearly dependent in H^2");
  from_engine_ = SpanSolver<GaussRat>(to_engine_);

  const int n = sigma_.n;
  const CForm& s = sigma_.sigma;
  const CForm sbar = conjugate_form(s);
  mixed_ = power(wedge(s, sbar), n - 1);
  left_ = wedge(power(s, n - 1), power(sbar, n));
  right_ = wedge(power(s, n), power(sbar, n - 1));

  const std::size_t b = basis_.size();
  gram_ = Matrix<GaussRat>(b, b);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = i; j < b; ++j) gram_(i, j) = gram_(j, i) = polar(basis_[i], basis_[j]);

  std::vector<Vector<GaussRat>> kcols;
  for (std::size_t j = 0; j < b; ++j) {
    const CForm image = conjugate_form(basis_[j]);
    if (!engine_->model().d(image).is_zero()) {
      conj_error_ = "conjugate of basis class " + std::to_string(j + 1) + " (" + format_form(basis_[j]) +
                    ") has no d-closed representative of the form conj(rep)";
      break;
    }
    kcols.push_back(coordinates(image));
  }
  if (conj_error_.empty()) conj_ = columns_of(b, kcols);
}

void BbfContext::check_closed(const CForm& alpha) const {
  if (alpha.dim() != engine_->model().dim()) throw Error(Errc::DimensionMismatch, "form has the wrong dimension");
  if (!alpha.has_total_degree(2)) throw Error(Errc::WrongBidegree, "classes of H^2 need 2-form representatives");
  if (!engine_->model().d(alpha).is_zero())
    throw Error(Errc::NotClosedRepresentative, format_form(alpha) + " is not d-closed");
}

Vector<GaussRat> BbfContext::coordinates(const CForm& alpha) const {
  check_closed(alpha);
  auto x = from_engine_.solve(engine_->de_rham(2)->coordinates(alpha));
  if (!x) throw Error(Errc::NotInCohomology, "class is outside the span of the context basis");
  return *x;
}

CForm BbfContext::representative(const Vector<GaussRat>& coords) const {
  if (coords.size() != basis_.size()) throw Error(Errc::DimensionMismatch, "coordinate vector has the wrong length");
  CForm out(engine_->model().dim());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) out += coords[i] * basis_[i];
  return out;
}

Vector<GaussRat> BbfContext::engine_coordinates(const Vector<GaussRat>& coords) const { return to_engine_ * coords; }

GaussRat BbfContext::q(const CForm& alpha) const {
  check_closed(alpha);
  const Model& x = engine_->model();
  const int n = sigma_.n;
  GaussRat out = GaussRat(Rational(n, 2)) * x.integrate(wedge(mixed_, wedge(alpha, alpha)));
  if (n != 1) out += GaussRat(1 - n) * x.integrate(wedge(left_, alpha)) * x.integrate(wedge(right_, alpha));
  return out;
}

GaussRat BbfContext::polar(const CForm& a, const CForm& b) const {
  return (q(a + b) - q(a) - q(b)) * GaussRat(Rational(1, 2));
}

GaussRat BbfContext::polar_direct(const CForm& a, const CForm& b) const {
  check_closed(a);
  check_closed(b);
  const Model& x = engine_->model();
  const int n = sigma_.n;
  GaussRat out = GaussRat(Rational(n, 2)) * x.integrate(wedge(wedge(mixed_, a), b));
  const GaussRat cross = x.integrate(wedge(left_, a)) * x.integrate(wedge(right_, b)) +
                         x.integrate(wedge(left_, b)) * x.integrate(wedge(right_, a));
  out += GaussRat(Rational(1 - n, 2)) * cross;
  return out;
}

const Matrix<GaussRat>& BbfContext::conjugation_matrix() const {
  if (!conj_) throw Error(Errc::BasisNotConjugationStable, conj_error_);
  return *conj_;
}

Vector<GaussRat> BbfContext::conjugate(const Vector<GaussRat>& coords) const {
  return conjugation_matrix() * conj_vector(coords);
}

std::vector<Vector<GaussRat>> bbf_kernel(const BbfContext& ctx) { return kernel_basis(ctx.gram()); }

std::vector<Vector<GaussRat>> echelon_span(std::size_t n, const std::vector<Vector<GaussRat>>& vectors) {
  if (vectors.empty()) return {};
  const auto r = rref(columns_of(n, vectors).transpose());
  std::vector<Vector<GaussRat>> out;
  for (std::size_t i = 0; i < r.rank(); ++i) {
    Vector<GaussRat> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = r.reduced(i, j);
    out.push_back(std::move(row));
  }
  return out;
}

std::optional<Signature> coordinate_signature(const BbfContext& ctx, const std::vector<Vector<GaussRat>>& block) {
  const auto cols = block.empty() ? units(ctx.b2()) : block;
  const auto real = real_part_if_real(restrict_gram(ctx.gram(), cols, cols));
  if (!real) return std::nullopt;
  return symmetric_signature(*real);
}

Signature real_signature(const BbfContext& ctx, const std::vector<Vector<GaussRat>>& block) {
  const std::size_t b = ctx.b2();
  const auto cols = block.empty() ? units(b) : block;
  std::vector<Vector<GaussRat>> candidates;
  for (const auto& v : cols) {
    const Vector<GaussRat> cv = ctx.conjugate(v);
    Vector<GaussRat> plus(b), minus(b);
    for (std::size_t i = 0; i < b; ++i) {
      plus[i] = v[i] + cv[i];
      minus[i] = GaussRat::i() * (v[i] - cv[i]);
    }
    candidates.push_back(std::move(plus));
    candidates.push_back(std::move(minus));
  }
  const SpanSolver<GaussRat> inside(columns_of(b, cols));
  for (const auto& c : candidates)
    if (!inside.solve(c)) throw Error(Errc::BasisNotConjugationStable, "subspace is not stable under conjugation");
  std::vector<Vector<GaussRat>> real_basis;
  for (std::size_t pivot : rref(columns_of(b, candidates)).pivots) real_basis.push_back(candidates[pivot]);
  if (real_basis.size() != cols.size())
    throw Error(Errc::BasisNotConjugationStable, "real points do not span the subspace");
  const auto g = restrict_gram(ctx.gram(), real_basis, real_basis);
  try {
    return symmetric_signature(require_real(g));
  } catch (const Error& e) {
    if (e.code() == Errc::NonRealEntry)
      throw Error(Errc::NonRealEntry, "Gram matrix on real classes has a non-real entry");
    throw;
  }
}

Decomposition decomposition(const BbfContext& ctx) {
  const auto& engine = ctx.engine();
  if (!engine.ddbar_verdict().holds)
    throw Error(Errc::DdbarRequired, "the orthogonal decomposition needs the ddbar-lemma");
  const std::size_t b = ctx.b2();
  const CForm& s = ctx.sigma().sigma;
  Decomposition out;
  out.v = echelon_span(b, {ctx.coordinates(s), ctx.coordinates(conjugate_form(s))});
  out.w = echelon_span(b, bbf_kernel(ctx));
  std::vector<Vector<GaussRat>> h11;
  for (const auto& f : engine.bott_chern(1, 1)->basis()) h11.push_back(ctx.coordinates(f));
  out.h11 = echelon_span(b, h11);

  const auto& g = ctx.gram();
  if (!restrict_gram(g, out.v, out.h11).is_zero() || !restrict_gram(g, out.v, out.w).is_zero() ||
      !restrict_gram(g, out.w, out.h11).is_zero())
    throw Error(Errc::DecompositionFailure, "decomposition blocks are not orthogonal");
  std::vector<Vector<GaussRat>> all = out.v;
  all.insert(all.end(), out.w.begin(), out.w.end());
  all.insert(all.end(), out.h11.begin(), out.h11.end());
  if (all.size() != b || rank(columns_of(b, all)) != b)
    throw Error(Errc::DecompositionFailure, "decomposition blocks do not span H^2 as a direct sum");
  return out;
}

OrthogonalityResult orthogonality_condition(const BbfContext& ctx, const CForm& tau20, const CForm& tau02) {
  if (!ctx.engine().ddbar_verdict().holds)
    throw Error(Errc::DdbarRequired, "the orthogonality criterion needs the ddbar-lemma");
  for (const auto& [p, q] : tau20.bidegrees())
    if (p != 2 || q != 0) throw Error(Errc::WrongBidegree, "tau20 must be a (2,0)-form");
  for (const auto& [p, q] : tau02.bidegrees())
    if (p != 0 || q != 2) throw Error(Errc::WrongBidegree, "tau02 must be a (0,2)-form");
  const Model& x = ctx.engine().model();
  for (const CForm* t : {&tau20, &tau02})
    if (!x.d(*t).is_zero()) throw Error(Errc::NotClosedRepresentative, format_form(*t) + " is not d-closed");

  const int n = ctx.sigma().n;
  const CForm& s = ctx.sigma().sigma;
  const CForm sbar = conjugate_form(s);
  OrthogonalityResult out;
  out.against_sigma = x.integrate(wedge(wedge(power(s, n), power(sbar, n - 1)), tau02));
  out.against_sigma_bar = x.integrate(wedge(wedge(power(s, n - 1), power(sbar, n)), tau20));

  if (!ctx.watermarked()) {
    const CForm tau = tau20 + tau02;
    const bool polar_perp = ctx.polar(tau, s).is_zero() && ctx.polar(tau, sbar).is_zero();
    if (polar_perp != out.in_v_perp())
      throw Error(Errc::TheoremInconsistency, "integral criterion disagrees with the polar form");
  }
  return out;
}

QuadricReport quadric_report(const BbfContext& ctx) {
  const auto& engine = ctx.engine();
  const std::size_t b = ctx.b2();
  QuadricReport out;
  out.gram = ctx.gram();
  out.rank = rank(out.gram);
  out.kernel = bbf_kernel(ctx);
  out.coordinate = coordinate_signature(ctx);
  try {
    out.real_structure = real_signature(ctx);
  } catch (const Error& e) {
    if (e.code() != Errc::BasisNotConjugationStable) throw;
    out.real_structure_error = e.what();
  }
  out.smooth = out.rank == b;
  out.irreducible = out.rank >= 3;
  out.watermarked = ctx.watermarked();
  out.ddbar = engine.ddbar_verdict().holds;
  out.h20 = engine.dolbeault(2, 0)->dim();
  out.h11 = engine.dolbeault(1, 1)->dim();

  if (out.ddbar) {
    out.blocks = decomposition(ctx);
    out.h11_coordinate = coordinate_signature(ctx, out.blocks->h11);
    if (out.real_structure) out.h11_real_structure = real_signature(ctx, out.blocks->h11);
    if (!out.watermarked) {
      if (out.smooth != (out.h20 == 1))
        throw Error(Errc::TheoremInconsistency, "smoothness of the quadric disagrees with h^{2,0} = 1");
      if (out.irreducible != (out.h11 > 0))
        throw Error(Errc::TheoremInconsistency, "irreducibility of the quadric disagrees with h^{1,1} > 0");
    }
  } else {
    BcBlockData bc;
    std::vector<Vector<GaussRat>> outer, inner;
    for (const auto& f : engine.bott_chern(2, 0)->basis()) outer.push_back(ctx.coordinates(f));
    for (const auto& f : engine.bott_chern(0, 2)->basis()) outer.push_back(ctx.coordinates(f));
    for (const auto& f : engine.bott_chern(1, 1)->basis()) inner.push_back(ctx.coordinates(f));
    outer = echelon_span(b, outer);
    inner = echelon_span(b, inner);
    bc.dim_20_02 = outer.size();
    bc.rank_20_02 = rank(restrict_gram(out.gram, outer, outer));
    bc.dim_11 = inner.size();
    bc.rank_11 = rank(restrict_gram(out.gram, inner, inner));
    bc.orthogonal = restrict_gram(out.gram, outer, inner).is_zero();
    out.bc_blocks = bc;
  }
  return out;
}

}  // namespace csym
