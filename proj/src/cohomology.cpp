#include "csym/cohomology.hpp"

#include <mutex>

#include "csym/text.hpp"

namespace csym {

namespace {

std::vector<Monomial> block(int m, int p, int q) {
  if (p < 0 || q < 0 || p > m || q > m) return {};
  return enumerate_basis(m, p, q);
}

std::vector<Monomial> degree_block(int m, int k) {
  if (k < 0 || k > 2 * m) return {};
  return enumerate_degree(m, k);
}

Matrix<GaussRat> stack_rows(const Matrix<GaussRat>& a, const Matrix<GaussRat>& b) {
  Matrix<GaussRat> out(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
  return out;
}

Matrix<GaussRat> join_columns(const Matrix<GaussRat>& a, const Matrix<GaussRat>& b) {
  Matrix<GaussRat> out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

}  // namespace

const char* theory_name(Theory t) noexcept {
  switch (t) {
    case Theory::DeRham: return "derham";
    case Theory::Dolbeault: return "dolbeault";
    case Theory::BottChern: return "bc";
    case Theory::Aeppli: return "aeppli";
  }
  return "?";
}

Theory parse_theory(std::string_view text) {
  if (text == "derham" || text == "de-rham" || text == "dr") return Theory::DeRham;
  if (text == "dolbeault") return Theory::Dolbeault;
  if (text == "bc" || text == "bott-chern") return Theory::BottChern;
  if (text == "aeppli") return Theory::Aeppli;
  throw Error(Errc::Usage, "unknown cohomology theory '" + std::string(text) + "'");
}

CohomologySpace::CohomologySpace(std::shared_ptr<const Model> model, Theory theory, int p, int q)
    : model_(std::move(model)), theory_(theory), p_(p), q_(q) {
  const Model& x = *model_;
  const int m = x.dim();
  auto d = [&x](const Monomial& a) { return x.d(CForm::monomial(x.dim(), a)); };
  auto del = [&x](const Monomial& a) { return x.del(CForm::monomial(x.dim(), a)); };
  auto delbar = [&x](const Monomial& a) { return x.delbar(CForm::monomial(x.dim(), a)); };
  auto ddbar = [&x](const Monomial& a) { return x.del_delbar(CForm::monomial(x.dim(), a)); };

  if (theory == Theory::DeRham) {
    if (q != -1 || p < 0 || p > 2 * m)
      throw Error(Errc::OutOfRange, "degree " + std::to_string(p) + " out of range for dimension " + std::to_string(m));
    ambient_ = enumerate_degree(m, p);
    closed_ = operator_matrix(ambient_, degree_block(m, p + 1), d);
    exact_ = operator_matrix(degree_block(m, p - 1), ambient_, d);
  } else {
    ambient_ = enumerate_basis(m, p, q);
    switch (theory) {
      case Theory::Dolbeault:
        closed_ = operator_matrix(ambient_, block(m, p, q + 1), delbar);
        exact_ = operator_matrix(block(m, p, q - 1), ambient_, delbar);
        break;
      case Theory::BottChern:
        closed_ = stack_rows(operator_matrix(ambient_, block(m, p + 1, q), del),
                             operator_matrix(ambient_, block(m, p, q + 1), delbar));
        exact_ = operator_matrix(block(m, p - 1, q - 1), ambient_, ddbar);
        break;
      case Theory::Aeppli:
        closed_ = operator_matrix(ambient_, block(m, p + 1, q + 1), ddbar);
        exact_ = join_columns(operator_matrix(block(m, p - 1, q), ambient_, del),
                              operator_matrix(block(m, p, q - 1), ambient_, delbar));
        break;
      case Theory::DeRham: break;
    }
  }

  const auto cycles = kernel_basis(closed_);
  const auto combined = join_columns(exact_, Matrix<GaussRat>::from_columns(ambient_.size(), cycles));
  for (std::size_t pivot : rref(combined).pivots) {
    if (pivot < exact_.cols()) continue;
    const auto& v = cycles[pivot - exact_.cols()];
    basis_coords_.push_back(v);
    basis_.push_back(form_from_coordinates(m, ambient_, v));
  }
  decompose_ = SpanSolver<GaussRat>(join_columns(Matrix<GaussRat>::from_columns(ambient_.size(), basis_coords_), exact_));
  exact_solver_ = SpanSolver<GaussRat>(exact_);
}

std::vector<CForm> CohomologySpace::exact_spanning() const {
  std::vector<CForm> out;
  for (std::size_t j = 0; j < exact_.cols(); ++j) {
    CForm f = form_from_coordinates(model_->dim(), ambient_, exact_.column(j));
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

bool CohomologySpace::is_closed(const CForm& f) const {
  if (f.dim() != model_->dim()) throw Error(Errc::DimensionMismatch, "form dimension differs from the model");
  return is_zero_vector(closed_ * coordinates_on(f, ambient_));
}

bool CohomologySpace::is_exact(const CForm& f) const {
  if (f.dim() != model_->dim()) throw Error(Errc::DimensionMismatch, "form dimension differs from the model");
  return exact_solver_.solve(coordinates_on(f, ambient_)).has_value();
}

Vector<GaussRat> CohomologySpace::coordinates(const CForm& f) const {
  if (f.dim() != model_->dim()) throw Error(Errc::DimensionMismatch, "form dimension differs from the model");
  const auto v = coordinates_on(f, ambient_);
  if (!is_zero_vector(closed_ * v))
    throw Error(Errc::NotClosed, format_form(f) + " is not closed in " + label());
  auto x = decompose_.solve(v);
  if (!x) throw Error(Errc::NotInCohomology, format_form(f) + " does not decompose in " + label());
  x->resize(basis_.size());
  return *x;
}

CForm CohomologySpace::representative(const Vector<GaussRat>& coords) const {
  if (coords.size() != basis_.size()) throw Error(Errc::DimensionMismatch, "coordinate vector length differs from dim " + label());
  CForm out(model_->dim());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    out += coords[i] * basis_[i];
  }
  return out;
}

std::string CohomologySpace::label() const {
  switch (theory_) {
    case Theory::DeRham: return "H^" + std::to_string(p_) + "_dR";
    case Theory::Dolbeault: return "H^{" + std::to_string(p_) + "," + std::to_string(q_) + "}_dbar";
    case Theory::BottChern: return "H^{" + std::to_string(p_) + "," + std::to_string(q_) + "}_BC";
    case Theory::Aeppli: return "H^{" + std::to_string(p_) + "," + std::to_string(q_) + "}_A";
  }
  return "?";
}

std::shared_ptr<const CohomologySpace> CohomologyEngine::space(Theory theory, int p, int q) const {
  if (theory == Theory::DeRham) q = -1;
  const auto key = std::make_tuple(theory, p, q);
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  auto computed = std::make_shared<const CohomologySpace>(model_, theory, p, q);
  std::unique_lock lock(mutex_);
  return cache_.try_emplace(key, std::move(computed)).first->second;
}

std::size_t CohomologyEngine::cached_spaces() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

ClassVector CohomologyEngine::class_of(Theory theory, const CForm& f) const {
  if (f.is_zero()) throw Error(Errc::WrongBidegree, "the degree of the zero form is ambiguous");
  const auto bideg = f.bidegrees();
  std::shared_ptr<const CohomologySpace> s;
  if (theory == Theory::DeRham) {
    const int k = bideg.begin()->first + bideg.begin()->second;
    if (!f.has_total_degree(k)) throw Error(Errc::WrongBidegree, "form has mixed total degree");
    s = de_rham(k);
  } else {
    if (bideg.size() != 1) throw Error(Errc::WrongBidegree, "form is not of pure bidegree");
    s = space(theory, bideg.begin()->first, bideg.begin()->second);
  }
  return {s, s->coordinates(f)};
}

NaturalMap CohomologyEngine::bc_to_dolbeault(int p, int q) const {
  const auto bc = bott_chern(p, q);
  const auto dol = dolbeault(p, q);
  std::vector<Vector<GaussRat>> cols;
  for (const auto& f : bc->basis()) cols.push_back(dol->coordinates(f));
  NaturalMap out;
  out.matrix = Matrix<GaussRat>::from_columns(dol->dim(), cols);
  out.rank = rank(out.matrix);
  return out;
}

DdbarVerdict CohomologyEngine::ddbar_verdict() const {
  const int m = model_->dim();
  DdbarVerdict out;
  out.caveat = !model_->is_builtin();
  for (int k = 0; k <= 2 * m; ++k)
    for (int p = std::min(k, m); p >= 0 && k - p <= m; --p) {
      if (!bc_to_dolbeault(p, k - p).bijective()) {
        out.holds = false;
        out.witness = std::make_pair(p, k - p);
        return out;
      }
    }
  return out;
}

PairingCheck CohomologyEngine::serre_pairing_check(int p, int q) const {
  const int m = model_->dim();
  const auto a = dolbeault(p, q);
  const auto b = dolbeault(m - p, m - q);
  PairingCheck out;
  out.matrix = Matrix<GaussRat>(a->dim(), b->dim());
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < b->dim(); ++j) out.matrix(i, j) = model_->integrate(wedge(a->basis()[i], b->basis()[j]));
  out.nondegenerate = a->dim() == b->dim() && rank(out.matrix) == a->dim();
  return out;
}

ClassVector CohomologyEngine::conjugate_class(const ClassVector& v) const {
  const CohomologySpace& s = *v.space;
  const auto target = s.theory() == Theory::DeRham ? de_rham(s.p()) : space(s.theory(), s.q(), s.p());
  const CForm image = conjugate_form(v.representative());
  if (!target->is_closed(image))
    throw Error(Errc::NotClosed, "conjugate of a class representative is not closed in " + target->label());
  return {target, target->coordinates(image)};
}

}  // namespace csym
