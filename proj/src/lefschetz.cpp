#include "csym/lefschetz.hpp"

#include <tuple>

#include "csym/text.hpp"

namespace csym {

LefschetzMap lefschetz_matrix(const CohomologyEngine& engine, Theory theory, const CForm& tau, int k, int p, int q) {
  const Model& model = engine.model();
  const int m = model.dim();
  if (tau.dim() != m) throw Error(Errc::DimensionMismatch, "tau has the wrong dimension");
  if (k < 0) throw Error(Errc::OutOfRange, "power must be non-negative");
  if (!model.d(tau).is_zero()) throw Error(Errc::NotClosedTau, format_form(tau) + " is not d-closed");
  const auto bideg = tau.bidegrees();
  int tp = 0, tq = 0;
  if (theory == Theory::DeRham) {
    if (!tau.is_zero()) {
      const int deg = bideg.begin()->first + bideg.begin()->second;
      if (!tau.has_total_degree(deg)) throw Error(Errc::WrongBidegree, "tau has mixed total degree");
      tp = deg;
    }
  } else {
    if (bideg.size() > 1) throw Error(Errc::WrongBidegree, "tau is not of pure bidegree");
    if (!bideg.empty()) std::tie(tp, tq) = *bideg.begin();
  }

  LefschetzMap out;
  out.theory = theory;
  out.tau = tau;
  out.power = k;
  if (theory == Theory::DeRham) {
    const int target = p + k * tp;
    if (p < 0 || p > 2 * m) throw Error(Errc::OutOfRange, "source degree out of range");
    if (target > 2 * m) throw Error(Errc::TargetOutOfRange, "target degree " + std::to_string(target) + " exceeds " + std::to_string(2 * m));
    out.source = engine.de_rham(p);
    out.target = engine.de_rham(target);
  } else {
    const int tp_total = p + k * tp, tq_total = q + k * tq;
    if (p < 0 || q < 0 || p > m || q > m) throw Error(Errc::OutOfRange, "source bidegree out of range");
    if (tp_total > m || tq_total > m)
      throw Error(Errc::TargetOutOfRange, "target bidegree (" + std::to_string(tp_total) + "," +
                                              std::to_string(tq_total) + ") out of range");
    out.source = engine.space(theory, p, q);
    out.target = engine.space(theory, tp_total, tq_total);
  }

  const CForm tk = power(tau, k);
  std::vector<Vector<GaussRat>> cols;
  for (const auto& f : out.source->basis()) cols.push_back(out.target->coordinates(wedge(tk, f)));
  out.matrix = Matrix<GaussRat>::from_columns(out.target->dim(), cols);
  // Exact forms must land on exact forms for the map to be well defined.
  for (const auto& e : out.source->exact_spanning())
    if (!out.target->is_exact(wedge(tk, e)))
      throw Error(Errc::NotInCohomology, "wedge with tau does not preserve exactness in " + out.target->label());
  return out;
}

const char* lefschetz_kind_name(LefschetzKind kind) noexcept {
  switch (kind) {
    case LefschetzKind::Isomorphism: return "isomorphism";
    case LefschetzKind::InjectiveOnly: return "injective_only";
    case LefschetzKind::Kernel: return "kernel";
  }
  return "?";
}

LefschetzCheck lefschetz_check(const LefschetzMap& map) {
  LefschetzCheck out;
  out.rank = rank(map.matrix);
  out.cokernel_dim = map.matrix.rows() - out.rank;
  if (out.rank < map.matrix.cols()) {
    out.kind = LefschetzKind::Kernel;
    out.kernel = kernel_basis(map.matrix);
  } else {
    out.kind = out.cokernel_dim == 0 ? LefschetzKind::Isomorphism : LefschetzKind::InjectiveOnly;
  }
  return out;
}

}  // namespace csym
