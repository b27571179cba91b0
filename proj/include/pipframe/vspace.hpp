#ifndef PIPFRAME_VSPACE_HPP
#define PIPFRAME_VSPACE_HPP

#include <Eigen/Dense>
#include <functional>

#include "pipframe/frames.hpp"

namespace pipframe::vspace {

using frames::PairReport;
using frames::RangeCertificate;
using frames::VectorFamily;
using measure::ScalarField;

// The map T_phi : xi -> sum_x xi(x) phi_x mu_x, defined weakly by
// <T_phi xi, g> = pair(xi, analysis(phi, g)). Coincides with the
// synthesis operator in finite dimension.
struct SynthesisMap {
  VectorFamily family;
  Eigen::MatrixXcd matrix;  // d x N
};

SynthesisMap synthesis_map(const VectorFamily& phi);

// V_phi = classes of fields modulo Ker T_phi, with the Hilbertian class
// norm ||[xi]|| = ||T_phi xi||.
class QuotientSpace {
public:
  QuotientSpace(VectorFamily phi, double rank_rel_tol = 1e-10);

  const SynthesisMap& map() const { return map_; }
  Eigen::Index ambient_dim() const { return map_.matrix.cols(); }
  Eigen::Index kernel_dim() const { return kernel_basis_.cols(); }
  Eigen::Index dim() const { return ambient_dim() - kernel_dim(); }
  const Eigen::MatrixXcd& kernel_basis() const { return kernel_basis_; }
  const Eigen::VectorXd& singular_values() const { return singular_values_; }
  double rank_tolerance() const { return rank_tol_abs_; }

private:
  SynthesisMap map_;
  Eigen::MatrixXcd kernel_basis_;  // N x kernel_dim, orthonormal columns
  Eigen::VectorXd singular_values_;
  double rank_tol_abs_ = 0.0;
};

double class_norm(const QuotientSpace& q, const ScalarField& xi);

// the sup_{|g|<=1} |<T xi, g>| form of the same norm, evaluated over
// sampled directions plus the analytic maximizer
double class_norm_supform(const QuotientSpace& q, const ScalarField& xi,
                          int samples = 64, std::uint64_t seed = 5);

std::complex<double> class_inner(const QuotientSpace& q, const ScalarField& xi,
                                 const ScalarField& eta);

// <<xi, eta>> with eta = analysis(phi, g) representing the V_psi class;
// equals <T_phi xi, g>. Requires a verified reproducing pair.
std::complex<double> duality_pairing(const QuotientSpace& q_phi,
                                     const VectorFamily& phi,
                                     const PairReport& report,
                                     const ScalarField& xi,
                                     const Eigen::VectorXcd& g);

struct RepresentedFunctional {
  std::function<std::complex<double>(const ScalarField&)> evaluate;
  ScalarField recovered;  // eta(x) = <g, phi_x>, a V_psi representative
};

RepresentedFunctional represent_functional(const QuotientSpace& q_phi,
                                           const Eigen::VectorXcd& g);

struct RankReport {
  bool verdict = false;
  Eigen::Index rank = 0;
  double singular_gap = 0.0;  // smallest kept / largest dropped
  double tolerance = 0.0;
};

// mu-total: Ker C_phi = {0}, i.e. rank(T_phi) = d
RankReport is_mu_total(const VectorFamily& phi, double rank_rel_tol = 1e-10);
// mu-independent: Ker T_phi = {0}, i.e. rank(T_phi) = N
RankReport is_mu_independent(const VectorFamily& phi,
                             double rank_rel_tol = 1e-10);

struct QuotientDimsReport {
  Eigen::Index dim_v_phi = 0;
  Eigen::Index dim_v_psi = 0;
  Eigen::Index kernel_phi = 0;
  Eigen::Index kernel_psi = 0;
  bool dims_equal_d = false;
  bool isomorphism_verified = false;
};

// Requires range-containment certificates for (psi, p) and (phi, p-bar)
// and an invertible resolution operator.
QuotientDimsReport quotient_dimensions(const VectorFamily& psi,
                                       const VectorFamily& phi,
                                       const RangeCertificate& psi_cert,
                                       const RangeCertificate& phi_cert,
                                       const PairReport& report,
                                       double rank_rel_tol = 1e-10);

}  // namespace pipframe::vspace

#endif
