#ifndef PIPFRAME_FRAMES_HPP
#define PIPFRAME_FRAMES_HPP

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pipframe/measure.hpp"
#include "pipframe/spaces.hpp"

namespace pipframe::frames {

using measure::FiniteMeasureSpace;
using measure::ScalarField;

// Desk-scale surrogate of a weakly measurable function x -> psi_x: one
// member of the central Hilbert space C^d per measure point.
struct VectorFamily {
  FiniteMeasureSpace space;
  Eigen::MatrixXcd members;  // d x N, one column per point
  std::optional<double> uniform_bound;

  VectorFamily(FiniteMeasureSpace sp, Eigen::MatrixXcd m,
               std::optional<double> bound = std::nullopt);

  Eigen::Index dim() const { return members.rows(); }
  Eigen::Index points() const { return members.cols(); }
};

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
  Eigen::VectorXcd lower_witness;  // unit vectors attaining the bounds
  Eigen::VectorXcd upper_witness;
};

enum class FamilyClass {
  Frame,
  UpperSemiFrameTendency,
  LowerSemiFrameTendency,
  Neither,
};

std::string to_string(FamilyClass c);

struct PairReport {
  Eigen::MatrixXcd resolution;  // S_{psi,phi}
  double operator_norm = 0.0;   // largest singular value
  double sigma_min = 0.0;
  double condition_number = 0.0;
  bool invertible = false;
  double gl_tolerance_used = 0.0;  // absolute threshold applied to sigma_min
  double dual_residual = 0.0;      // ||S_{psi, S^-1 phi} - I||, invertible case
  FamilyClass psi_class = FamilyClass::Neither;
  FamilyClass phi_class = FamilyClass::Neither;
};

// field x -> <f, psi_x>
ScalarField analysis(const VectorFamily& psi, const Eigen::VectorXcd& f);

// sum_x xi(x) psi_x mu_x
Eigen::VectorXcd synthesis(const VectorFamily& psi, const ScalarField& xi);

// S = C* C as a d x d matrix
Eigen::MatrixXcd frame_operator(const VectorFamily& psi);

// extremal eigenvalues of S with unit eigenvector witnesses
FrameBounds frame_bounds(const VectorFamily& psi);

// S_{psi,phi} = C_phi* C_psi
Eigen::MatrixXcd resolution_operator(const VectorFamily& psi,
                                     const VectorFamily& phi);

// gl_tolerance is relative: S is invertible iff sigma_min > tol * sigma_max
PairReport check_reproducing_pair(const VectorFamily& psi,
                                  const VectorFamily& phi,
                                  double gl_tolerance = 1e-8);

// phi'_x = S_{psi,phi}^{-1} phi_x; throws GlViolationError when S fails
// the GL test.
VectorFamily canonical_dual(const VectorFamily& psi, const VectorFamily& phi,
                            double gl_tolerance = 1e-8);

// psi_n = m_n theta_n, phi_n = theta_n / conj(m_n)
std::pair<VectorFamily, VectorFamily> weighted_pair(
    const Eigen::VectorXcd& m, const VectorFamily& theta);

// componentwise min / max of two real-valued families
std::pair<VectorFamily, VectorFamily> minmax_pair(const VectorFamily& theta1,
                                                  const VectorFamily& theta2);

struct SweepRow {
  int n = 0;
  FrameBounds psi_bounds;
  FrameBounds phi_bounds;
};

struct SweepEvidence {
  std::vector<SweepRow> rows;
  FamilyClass psi_class = FamilyClass::Neither;
  FamilyClass phi_class = FamilyClass::Neither;
  // fraction of probe vectors whose analysis L2 norm stays bounded along
  // the sweep, one entry per family
  double psi_domain_fraction = 1.0;
  double phi_domain_fraction = 1.0;
};

using PairGenerator =
    std::function<std::pair<VectorFamily, VectorFamily>(int n)>;

// Frame-bound trajectories over a truncation sweep; the only desk-scale
// observable of the upper/lower semi-frame dichotomy.
SweepEvidence semiframe_sweep(const PairGenerator& generator,
                              const std::vector<int>& ns,
                              double bounded_factor = 10.0);

struct RangeCertificate {
  double constant = 0.0;  // estimate of sup_{|f|=1} norm(desc, C_psi f)
  Eigen::VectorXcd witness;
};

RangeCertificate range_containment(const VectorFamily& psi,
                                   const spaces::SpaceDescriptor& desc,
                                   int trials = 64, std::uint64_t seed = 11);

}  // namespace pipframe::frames

#endif
