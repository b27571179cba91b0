#ifndef PIPFRAME_SCALES_HPP
#define PIPFRAME_SCALES_HPP

#include <Eigen/Dense>
#include <array>

#include "pipframe/frames.hpp"
#include "pipframe/spaces.hpp"

namespace pipframe::scales {

using frames::VectorFamily;
using measure::FiniteMeasureSpace;
using measure::ScalarField;

// Hilbert scale from a positive diagonal generator A > I: the space H_k
// carries the norm ||A^k v||, realized as a weighted l2 descriptor.
class HilbertScale {
public:
  HilbertScale(Eigen::VectorXd generator, int max_index);

  static HilbertScale diag_n(Eigen::Index n, int max_index);      // a_n = n
  static HilbertScale sobolev(Eigen::Index n, int max_index);     // (1+n^2)^{1/2}
  static HilbertScale oscillator(Eigen::Index n, int max_index);  // 2n+1

  Eigen::Index dim() const { return generator_.size(); }
  int max_index() const { return max_index_; }
  const Eigen::VectorXd& generator() const { return generator_; }
  const FiniteMeasureSpace& space() const { return space_; }

  spaces::DescPtr scale_space(int k) const;

  // (H_k, H_0, H_{-k}) for k >= 1
  std::array<spaces::DescPtr, 3> triplet(int k) const;

private:
  Eigen::VectorXd generator_;
  int max_index_;
  FiniteMeasureSpace space_;
};

// Finite sample of a reproducing kernel Hilbert space: kernel matrix
// over the sample points plus the weight m(x) > 1 driving the scale.
class DiscreteRKHS {
public:
  DiscreteRKHS(FiniteMeasureSpace sample_space, Eigen::MatrixXcd kernel,
               Eigen::VectorXd weight);

  static DiscreteRKHS identity_kernel(Eigen::Index n, Eigen::VectorXd weight);
  // Gaussian kernel over supplied 1-D points
  static DiscreteRKHS gaussian_kernel(const Eigen::VectorXd& points,
                                      double sigma, Eigen::VectorXd weight);

  Eigen::Index size() const { return kernel_.rows(); }
  const FiniteMeasureSpace& space() const { return space_; }
  const Eigen::MatrixXcd& kernel() const { return kernel_; }
  const Eigen::VectorXd& weight() const { return weight_; }
  // Cholesky factor L with K = L L^H; RKHS vectors live in mapped
  // coordinates c -> L^H c where the inner product is the standard one
  const Eigen::MatrixXcd& factor() const { return factor_; }

  // point evaluation f(x_j) = <f, k_{x_j}>_K of a mapped-coordinate vector
  std::complex<double> evaluate(const Eigen::VectorXcd& mapped,
                                Eigen::Index j) const;

private:
  FiniteMeasureSpace space_;
  Eigen::MatrixXcd kernel_;
  Eigen::VectorXd weight_;
  Eigen::MatrixXcd factor_;
};

// psi_x = m(x)^{-n} k_x, phi_x = m(x)^{n} k_x, in mapped coordinates.
std::pair<VectorFamily, VectorFamily> rkhs_weight_pair(const DiscreteRKHS& rkhs,
                                                       int n);

struct RangeCertReport {
  frames::RangeCertificate psi_into_upper;  // C_psi into H_n
  frames::RangeCertificate phi_into_lower;  // C_phi into H_{-n}
  frames::FamilyClass psi_class = frames::FamilyClass::Neither;
  frames::FamilyClass phi_class = frames::FamilyClass::Neither;
};

// Continuity certificates of the analysis maps into the weighted spaces,
// plus sweep-based classification evidence over growing sample counts.
RangeCertReport range_certificates(const DiscreteRKHS& rkhs, int n,
                                   const std::vector<int>& sweep_sizes = {});

}  // namespace pipframe::scales

#endif
