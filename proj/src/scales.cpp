#include "pipframe/scales.hpp"

#include <cmath>

namespace pipframe::scales {

HilbertScale::HilbertScale(Eigen::VectorXd generator, int max_index)
    : generator_(std::move(generator)),
      max_index_(max_index),
      space_(FiniteMeasureSpace::counting(generator_.size())) {
  if (max_index_ < 0) throw DomainError("scale index range must be >= 0");
  for (Eigen::Index i = 0; i < generator_.size(); ++i)
    if (!(generator_(i) >= 1.0))
      throw DomainError("scale generator must satisfy A > I (entries >= 1)");
}

HilbertScale HilbertScale::diag_n(Eigen::Index n, int max_index) {
  Eigen::VectorXd a(n);
  for (Eigen::Index i = 0; i < n; ++i) a(i) = static_cast<double>(i + 1);
  return HilbertScale(std::move(a), max_index);
}

HilbertScale HilbertScale::sobolev(Eigen::Index n, int max_index) {
  Eigen::VectorXd a(n);
  for (Eigen::Index i = 0; i < n; ++i)
    a(i) = std::sqrt(1.0 + static_cast<double>(i) * static_cast<double>(i));
  return HilbertScale(std::move(a), max_index);
}

HilbertScale HilbertScale::oscillator(Eigen::Index n, int max_index) {
  Eigen::VectorXd a(n);
  for (Eigen::Index i = 0; i < n; ++i) a(i) = 2.0 * static_cast<double>(i) + 1.0;
  return HilbertScale(std::move(a), max_index);
}

spaces::DescPtr HilbertScale::scale_space(int k) const {
  if (std::abs(k) > max_index_)
    throw DomainError("scale index out of the configured range");
  Eigen::VectorXd w(generator_.size());
  for (Eigen::Index i = 0; i < generator_.size(); ++i)
    w(i) = std::pow(generator_(i), k);
  return spaces::SpaceDescriptor::weighted_l2(space_, std::move(w));
}

std::array<spaces::DescPtr, 3> HilbertScale::triplet(int k) const {
  if (k < 1) throw PreconditionError("triplet needs k >= 1");
  return {scale_space(k), scale_space(0), scale_space(-k)};
}

DiscreteRKHS::DiscreteRKHS(FiniteMeasureSpace sample_space,
                           Eigen::MatrixXcd kernel, Eigen::VectorXd weight)
    : space_(std::move(sample_space)),
      kernel_(std::move(kernel)),
      weight_(std::move(weight)) {
  const Eigen::Index n = kernel_.rows();
  if (kernel_.cols() != n || space_.size() != n || weight_.size() != n)
    throw DimensionError("kernel, weight and sample space sizes disagree");
  const double scale = std::max(1.0, kernel_.cwiseAbs().maxCoeff());
  if ((kernel_ - kernel_.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw DomainError("kernel matrix must be Hermitian");
  for (Eigen::Index i = 0; i < n; ++i)
    if (!(weight_(i) > 1.0))
      throw DomainError("RKHS weight function must satisfy m(x) > 1");

  if (kernel_.isIdentity(0.0)) {
    factor_ = Eigen::MatrixXcd::Identity(n, n);
    return;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(kernel_);
  const auto& ev = es.eigenvalues();
  if (ev(0) < -1e-10 * std::max(ev(ev.size() - 1), 1.0))
    throw DomainError("kernel matrix must be positive semidefinite");
  // K = F F^H with F = U sqrt(Lambda); mapped coordinates are F^H c
  Eigen::VectorXd roots = ev.cwiseMax(0.0).cwiseSqrt();
  factor_ = es.eigenvectors() * roots.asDiagonal();
}

DiscreteRKHS DiscreteRKHS::identity_kernel(Eigen::Index n,
                                           Eigen::VectorXd weight) {
  return DiscreteRKHS(FiniteMeasureSpace::counting(n),
                      Eigen::MatrixXcd::Identity(n, n), std::move(weight));
}

DiscreteRKHS DiscreteRKHS::gaussian_kernel(const Eigen::VectorXd& points,
                                           double sigma,
                                           Eigen::VectorXd weight) {
  if (!(sigma > 0.0)) throw DomainError("Gaussian kernel needs sigma > 0");
  const Eigen::Index n = points.size();
  Eigen::MatrixXcd K(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const double d = points(i) - points(j);
      K(i, j) = std::exp(-d * d / (2.0 * sigma * sigma));
    }
  return DiscreteRKHS(FiniteMeasureSpace::counting(n), std::move(K),
                      std::move(weight));
}

std::complex<double> DiscreteRKHS::evaluate(const Eigen::VectorXcd& mapped,
                                            Eigen::Index j) const {
  if (mapped.size() != size() || j < 0 || j >= size())
    throw DimensionError("bad evaluation request");
  return (factor_ * mapped)(j);
}

std::pair<VectorFamily, VectorFamily> rkhs_weight_pair(const DiscreteRKHS& rkhs,
                                                       int n) {
  if (n < 0) throw DomainError("weight exponent must be nonnegative");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rkhs.kernel());
  const double lo = es.eigenvalues()(0);
  const double hi = es.eigenvalues()(es.eigenvalues().size() - 1);
  if (!(lo > 1e-12 * std::max(hi, 1.0)))
    throw DomainError("kernel matrix is singular; RKHS inner product not definite");

  const Eigen::MatrixXcd columns = rkhs.factor().adjoint();  // k_x in mapped coords
  Eigen::MatrixXcd psi_m = columns;
  Eigen::MatrixXcd phi_m = columns;
  for (Eigen::Index i = 0; i < rkhs.size(); ++i) {
    const double mn = std::pow(rkhs.weight()(i), n);
    psi_m.col(i) /= mn;
    phi_m.col(i) *= mn;
  }
  return {VectorFamily(rkhs.space(), std::move(psi_m)),
          VectorFamily(rkhs.space(), std::move(phi_m))};
}

namespace {

DiscreteRKHS restrict(const DiscreteRKHS& rkhs, Eigen::Index n) {
  std::vector<std::string> labels(rkhs.space().labels().begin(),
                                  rkhs.space().labels().begin() + n);
  FiniteMeasureSpace sp(std::move(labels), rkhs.space().weights().head(n));
  return DiscreteRKHS(std::move(sp), rkhs.kernel().topLeftCorner(n, n),
                      rkhs.weight().head(n));
}

}  // namespace

RangeCertReport range_certificates(const DiscreteRKHS& rkhs, int n,
                                   const std::vector<int>& sweep_sizes) {
  auto [psi, phi] = rkhs_weight_pair(rkhs, n);
  Eigen::VectorXd up(rkhs.size()), down(rkhs.size());
  for (Eigen::Index i = 0; i < rkhs.size(); ++i) {
    up(i) = std::pow(rkhs.weight()(i), n);
    down(i) = 1.0 / up(i);
  }
  RangeCertReport rep;
  rep.psi_into_upper = frames::range_containment(
      psi, *spaces::SpaceDescriptor::weighted_l2(rkhs.space(), up));
  rep.phi_into_lower = frames::range_containment(
      phi, *spaces::SpaceDescriptor::weighted_l2(rkhs.space(), down));

  if (sweep_sizes.size() >= 2) {
    frames::PairGenerator gen = [&rkhs, n](int sz) {
      return rkhs_weight_pair(restrict(rkhs, sz), n);
    };
    auto ev = frames::semiframe_sweep(gen, sweep_sizes);
    rep.psi_class = ev.psi_class;
    rep.phi_class = ev.phi_class;
  } else {
    auto classify = [](const VectorFamily& fam) {
      auto fb = frames::frame_bounds(fam);
      return fb.lower > 1e-12 * std::max(fb.upper, 1.0)
                 ? frames::FamilyClass::Frame
                 : frames::FamilyClass::Neither;
    };
    rep.psi_class = classify(psi);
    rep.phi_class = classify(phi);
  }
  return rep;
}

}  // namespace pipframe::scales
