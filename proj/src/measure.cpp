#include "pipframe/measure.hpp"

namespace pipframe::measure {

FiniteMeasureSpace::FiniteMeasureSpace(std::vector<std::string> labels,
                                       Eigen::VectorXd weights)
    : labels_(std::move(labels)), weights_(std::move(weights)) {
  if (weights_.size() < 1)
    throw DomainError("measure space needs at least one point");
  if (static_cast<Eigen::Index>(labels_.size()) != weights_.size())
    throw DimensionError("label/weight count mismatch");
  for (Eigen::Index i = 0; i < weights_.size(); ++i) {
    if (!(weights_(i) > 0.0))
      throw DomainError("measure weight at point " + labels_[i] +
                        " must be strictly positive");
  }
}

FiniteMeasureSpace FiniteMeasureSpace::counting(Eigen::Index n) {
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = std::to_string(i);
  return FiniteMeasureSpace(std::move(labels), Eigen::VectorXd::Ones(n));
}

std::complex<double> pair(const FiniteMeasureSpace& space, const ScalarField& xi,
                          const ScalarField& eta) {
  if (xi.size() != space.size() || eta.size() != space.size())
    throw DimensionError("scalar field length does not match measure space");
  std::complex<double> acc = 0.0;
  for (Eigen::Index i = 0; i < space.size(); ++i)
    acc += xi(i) * std::conj(eta(i)) * space.weights()(i);
  return acc;
}

double total_mass(const FiniteMeasureSpace& space) { return space.total_mass(); }

}  // namespace pipframe::measure
