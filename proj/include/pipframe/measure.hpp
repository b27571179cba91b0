#ifndef PIPFRAME_MEASURE_HPP
#define PIPFRAME_MEASURE_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "pipframe/errors.hpp"

namespace pipframe::measure {

// A function X -> C on the points of a finite measure space.
using ScalarField = Eigen::VectorXcd;

// Finitely many atoms with strictly positive weights; every integral in
// the library is a weighted sum over such a space.
class FiniteMeasureSpace {
public:
  FiniteMeasureSpace(std::vector<std::string> labels, Eigen::VectorXd weights);

  // n points labelled "0".."n-1", all weights 1
  static FiniteMeasureSpace counting(Eigen::Index n);

  Eigen::Index size() const { return weights_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  double total_mass() const { return weights_.sum(); }

  bool operator==(const FiniteMeasureSpace& other) const {
    return labels_ == other.labels_ && weights_ == other.weights_;
  }

private:
  std::vector<std::string> labels_;
  Eigen::VectorXd weights_;
};

// The sesquilinear pairing sum_x xi(x) conj(eta(x)) mu_x; linear in the
// first slot, conjugate-linear in the second.
std::complex<double> pair(const FiniteMeasureSpace& space, const ScalarField& xi,
                          const ScalarField& eta);

double total_mass(const FiniteMeasureSpace& space);

}  // namespace pipframe::measure

#endif
