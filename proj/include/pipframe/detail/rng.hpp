#ifndef PIPFRAME_DETAIL_RNG_HPP
#define PIPFRAME_DETAIL_RNG_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace pipframe::detail {

// Deterministic random source. std::*_distribution is implementation
// defined, so all draws go through explicit Box-Muller on mt19937_64
// uniforms; identical seeds give identical streams on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {
    // 53-bit mantissa uniform in [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  std::complex<double> complex_gaussian() {
    return {gaussian(), gaussian()};
  }

  Eigen::VectorXcd complex_vector(Eigen::Index n) {
    Eigen::VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = complex_gaussian();
    return v;
  }

  Eigen::VectorXd real_vector(Eigen::Index n) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = gaussian();
    return v;
  }

  Eigen::MatrixXcd complex_matrix(Eigen::Index rows, Eigen::Index cols) {
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = complex_gaussian();
    return m;
  }

  // strictly positive weights, bounded away from zero
  Eigen::VectorXd positive_vector(Eigen::Index n, double lo = 0.2, double hi = 2.0) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = uniform(lo, hi);
    return v;
  }

  std::uint64_t integer(std::uint64_t bound) { return engine_() % bound; }

private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace pipframe::detail

#endif
