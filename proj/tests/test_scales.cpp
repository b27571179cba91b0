#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pipframe/detail/rng.hpp"
#include "pipframe/scales.hpp"

using namespace pipframe;
using scales::DiscreteRKHS;
using scales::HilbertScale;

TEST_CASE("scale spaces carry the generator powers as weights") {
  auto scale = HilbertScale::diag_n(3, 2);
  auto h1 = scale.scale_space(1);
  CHECK(h1->kind() == spaces::SpaceDescriptor::Kind::WeightedL2);
  CHECK(h1->weight()(0) == doctest::Approx(1.0));
  CHECK(h1->weight()(1) == doctest::Approx(2.0));
  CHECK(h1->weight()(2) == doctest::Approx(3.0));
  auto hm2 = scale.scale_space(-2);
  CHECK(hm2->weight()(2) == doctest::Approx(1.0 / 9.0));
  CHECK_THROWS_AS(scale.scale_space(3), DomainError);
}

TEST_CASE("preset generators") {
  auto sob = HilbertScale::sobolev(3, 1);
  CHECK(sob.generator()(0) == doctest::Approx(1.0));
  CHECK(sob.generator()(2) == doctest::Approx(std::sqrt(5.0)));
  auto osc = HilbertScale::oscillator(3, 1);
  CHECK(osc.generator()(0) == doctest::Approx(1.0));
  CHECK(osc.generator()(1) == doctest::Approx(3.0));
  CHECK(osc.generator()(2) == doctest::Approx(5.0));
  CHECK_THROWS_AS(HilbertScale((Eigen::VectorXd(2) << 0.5, 2.0).finished(), 1),
                  DomainError);
}

TEST_CASE("norms increase along the scale") {
  auto scale = HilbertScale::oscillator(6, 3);
  detail::Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    const Eigen::VectorXcd v = rng.complex_vector(6);
    double prev = 0.0;
    for (int k = -3; k <= 3; ++k) {
      const double cur = spaces::norm(*scale.scale_space(k), v);
      CHECK(cur >= prev - 1e-12 * cur);
      prev = cur;
    }
  }
}

TEST_CASE("triplet shape and preconditions") {
  auto scale = HilbertScale::diag_n(4, 2);
  auto t = scale.triplet(2);
  CHECK(spaces::structurally_equal(*t[1],
                                   *spaces::dual_descriptor(*t[1])));
  CHECK(spaces::structurally_equal(*t[2], *spaces::dual_descriptor(*t[0])));
  CHECK_THROWS_AS(scale.triplet(0), PreconditionError);
}

TEST_CASE("identity kernel factors exactly") {
  Eigen::VectorXd m(3);
  m << 2.0, 3.0, 4.0;
  auto rkhs = DiscreteRKHS::identity_kernel(3, m);
  CHECK(rkhs.factor().isIdentity(0.0));
}

TEST_CASE("point evaluation reproduces kernel action") {
  Eigen::VectorXd pts(4);
  pts << 0.0, 0.7, 1.1, 2.5;
  Eigen::VectorXd m = Eigen::VectorXd::Constant(4, 2.0);
  auto rkhs = DiscreteRKHS::gaussian_kernel(pts, 0.8, m);
  // K is Hermitian with unit diagonal
  CHECK(std::abs(rkhs.kernel()(2, 2).real() - 1.0) < 1e-14);
  CHECK((rkhs.kernel() - rkhs.kernel().adjoint()).norm() < 1e-13);
  // K = F F^H
  CHECK((rkhs.factor() * rkhs.factor().adjoint() - rkhs.kernel()).norm() <
        1e-12);
  detail::Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    const Eigen::VectorXcd c = rng.complex_vector(4);
    const Eigen::VectorXcd mapped = rkhs.factor().adjoint() * c;
    for (Eigen::Index j = 0; j < 4; ++j)
      CHECK(std::abs(rkhs.evaluate(mapped, j) - (rkhs.kernel() * c)(j)) <
            1e-12);
  }
}

TEST_CASE("construction guards") {
  // weights must exceed 1
  CHECK_THROWS_AS(
      DiscreteRKHS::identity_kernel(2, Eigen::VectorXd::Ones(2)), DomainError);
  // Hermiticity
  Eigen::MatrixXcd k(2, 2);
  k << 1.0, std::complex<double>(0, 1), std::complex<double>(0, 1), 1.0;
  CHECK_THROWS_AS(DiscreteRKHS(measure::FiniteMeasureSpace::counting(2), k,
                               Eigen::VectorXd::Constant(2, 2.0)),
                  DomainError);
  // positive semidefiniteness
  Eigen::MatrixXcd neg = -Eigen::MatrixXcd::Identity(2, 2);
  CHECK_THROWS_AS(DiscreteRKHS(measure::FiniteMeasureSpace::counting(2), neg,
                               Eigen::VectorXd::Constant(2, 2.0)),
                  DomainError);
  // singular kernels are representable but yield no weight pair
  auto singular = DiscreteRKHS(measure::FiniteMeasureSpace::counting(2),
                               Eigen::MatrixXcd::Ones(2, 2),
                               Eigen::VectorXd::Constant(2, 2.0));
  CHECK_THROWS_AS(scales::rkhs_weight_pair(singular, 1), DomainError);
}

TEST_CASE("identity-kernel pair coincides with the weighted construction") {
  const Eigen::Index n = 5;
  Eigen::VectorXd m(n);
  for (Eigen::Index i = 0; i < n; ++i) m(i) = 1.5 + i;
  auto rkhs = DiscreteRKHS::identity_kernel(n, m);
  auto [psi, phi] = scales::rkhs_weight_pair(rkhs, 2);
  Eigen::VectorXcd mw(n);
  for (Eigen::Index i = 0; i < n; ++i) mw(i) = std::pow(m(i), -2);
  frames::VectorFamily theta(rkhs.space(),
                             Eigen::MatrixXcd::Identity(n, n));
  auto [wpsi, wphi] = frames::weighted_pair(mw, theta);
  CHECK((psi.members - wpsi.members).norm() < 1e-12);
  CHECK((phi.members - wphi.members).norm() < 1e-12);
  // weight cancellation: S = I
  auto rep = frames::check_reproducing_pair(psi, phi);
  CHECK((rep.resolution - Eigen::MatrixXcd::Identity(n, n)).norm() <= 1e-12);
}

TEST_CASE("range certificates cancel the weights for the identity kernel") {
  Eigen::VectorXd m(4);
  m << 2.0, 3.0, 4.0, 5.0;
  auto rkhs = DiscreteRKHS::identity_kernel(4, m);
  auto rep = scales::range_certificates(rkhs, 1);
  CHECK(rep.psi_into_upper.constant == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.phi_into_lower.constant == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("exponent zero reduces both certificates to the frame bound root") {
  Eigen::VectorXd pts(4);
  pts << 0.0, 0.5, 1.3, 2.0;
  auto rkhs = DiscreteRKHS::gaussian_kernel(pts, 1.0,
                                            Eigen::VectorXd::Constant(4, 2.0));
  auto rep = scales::range_certificates(rkhs, 0);
  auto [psi, phi] = scales::rkhs_weight_pair(rkhs, 0);
  const double expected = std::sqrt(frames::frame_bounds(psi).upper);
  CHECK(rep.psi_into_upper.constant == doctest::Approx(expected).epsilon(1e-6));
  CHECK(rep.phi_into_lower.constant == doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("growing samples with unbounded weights trend semi-frame") {
  Eigen::VectorXd m(32);
  for (Eigen::Index i = 0; i < 32; ++i) m(i) = 2.0 + i;
  auto rkhs = DiscreteRKHS::identity_kernel(32, m);
  auto rep = scales::range_certificates(rkhs, 1, {4, 8, 16, 32});
  CHECK(rep.psi_class == frames::FamilyClass::UpperSemiFrameTendency);
  CHECK(rep.phi_class == frames::FamilyClass::LowerSemiFrameTendency);
}
