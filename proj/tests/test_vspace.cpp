#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pipframe/detail/rng.hpp"
#include "pipframe/vspace.hpp"

using namespace pipframe;
using frames::VectorFamily;
using measure::FiniteMeasureSpace;

namespace {

// {e1, e2, e1+e2} in C^2: mu-total but not mu-independent
VectorFamily overcomplete() {
  Eigen::MatrixXcd m(2, 3);
  m << 1, 0, 1, 0, 1, 1;
  return VectorFamily(FiniteMeasureSpace::counting(3), m);
}

VectorFamily onb(Eigen::Index n) {
  return VectorFamily(FiniteMeasureSpace::counting(n),
                      Eigen::MatrixXcd::Identity(n, n));
}

}  // namespace

TEST_CASE("quotient dimensions of an overcomplete family") {
  vspace::QuotientSpace q(overcomplete());
  CHECK(q.ambient_dim() == 3);
  CHECK(q.kernel_dim() == 1);
  CHECK(q.dim() == 2);
  // the kernel basis really lies in Ker T_phi
  const Eigen::VectorXcd k = q.kernel_basis().col(0);
  CHECK((q.map().matrix * k).norm() < 1e-12);
  // and is proportional to (1, 1, -1)
  CHECK(std::abs(std::abs(k(0) / k(2)) - 1.0) < 1e-12);
  CHECK((k(0) + k(2)).real() == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("class norm vanishes exactly on the kernel and is shift invariant") {
  vspace::QuotientSpace q(overcomplete());
  detail::Rng rng(3);
  const Eigen::VectorXcd k = q.kernel_basis().col(0);
  CHECK(vspace::class_norm(q, k) < 1e-13);
  for (int t = 0; t < 20; ++t) {
    const Eigen::VectorXcd xi = rng.complex_vector(3);
    const std::complex<double> c = rng.complex_gaussian();
    const double a = vspace::class_norm(q, xi);
    const double b = vspace::class_norm(q, Eigen::VectorXcd(xi + c * k));
    CHECK(std::abs(a - b) < 1e-12 * std::max(1.0, a));
  }
}

TEST_CASE("sup form agrees with the closed-form class norm") {
  vspace::QuotientSpace q(overcomplete());
  detail::Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    const Eigen::VectorXcd xi = rng.complex_vector(3);
    CHECK(vspace::class_norm_supform(q, xi) ==
          doctest::Approx(vspace::class_norm(q, xi)).epsilon(1e-10));
  }
}

TEST_CASE("class inner product polarizes the class norm") {
  vspace::QuotientSpace q(overcomplete());
  detail::Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    const Eigen::VectorXcd xi = rng.complex_vector(3);
    const Eigen::VectorXcd eta = rng.complex_vector(3);
    const double n2 = vspace::class_norm(q, xi);
    CHECK(vspace::class_inner(q, xi, xi).real() ==
          doctest::Approx(n2 * n2).epsilon(1e-10));
    CHECK(std::abs(vspace::class_inner(q, xi, xi).imag()) < 1e-12);
    // linear in the first slot
    const std::complex<double> c = rng.complex_gaussian();
    CHECK(std::abs(vspace::class_inner(q, Eigen::VectorXcd(c * xi), eta) -
                   c * vspace::class_inner(q, xi, eta)) < 1e-10);
  }
}

TEST_CASE("mu-totality and mu-independence against explicit constructions") {
  auto rep = vspace::is_mu_total(overcomplete());
  CHECK(rep.verdict);
  CHECK(rep.rank == 2);
  CHECK_FALSE(vspace::is_mu_independent(overcomplete()).verdict);

  CHECK(vspace::is_mu_total(onb(4)).verdict);
  CHECK(vspace::is_mu_independent(onb(4)).verdict);

  // a family missing a direction is not mu-total
  Eigen::MatrixXcd flat(2, 2);
  flat << 1, 2, 0, 0;
  VectorFamily partial(FiniteMeasureSpace::counting(2), flat);
  CHECK_FALSE(vspace::is_mu_total(partial).verdict);
  CHECK(vspace::is_mu_total(partial).rank == 1);
}

TEST_CASE("duality pairing equals <T_phi xi, g>") {
  detail::Rng rng(11);
  auto phi = overcomplete();
  auto psi = overcomplete();
  auto report = frames::check_reproducing_pair(psi, phi);
  REQUIRE(report.invertible);
  vspace::QuotientSpace q(phi);
  for (int t = 0; t < 20; ++t) {
    const Eigen::VectorXcd xi = rng.complex_vector(3);
    const Eigen::VectorXcd g = rng.complex_vector(2);
    const std::complex<double> lhs =
        vspace::duality_pairing(q, phi, report, xi, g);
    const std::complex<double> rhs = (g.adjoint() * (q.map().matrix * xi))(0);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("duality pairing refuses non-invertible pairs") {
  Eigen::MatrixXcd mp(2, 2), mq(2, 2);
  mp << 1, 0, 0, 0;
  mq << 0, 0, 0, 1;
  auto space = FiniteMeasureSpace::counting(2);
  VectorFamily psi(space, mp), phi(space, mq);
  auto report = frames::check_reproducing_pair(psi, phi);
  vspace::QuotientSpace q(phi);
  CHECK_THROWS_AS(vspace::duality_pairing(q, phi, report,
                                          Eigen::VectorXcd::Zero(2),
                                          Eigen::VectorXcd::Zero(2)),
                  PreconditionError);
}

TEST_CASE("functional representation round trip") {
  detail::Rng rng(13);
  auto phi = overcomplete();
  vspace::QuotientSpace q(phi);
  for (int t = 0; t < 10; ++t) {
    const Eigen::VectorXcd g = rng.complex_vector(2);
    auto fn = vspace::represent_functional(q, g);
    // the recovered representative is the analysis field of g
    CHECK((fn.recovered - frames::analysis(phi, g)).norm() < 1e-13);
    for (int s = 0; s < 5; ++s) {
      const Eigen::VectorXcd xi = rng.complex_vector(3);
      const std::complex<double> direct =
          (g.adjoint() * (q.map().matrix * xi))(0);
      CHECK(std::abs(fn.evaluate(xi) - direct) < 1e-12);
    }
  }
}

TEST_CASE("quotient dimension report for a reproducing pair") {
  auto psi = onb(3);
  auto phi = onb(3);
  auto report = frames::check_reproducing_pair(psi, phi);
  auto l2 = spaces::SpaceDescriptor::lp(psi.space, 2.0);
  auto cert_psi = frames::range_containment(psi, *l2);
  auto cert_phi = frames::range_containment(phi, *l2);
  auto dims = vspace::quotient_dimensions(psi, phi, cert_psi, cert_phi, report);
  CHECK(dims.dim_v_phi == 3);
  CHECK(dims.dim_v_psi == 3);
  CHECK(dims.kernel_phi == 0);
  CHECK(dims.dims_equal_d);
  CHECK(dims.isomorphism_verified);
}
