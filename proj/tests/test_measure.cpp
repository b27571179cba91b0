#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pipframe/measure.hpp"

using namespace pipframe;
using measure::FiniteMeasureSpace;

TEST_CASE("pair is the mu-weighted sesquilinear sum") {
  FiniteMeasureSpace space({"x", "y", "z"}, (Eigen::VectorXd(3) << 0.5, 1.0, 2.0).finished());
  Eigen::VectorXcd xi(3), eta(3);
  xi << 2.0, 0.0, 1.0;
  eta << 1.0, 5.0, 1.0;
  // 2*1*0.5 + 0*5*1 + 1*1*2 = 3, summed by hand
  CHECK(measure::pair(space, xi, eta) == std::complex<double>(3.0, 0.0));
}

TEST_CASE("pair is linear in the first slot and conjugate-linear in the second") {
  FiniteMeasureSpace space = FiniteMeasureSpace::counting(3);
  Eigen::VectorXcd xi(3), eta(3);
  xi << std::complex<double>(1, 2), std::complex<double>(0, -1), 3.0;
  eta << std::complex<double>(2, 1), 1.0, std::complex<double>(-1, 1);
  const std::complex<double> c(0.7, -0.3);
  CHECK(std::abs(measure::pair(space, c * xi, eta) -
                 c * measure::pair(space, xi, eta)) < 1e-14);
  CHECK(std::abs(measure::pair(space, xi, c * eta) -
                 std::conj(c) * measure::pair(space, xi, eta)) < 1e-14);
  CHECK(std::abs(measure::pair(space, eta, xi) -
                 std::conj(measure::pair(space, xi, eta))) < 1e-14);
}

TEST_CASE("counting space has unit weights and canonical labels") {
  auto space = FiniteMeasureSpace::counting(4);
  CHECK(space.size() == 4);
  CHECK(space.total_mass() == doctest::Approx(4.0));
  CHECK(space.labels()[0] == "0");
  CHECK(space.labels()[3] == "3");
}

TEST_CASE("invalid spaces are rejected") {
  CHECK_THROWS_AS(FiniteMeasureSpace({"a"}, (Eigen::VectorXd(1) << -1.0).finished()),
                  DomainError);
  CHECK_THROWS_AS(FiniteMeasureSpace({"a"}, (Eigen::VectorXd(1) << 0.0).finished()),
                  DomainError);
  CHECK_THROWS_AS(FiniteMeasureSpace({"a", "b"}, (Eigen::VectorXd(1) << 1.0).finished()),
                  DimensionError);
  CHECK_THROWS_AS(FiniteMeasureSpace({}, Eigen::VectorXd()), DomainError);
}

TEST_CASE("pair rejects mismatched field lengths") {
  auto space = FiniteMeasureSpace::counting(2);
  Eigen::VectorXcd good(2), bad(3);
  good.setZero();
  bad.setZero();
  CHECK_THROWS_AS(measure::pair(space, good, bad), DimensionError);
  CHECK_THROWS_AS(measure::pair(space, bad, good), DimensionError);
}
