#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pipframe/detail/rng.hpp"
#include "pipframe/spaces.hpp"

using namespace pipframe;
using measure::FiniteMeasureSpace;
using spaces::SpaceDescriptor;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

Eigen::VectorXcd cvec2(double a, double b) {
  Eigen::VectorXcd v(2);
  v << a, b;
  return v;
}

// exact value of inf ||g||_1 + ||v-g||_inf by scanning the breakpoints of
// the piecewise-linear cost t + sum (|v_x| - t)_+ mu_x
double l1_linf_oracle(const Eigen::VectorXcd& v, const Eigen::VectorXd& mu) {
  double best = kInf;
  const double vmax = v.cwiseAbs().maxCoeff();
  std::vector<double> breaks{0.0};
  for (Eigen::Index i = 0; i < v.size(); ++i) breaks.push_back(std::abs(v(i)));
  for (double t : breaks) {
    double cost = std::min(t, vmax);
    for (Eigen::Index i = 0; i < v.size(); ++i)
      cost += std::max(std::abs(v(i)) - t, 0.0) * mu(i);
    best = std::min(best, cost);
  }
  return best;
}

// brute-force decomposition for real v with at most three points: both
// norms are absolute and monotone, so the optimal g is a componentwise
// shrink of v; scan each shrink factor on a fine grid
double brute_force_inductive(const SpaceDescriptor& a, const SpaceDescriptor& b,
                             const Eigen::VectorXcd& v) {
  const int steps = 40;
  const Eigen::Index n = v.size();
  REQUIRE(n <= 3);
  double best = kInf;
  std::vector<int> idx(n, 0);
  while (true) {
    Eigen::VectorXcd g(n);
    for (Eigen::Index i = 0; i < n; ++i)
      g(i) = v(i) * (static_cast<double>(idx[i]) / steps);
    best = std::min(best, spaces::norm(a, g) +
                              spaces::norm(b, Eigen::VectorXcd(v - g)));
    Eigen::Index carry = 0;
    while (carry < n && ++idx[carry] > steps) idx[carry++] = 0;
    if (carry == n) break;
  }
  return best;
}

// true dual norm for two points and a real-phase direction: maximize the
// pairing over a fine angular sweep of the unit sphere of the norm
double dual_norm_grid_2d(const SpaceDescriptor& desc, const Eigen::VectorXcd& v) {
  REQUIRE(v.size() == 2);
  const Eigen::VectorXd& mu = desc.space().weights();
  double best = 0.0;
  const int steps = 4000;
  for (int s = 0; s < steps; ++s) {
    const double th = 2.0 * M_PI * s / steps;
    Eigen::VectorXcd xi(2);
    // align phases with v so the pairing is real and maximal
    xi << std::cos(th) * (std::abs(v(0)) > 0 ? v(0) / std::abs(v(0)) : 1.0),
        std::sin(th) * (std::abs(v(1)) > 0 ? v(1) / std::abs(v(1)) : 1.0);
    const double n = spaces::norm(desc, xi);
    if (n == 0.0) continue;
    const double pr = std::abs(measure::pair(desc.space(), xi, v));
    best = std::max(best, pr / n);
  }
  return best;
}

}  // namespace

TEST_CASE("leaf norms against hand values") {
  auto space = FiniteMeasureSpace::counting(2);
  CHECK(spaces::norm(*SpaceDescriptor::lp(space, 2.0), cvec2(3, 4)) ==
        doctest::Approx(5.0));
  CHECK(spaces::norm(*SpaceDescriptor::lp(space, kInf), cvec2(3, 1)) ==
        doctest::Approx(3.0));
  CHECK(spaces::norm(*SpaceDescriptor::lp(space, 1.0), cvec2(3, 1)) ==
        doctest::Approx(4.0));
  // sum of the two leaf norms
  auto proj = SpaceDescriptor::projective(SpaceDescriptor::lp(space, kInf),
                                          SpaceDescriptor::lp(space, 1.0));
  CHECK(spaces::norm(*proj, cvec2(3, 1)) == doctest::Approx(7.0));
  auto w = SpaceDescriptor::weighted_l2(space,
                                        (Eigen::VectorXd(2) << 1.0, 0.5).finished());
  CHECK(spaces::norm(*w, cvec2(1, 2)) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("weighted measures enter every Lp norm") {
  FiniteMeasureSpace space({"x", "y"}, (Eigen::VectorXd(2) << 4.0, 1.0).finished());
  CHECK(spaces::norm(*SpaceDescriptor::lp(space, 1.0), cvec2(1, 2)) ==
        doctest::Approx(6.0));
  CHECK(spaces::norm(*SpaceDescriptor::lp(space, 2.0), cvec2(1, 2)) ==
        doctest::Approx(std::sqrt(8.0)));
  // the max norm ignores the weights
  CHECK(spaces::norm(*SpaceDescriptor::lp(space, kInf), cvec2(1, 2)) ==
        doctest::Approx(2.0));
}

TEST_CASE("inductive norm matches the threshold oracle for L1 + Linf") {
  auto space = FiniteMeasureSpace::counting(2);
  auto l1 = SpaceDescriptor::lp(space, 1.0);
  auto linf = SpaceDescriptor::lp(space, kInf);
  CHECK(spaces::inductive_norm(*l1, *linf, cvec2(3, 1)) ==
        doctest::Approx(3.0).epsilon(0.005));

  detail::Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    const Eigen::Index n = 2 + rng.integer(5);
    auto spc = FiniteMeasureSpace(
        [&] {
          std::vector<std::string> l;
          for (Eigen::Index i = 0; i < n; ++i) l.push_back(std::to_string(i));
          return l;
        }(),
        rng.positive_vector(n));
    auto a = SpaceDescriptor::lp(spc, 1.0);
    auto b = SpaceDescriptor::lp(spc, kInf);
    const Eigen::VectorXcd v = rng.complex_vector(n);
    const double oracle = l1_linf_oracle(v, spc.weights());
    CHECK(spaces::inductive_norm(*a, *b, v) ==
          doctest::Approx(oracle).epsilon(0.005));
  }
}

TEST_CASE("inductive norm matches brute-force decomposition on small spaces") {
  detail::Rng rng(23);
  for (int t = 0; t < 12; ++t) {
    const Eigen::Index n = 2 + rng.integer(2);
    auto space = FiniteMeasureSpace::counting(n);
    auto a = t % 2 == 0 ? SpaceDescriptor::lp(space, 1.0)
                        : SpaceDescriptor::lp(space, 2.0);
    auto b = t % 2 == 0 ? SpaceDescriptor::lp(space, 2.0)
                        : SpaceDescriptor::lp(space, kInf);
    const Eigen::VectorXcd v = rng.complex_vector(n);
    const double oracle = brute_force_inductive(*a, *b, v);
    const double solved = spaces::inductive_norm(*a, *b, v);
    CHECK(solved == doctest::Approx(oracle).epsilon(0.01));
    CHECK(solved <= std::min(spaces::norm(*a, v), spaces::norm(*b, v)) + 1e-9);
  }
}

TEST_CASE("Lp with itself collapses the decomposition") {
  auto space = FiniteMeasureSpace::counting(4);
  auto l2 = SpaceDescriptor::lp(space, 2.0);
  detail::Rng rng(29);
  for (int t = 0; t < 10; ++t) {
    const Eigen::VectorXcd v = rng.complex_vector(4);
    CHECK(spaces::inductive_norm(*l2, *l2, v) ==
          doctest::Approx(v.norm()).epsilon(1e-6));
  }
  CHECK(spaces::inductive_norm(*l2, *l2, Eigen::VectorXcd::Zero(4)) == 0.0);
}

TEST_CASE("norm axioms hold for every kind") {
  detail::Rng rng(31);
  auto space = FiniteMeasureSpace::counting(5);
  std::vector<spaces::DescPtr> descs = {
      SpaceDescriptor::lp(space, 1.0), SpaceDescriptor::lp(space, 3.0),
      SpaceDescriptor::lp(space, kInf),
      SpaceDescriptor::weighted_l2(space, rng.positive_vector(5)),
      SpaceDescriptor::projective(SpaceDescriptor::lp(space, 1.0),
                                  SpaceDescriptor::lp(space, kInf)),
      SpaceDescriptor::inductive(SpaceDescriptor::lp(space, 1.0),
                                 SpaceDescriptor::lp(space, kInf))};
  for (const auto& d : descs) {
    for (int t = 0; t < 8; ++t) {
      const Eigen::VectorXcd v = rng.complex_vector(5);
      const Eigen::VectorXcd w = rng.complex_vector(5);
      const double c = rng.uniform(0.1, 3.0);
      const double nv = spaces::norm(*d, v);
      CHECK(nv > 0.0);
      CHECK(spaces::norm(*d, Eigen::VectorXcd(c * v)) ==
            doctest::Approx(c * nv).epsilon(0.01));
      CHECK(spaces::norm(*d, Eigen::VectorXcd(v + w)) <=
            nv + spaces::norm(*d, w) + 0.01 * nv);
    }
    CHECK(spaces::norm(*d, Eigen::VectorXcd::Zero(5)) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("dual descriptors") {
  auto space = FiniteMeasureSpace::counting(3);
  CHECK(spaces::structurally_equal(
      *spaces::dual_descriptor(*SpaceDescriptor::lp(space, 2.0)),
      *SpaceDescriptor::lp(space, 2.0)));
  CHECK(spaces::structurally_equal(
      *spaces::dual_descriptor(*SpaceDescriptor::lp(space, 1.0)),
      *SpaceDescriptor::lp(space, kInf)));
  CHECK(spaces::structurally_equal(
      *spaces::dual_descriptor(*SpaceDescriptor::lp(space, 4.0)),
      *SpaceDescriptor::lp(space, 4.0 / 3.0)));
  auto w = SpaceDescriptor::weighted_l2(
      space, (Eigen::VectorXd(3) << 1.0, 2.0, 3.0).finished());
  auto wd = spaces::dual_descriptor(*w);
  CHECK(wd->weight()(1) == doctest::Approx(0.5));
  CHECK(wd->weight()(2) == doctest::Approx(1.0 / 3.0));

  auto proj = SpaceDescriptor::projective(SpaceDescriptor::lp(space, kInf),
                                          SpaceDescriptor::lp(space, 1.0));
  auto pd = spaces::dual_descriptor(*proj);
  CHECK(pd->kind() == SpaceDescriptor::Kind::Inductive);
  CHECK(pd->a()->p() == doctest::Approx(1.0));
  CHECK(std::isinf(pd->b()->p()));
  // involution
  CHECK(spaces::structurally_equal(*spaces::dual_descriptor(*pd), *proj));
}

TEST_CASE("dual norms of the leaf kinds are the Hoelder extremizers") {
  auto space = FiniteMeasureSpace::counting(2);
  CHECK(spaces::dual_norm(*SpaceDescriptor::lp(space, 1.0), cvec2(3, 1)) ==
        doctest::Approx(3.0));
  detail::Rng rng(37);
  for (int t = 0; t < 20; ++t) {
    const Eigen::VectorXcd v = rng.complex_vector(2);
    CHECK(spaces::dual_norm(*SpaceDescriptor::lp(space, 2.0), v) ==
          doctest::Approx(v.norm()).epsilon(1e-10));
    // closed form vs 2-D grid for a generic exponent
    auto l3 = SpaceDescriptor::lp(space, 3.0);
    CHECK(spaces::dual_norm(*l3, v) ==
          doctest::Approx(dual_norm_grid_2d(*l3, v)).epsilon(0.001));
  }
}

TEST_CASE("dual norm of a projective combination is the Minkowski-sum gauge") {
  auto space = FiniteMeasureSpace::counting(2);
  auto proj = SpaceDescriptor::projective(SpaceDescriptor::lp(space, 1.0),
                                          SpaceDescriptor::lp(space, kInf));
  // the sup over { ||xi||_1 + ||xi||_inf <= 1 } of <xi, (3,1)> is attained
  // at xi = (1/2, 0) and equals 3/2
  CHECK(spaces::dual_norm(*proj, cvec2(3, 1)) ==
        doctest::Approx(1.5).epsilon(0.005));
  detail::Rng rng(41);
  for (int t = 0; t < 10; ++t) {
    const Eigen::VectorXcd v = rng.complex_vector(2);
    CHECK(spaces::dual_norm(*proj, v) ==
          doctest::Approx(dual_norm_grid_2d(*proj, v)).epsilon(0.01));
  }
}

TEST_CASE("dual norm of an inductive combination is the max of the duals") {
  auto space = FiniteMeasureSpace::counting(2);
  auto ind = SpaceDescriptor::inductive(SpaceDescriptor::lp(space, 1.0),
                                        SpaceDescriptor::lp(space, kInf));
  detail::Rng rng(43);
  for (int t = 0; t < 10; ++t) {
    const Eigen::VectorXcd v = rng.complex_vector(2);
    const double expected =
        std::max(spaces::dual_norm(*SpaceDescriptor::lp(space, 1.0), v),
                 spaces::dual_norm(*SpaceDescriptor::lp(space, kInf), v));
    CHECK(spaces::dual_norm(*ind, v) == doctest::Approx(expected));
    // independent confirmation on the 2-D grid
    CHECK(spaces::dual_norm(*ind, v) ==
          doctest::Approx(dual_norm_grid_2d(*ind, v)).epsilon(0.01));
  }
}

TEST_CASE("Hoelder bound holds on random draws and is tight for L1/Linf") {
  detail::Rng rng(47);
  auto space = FiniteMeasureSpace::counting(6);
  auto l3 = SpaceDescriptor::lp(space, 3.0);
  for (int t = 0; t < 500; ++t) {
    const Eigen::VectorXcd v = rng.complex_vector(6);
    const Eigen::VectorXcd w = rng.complex_vector(6);
    CHECK(spaces::holder_bound_check(*l3, v, w));
  }
  // sign-aligned extremizer: w_x = phase(v_x) makes the L1/Linf pairing tight
  auto l1 = SpaceDescriptor::lp(space, 1.0);
  const Eigen::VectorXcd v = rng.complex_vector(6);
  Eigen::VectorXcd w(6);
  for (Eigen::Index i = 0; i < 6; ++i) w(i) = v(i) / std::abs(v(i));
  const double lhs = std::abs(measure::pair(space, v, w));
  const double rhs = spaces::norm(*l1, v) *
                     spaces::norm(*spaces::dual_descriptor(*l1), w);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("subgradients satisfy the defining convexity inequality") {
  detail::Rng rng(53);
  auto space = FiniteMeasureSpace::counting(4);
  std::vector<spaces::DescPtr> descs = {
      SpaceDescriptor::lp(space, 1.0), SpaceDescriptor::lp(space, 2.5),
      SpaceDescriptor::lp(space, kInf),
      SpaceDescriptor::weighted_l2(space, rng.positive_vector(4)),
      SpaceDescriptor::projective(SpaceDescriptor::lp(space, 1.0),
                                  SpaceDescriptor::lp(space, kInf))};
  for (const auto& d : descs) {
    for (int t = 0; t < 20; ++t) {
      const Eigen::VectorXcd v = rng.complex_vector(4);
      const Eigen::VectorXcd w = rng.complex_vector(4);
      const Eigen::VectorXcd g = spaces::norm_subgradient(*d, v);
      const double lhs = spaces::norm(*d, w);
      const double rhs = spaces::norm(*d, v) +
                         (g.adjoint() * (w - v))(0).real();
      CHECK(lhs >= rhs - 1e-9 * std::max(1.0, lhs));
    }
  }
}

TEST_CASE("invalid descriptors are rejected") {
  auto space = FiniteMeasureSpace::counting(2);
  CHECK_THROWS_AS(SpaceDescriptor::lp(space, 0.5), DomainError);
  CHECK_THROWS_AS(SpaceDescriptor::weighted_l2(
                      space, (Eigen::VectorXd(2) << 1.0, 0.0).finished()),
                  DomainError);
  CHECK_THROWS_AS(SpaceDescriptor::weighted_l2(
                      space, (Eigen::VectorXd(1) << 1.0).finished()),
                  DimensionError);
  auto other = FiniteMeasureSpace::counting(3);
  CHECK_THROWS_AS(SpaceDescriptor::projective(SpaceDescriptor::lp(space, 1.0),
                                              SpaceDescriptor::lp(other, 1.0)),
                  DimensionError);
  CHECK_THROWS_AS(
      spaces::norm(*SpaceDescriptor::lp(space, 2.0), Eigen::VectorXcd::Zero(3)),
      DimensionError);
}
