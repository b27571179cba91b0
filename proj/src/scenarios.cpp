#include "pipframe/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pipframe/detail/rng.hpp"
#include "pipframe/frames.hpp"
#include "pipframe/operators.hpp"
#include "pipframe/scales.hpp"
#include "pipframe/vspace.hpp"

namespace pipframe::scenarios {

using frames::VectorFamily;
using measure::FiniteMeasureSpace;
using serial::Json;

namespace {

const std::vector<std::string> kBuiltins = {
    "onb-sanity",          "paper-weighted-1-over-n",
    "paper-weighted-n",    "rkhs-identity-kernel",
    "minmax-probe",        "lp-duality-grid",
    "scale-triplet",       "operator-algebra-fuzz",
};

// accumulates the checks and artifacts of one scenario run
struct Collector {
  std::vector<CheckResult> checks;
  Json data = Json::object();

  void check(std::string name, double residual, double tolerance) {
    checks.push_back({std::move(name), residual <= tolerance, residual,
                      tolerance});
  }
  void require(std::string name, bool ok) {
    checks.push_back({std::move(name), ok, ok ? 0.0 : 1.0, 0.0});
  }
  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
  }
};

VectorFamily onb(Eigen::Index n) {
  return VectorFamily(FiniteMeasureSpace::counting(n),
                      Eigen::MatrixXcd::Identity(n, n));
}

// largest relative defect of pair(C_psi f, C_phi g) = <S f, g> over draws
double keystone_residual(const VectorFamily& psi, const VectorFamily& phi,
                         detail::Rng& rng, int trials) {
  const Eigen::MatrixXcd S = frames::resolution_operator(psi, phi);
  const double s_norm = std::max(S.norm(), 1e-300);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Eigen::VectorXcd f = rng.complex_vector(psi.dim());
    const Eigen::VectorXcd g = rng.complex_vector(phi.dim());
    const std::complex<double> lhs =
        measure::pair(psi.space, frames::analysis(psi, f),
                      frames::analysis(phi, g));
    const std::complex<double> rhs = (g.adjoint() * (S * f))(0);
    worst = std::max(worst,
                     std::abs(lhs - rhs) / (s_norm * f.norm() * g.norm()));
  }
  return worst;
}

// exact minimizer of ||g||_1 + ||h||_inf over v = g + h: clip at the best
// breakpoint of the piecewise-linear cost t + sum (|v_x| - t)_+ mu_x
double l1_linf_threshold_oracle(const Eigen::VectorXcd& v,
                                const Eigen::VectorXd& mu) {
  std::vector<double> breaks{0.0};
  for (Eigen::Index i = 0; i < v.size(); ++i) breaks.push_back(std::abs(v(i)));
  double best = std::numeric_limits<double>::infinity();
  const double vmax = v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
  for (double t : breaks) {
    double cost = std::min(t, vmax);
    for (Eigen::Index i = 0; i < v.size(); ++i)
      cost += std::max(std::abs(v(i)) - t, 0.0) * mu(i);
    best = std::min(best, cost);
  }
  return best;
}

// gauge of the Minkowski sum of the L^inf and L^1 unit balls: clip v at a
// threshold t and take the best max(t, remaining weighted l1 mass)
double linf_l1_minkowski_gauge(const Eigen::VectorXcd& v,
                               const Eigen::VectorXd& mu) {
  auto cost = [&](double t) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
      s += std::max(std::abs(v(i)) - t, 0.0) * mu(i);
    return std::max(t, s);
  };
  double lo = 0.0, hi = v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (cost(m1) < cost(m2))
      hi = m2;
    else
      lo = m1;
  }
  return cost(0.5 * (lo + hi));
}

ScenarioResult finish(const std::string& name, std::uint64_t seed,
                      Collector&& col) {
  ScenarioResult res;
  res.name = name;
  res.seed = seed;
  res.checks = std::move(col.checks);
  res.passed = std::all_of(res.checks.begin(), res.checks.end(),
                           [](const CheckResult& c) { return c.passed; });

  Json jchecks = Json::array();
  std::ostringstream text;
  text << "scenario " << name << " (seed " << seed << ")\n";
  for (const auto& c : res.checks) {
    jchecks.push_back(Json{{"name", c.name},
                           {"passed", c.passed},
                           {"residual", c.residual},
                           {"tolerance", c.tolerance}});
    text << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name
         << "  residual=" << c.residual << "  tolerance=" << c.tolerance
         << "\n";
  }
  text << (res.passed ? "PASS" : "FAIL") << ": " << name << "\n";
  res.text = text.str();
  res.report = Json{{"schema", "pipframe/1"},
                    {"scenario", name},
                    {"seed", seed},
                    {"passed", res.passed},
                    {"checks", jchecks},
                    {"data", col.data}};
  return res;
}

// ---------------------------------------------------------------- builtins

ScenarioResult run_onb_sanity(std::uint64_t seed) {
  Collector col;
  detail::Rng rng(seed);
  const Eigen::Index n = 8;
  VectorFamily theta = onb(n);

  auto fb = frames::frame_bounds(theta);
  col.check("frame-bounds-lower-equals-1", std::abs(fb.lower - 1.0), 1e-12);
  col.check("frame-bounds-upper-equals-1", std::abs(fb.upper - 1.0), 1e-12);

  auto rep = frames::check_reproducing_pair(theta, theta);
  col.check("resolution-is-identity",
            (rep.resolution - Eigen::MatrixXcd::Identity(n, n)).norm(), 1e-12);
  col.require("resolution-invertible", rep.invertible);

  VectorFamily dual = frames::canonical_dual(theta, theta);
  col.check("canonical-dual-equals-family",
            (dual.members - theta.members).norm(), 1e-12);

  col.check("pairing-identity", keystone_residual(theta, theta, rng, 20),
            1e-12);
  col.data["pair_report"] = serial::to_json(rep);
  return finish("onb-sanity", seed, std::move(col));
}

ScenarioResult run_weighted(const std::string& name, bool inverse,
                            std::uint64_t seed) {
  Collector col;
  detail::Rng rng(seed);
  const std::vector<int> sizes = {4, 16, 64, 256};

  auto weights = [inverse](int n) {
    Eigen::VectorXcd m(n);
    for (int i = 0; i < n; ++i) {
      const double v = static_cast<double>(i + 1);
      m(i) = inverse ? 1.0 / v : v;
    }
    return m;
  };
  frames::PairGenerator gen = [&](int n) {
    return frames::weighted_pair(weights(n), onb(n));
  };

  Json table = Json::array();
  for (int n : sizes) {
    auto [psi, phi] = gen(n);
    const double nn = static_cast<double>(n) * n;
    auto rep = frames::check_reproducing_pair(psi, phi);
    const std::string tag = "n" + std::to_string(n);
    col.check(tag + "-resolution-is-identity",
              (rep.resolution - Eigen::MatrixXcd::Identity(n, n)).norm(),
              1e-12);

    auto pb = frames::frame_bounds(psi);
    auto qb = frames::frame_bounds(phi);
    const double lo_psi = inverse ? 1.0 / nn : 1.0;
    const double hi_psi = inverse ? 1.0 : nn;
    const double lo_phi = inverse ? 1.0 : 1.0 / nn;
    const double hi_phi = inverse ? nn : 1.0;
    const double tol_small = 1e-10;
    const double tol_big = 1e-8 * nn;
    col.check(tag + "-psi-lower-bound", std::abs(pb.lower - lo_psi),
              inverse ? tol_small : tol_small);
    col.check(tag + "-psi-upper-bound", std::abs(pb.upper - hi_psi),
              inverse ? tol_small : tol_big);
    col.check(tag + "-phi-lower-bound", std::abs(qb.lower - lo_phi),
              inverse ? tol_small : tol_small);
    col.check(tag + "-phi-upper-bound", std::abs(qb.upper - hi_phi),
              inverse ? tol_big : tol_small);
    table.push_back(Json{{"n", n},
                         {"psi_bounds", Json::array({pb.lower, pb.upper})},
                         {"phi_bounds", Json::array({qb.lower, qb.upper})},
                         {"s_minus_i",
                          (rep.resolution - Eigen::MatrixXcd::Identity(n, n))
                              .norm()}});
    if (n <= 64)
      col.check(tag + "-pairing-identity", keystone_residual(psi, phi, rng, 10),
                1e-11);
  }

  auto ev = frames::semiframe_sweep(gen, sizes);
  const auto expect_psi = inverse ? frames::FamilyClass::UpperSemiFrameTendency
                                  : frames::FamilyClass::LowerSemiFrameTendency;
  const auto expect_phi = inverse ? frames::FamilyClass::LowerSemiFrameTendency
                                  : frames::FamilyClass::UpperSemiFrameTendency;
  col.require("psi-sweep-class-" + frames::to_string(expect_psi),
              ev.psi_class == expect_psi);
  col.require("phi-sweep-class-" + frames::to_string(expect_phi),
              ev.phi_class == expect_phi);
  col.data["bounds_table"] = table;
  col.data["sweep"] = serial::to_json(ev);
  return finish(name, seed, std::move(col));
}

ScenarioResult run_rkhs_identity(std::uint64_t seed) {
  Collector col;
  const Eigen::Index n = 6;
  const int power = 1;
  Eigen::VectorXd m(n);
  for (Eigen::Index i = 0; i < n; ++i) m(i) = static_cast<double>(i) + 2.0;
  auto rkhs = scales::DiscreteRKHS::identity_kernel(n, m);
  auto [psi, phi] = scales::rkhs_weight_pair(rkhs, power);

  // synthesis acts as pointwise multiplication by m^power here, exactly
  auto q_phi = vspace::QuotientSpace(phi);
  detail::Rng rng(seed);
  double worst = 0.0;
  for (int t = 0; t < 16; ++t) {
    Eigen::VectorXcd xi = rng.complex_vector(n);
    Eigen::VectorXcd expected(n);
    for (Eigen::Index i = 0; i < n; ++i)
      expected(i) = xi(i) * std::pow(m(i), power);
    worst = std::max(worst, (q_phi.map().matrix * xi - expected).norm());
  }
  col.check("synthesis-multiplies-by-weight-power", worst, 0.0);

  auto rep = frames::check_reproducing_pair(psi, phi);
  col.check("weight-cancellation-resolution-identity",
            (rep.resolution - Eigen::MatrixXcd::Identity(n, n)).norm(), 1e-12);

  auto q_psi = vspace::QuotientSpace(psi);
  col.require("quotient-dims-full",
              q_phi.dim() == n && q_psi.dim() == n &&
                  q_phi.kernel_dim() == 0 && q_psi.kernel_dim() == 0);

  auto certs = scales::range_certificates(rkhs, power);
  col.check("psi-range-certificate-equals-1",
            std::abs(certs.psi_into_upper.constant - 1.0), 1e-9);
  col.check("phi-range-certificate-equals-1",
            std::abs(certs.phi_into_lower.constant - 1.0), 1e-9);

  // the same pair through the plain weighted construction
  Eigen::VectorXcd mw(n);
  for (Eigen::Index i = 0; i < n; ++i) mw(i) = std::pow(m(i), -power);
  auto [wpsi, wphi] = frames::weighted_pair(mw, onb(n));
  col.check("matches-weighted-pair-construction",
            std::max((psi.members - wpsi.members).norm(),
                     (phi.members - wphi.members).norm()),
            1e-12);

  col.data["pair_report"] = serial::to_json(rep);
  col.data["psi_certificate"] = serial::to_json(certs.psi_into_upper);
  col.data["phi_certificate"] = serial::to_json(certs.phi_into_lower);
  return finish("rkhs-identity-kernel", seed, std::move(col));
}

ScenarioResult run_minmax_probe(std::uint64_t seed) {
  Collector col;
  detail::Rng rng(seed);
  const Eigen::Index n = 5;
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd b = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    a.col(j) += 0.2 * rng.real_vector(n);
    b.col(j) += 0.2 * rng.real_vector(n);
  }
  const auto space = FiniteMeasureSpace::counting(n);
  VectorFamily t1(space, a.cast<std::complex<double>>());
  VectorFamily t2(space, b.cast<std::complex<double>>());
  auto [lo, hi] = frames::minmax_pair(t1, t2);

  const double order_violation =
      (lo.members.real() - hi.members.real()).maxCoeff();
  col.check("componentwise-order", std::max(order_violation, 0.0), 0.0);

  auto rep = frames::check_reproducing_pair(lo, hi);
  col.require("resolution-invertible", rep.invertible);
  col.check("canonical-dual-residual", rep.dual_residual, 1e-10);
  col.check("pairing-identity", keystone_residual(lo, hi, rng, 20), 1e-11);

  // real families: swapping the roles transposes the resolution operator
  const Eigen::MatrixXcd s_swapped = frames::resolution_operator(hi, lo);
  col.check("swap-transposes-resolution",
            (s_swapped - rep.resolution.transpose()).norm(), 1e-12);

  col.data["pair_report"] = serial::to_json(rep);
  return finish("minmax-probe", seed, std::move(col));
}

ScenarioResult run_lp_duality_grid(std::uint64_t seed) {
  Collector col;
  detail::Rng rng(seed);
  const Eigen::Index n = 6;
  const auto space = FiniteMeasureSpace(
      std::vector<std::string>{"a", "b", "c", "d", "e", "f"},
      rng.positive_vector(n));

  using spaces::SpaceDescriptor;
  std::vector<std::pair<std::string, spaces::DescPtr>> grid;
  for (double p : {1.0, 4.0 / 3.0, 2.0, 4.0,
                   std::numeric_limits<double>::infinity()})
    grid.emplace_back("Lp(" + (std::isinf(p) ? std::string("inf")
                                             : std::to_string(p)) +
                          ")",
                      SpaceDescriptor::lp(space, p));
  grid.emplace_back("WeightedL2",
                    SpaceDescriptor::weighted_l2(space, rng.positive_vector(n)));
  for (const auto& [label, desc] : grid) {
    auto dual = spaces::dual_descriptor(*desc);
    double worst = 0.0, worst_holder = 0.0;
    for (int t = 0; t < 40; ++t) {
      const Eigen::VectorXcd v = rng.complex_vector(n);
      const double lhs = spaces::dual_norm(*desc, v);
      const double rhs = spaces::norm(*dual, v);
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(rhs, 1e-300));
      const Eigen::VectorXcd w = rng.complex_vector(n);
      const double pairing = std::abs(measure::pair(space, v, w));
      const double bound = spaces::norm(*desc, v) * spaces::norm(*dual, w);
      worst_holder =
          std::max(worst_holder, (pairing - bound) / std::max(bound, 1e-300));
    }
    col.check(label + "-dual-norm-agreement", worst, 0.02);
    col.check(label + "-holder-bound", std::max(worst_holder, 0.0), 1e-9);
  }

  // The sum norm of V_p ∩ V_q and the decomposition norm of V_p + V_q are
  // dual up to norm equivalence with constant 2, not isometrically: the
  // dual ball of a sum of norms is the Minkowski sum of the dual balls
  // (gauge = inf-max convolution), and the dual ball of the decomposition
  // norm is the intersection of the dual balls (gauge = max of duals).
  auto l1 = SpaceDescriptor::lp(space, 1.0);
  auto linf =
      SpaceDescriptor::lp(space, std::numeric_limits<double>::infinity());
  auto projective = SpaceDescriptor::projective(l1, linf);
  auto inductive = SpaceDescriptor::inductive(l1, linf);
  double worst_proj = 0.0, worst_ind = 0.0, worst_oracle = 0.0;
  double ratio_lo = 1.0, ratio_hi = 1.0;
  for (int t = 0; t < 40; ++t) {
    const Eigen::VectorXcd v = rng.complex_vector(n);
    const double proj_dual = spaces::dual_norm(*projective, v);
    const double exact_gauge = linf_l1_minkowski_gauge(v, space.weights());
    worst_proj = std::max(worst_proj, std::abs(proj_dual - exact_gauge) /
                                          std::max(exact_gauge, 1e-300));

    const double ind_dual = spaces::dual_norm(*inductive, v);
    const double max_form = std::max(spaces::dual_norm(*l1, v),
                                     spaces::dual_norm(*linf, v));
    worst_ind = std::max(worst_ind, std::abs(ind_dual - max_form) /
                                        std::max(max_form, 1e-300));

    const double solved = spaces::norm(*inductive, v);
    const double oracle = l1_linf_threshold_oracle(v, space.weights());
    worst_oracle = std::max(
        worst_oracle, std::abs(solved - oracle) / std::max(oracle, 1e-300));

    // equivalence envelope against the structural dual descriptor
    const double structural = spaces::norm(*spaces::dual_descriptor(*projective), v);
    const double r = proj_dual / std::max(structural, 1e-300);
    ratio_lo = std::min(ratio_lo, r);
    ratio_hi = std::max(ratio_hi, r);
  }
  col.check("Projective(L1,Linf)-dual-norm-minkowski-gauge", worst_proj, 0.02);
  col.check("Inductive(L1,Linf)-dual-norm-max-form", worst_ind, 0.02);
  col.check("Inductive(L1,Linf)-threshold-oracle", worst_oracle, 0.005);
  col.check("Projective-dual-equivalence-constant-2",
            std::max(0.5 - ratio_lo, ratio_hi - 1.0), 0.01);
  col.data["projective_dual_ratio"] = Json::array({ratio_lo, ratio_hi});

  return finish("lp-duality-grid", seed, std::move(col));
}

ScenarioResult run_scale_triplet(std::uint64_t seed) {
  Collector col;
  detail::Rng rng(seed);
  auto scale = scales::HilbertScale::diag_n(8, 3);

  double mono_violation = 0.0;
  for (int t = 0; t < 20; ++t) {
    const Eigen::VectorXcd v = rng.complex_vector(scale.dim());
    double prev = spaces::norm(*scale.scale_space(-3), v);
    for (int k = -2; k <= 3; ++k) {
      const double cur = spaces::norm(*scale.scale_space(k), v);
      mono_violation = std::max(mono_violation, (prev - cur) / cur);
      prev = cur;
    }
  }
  col.check("norm-monotone-in-k", mono_violation, 1e-12);

  double worst_dual = 0.0;
  for (int k = -2; k <= 2; ++k) {
    auto hk = scale.scale_space(k);
    auto hmk = scale.scale_space(-k);
    for (int t = 0; t < 10; ++t) {
      const Eigen::VectorXcd v = rng.complex_vector(scale.dim());
      const double lhs = spaces::dual_norm(*hk, v);
      const double rhs = spaces::norm(*hmk, v);
      worst_dual =
          std::max(worst_dual, std::abs(lhs - rhs) / std::max(rhs, 1e-300));
    }
  }
  col.check("dual-of-Hk-is-Hminusk", worst_dual, 0.02);

  auto triplet = scale.triplet(2);
  col.require("triplet-center-self-dual",
              spaces::structurally_equal(
                  *triplet[1], *spaces::dual_descriptor(*triplet[1])));
  col.require("triplet-ends-dual-pair",
              spaces::structurally_equal(
                  *triplet[2], *spaces::dual_descriptor(*triplet[0])));

  const lattice::ScaleIndex top{2}, mid{0}, bot{-2};
  col.require("containment-chain",
              lattice::leq(top, mid) && lattice::leq(mid, bot) &&
                  !lattice::leq(bot, mid));
  col.require("involution-negates-index", lattice::involution(top) == bot);
  return finish("scale-triplet", seed, std::move(col));
}

ScenarioResult run_operator_fuzz(std::uint64_t seed) {
  Collector col;
  detail::Rng rng(seed);
  Eigen::VectorXd gen(4);
  gen << 1.0, 2.0, 3.0, 4.0;
  auto family = ops::IndexedSpaceFamily::scale_family(gen, 1);

  double worst_involution = 0.0;
  int jset_mirror_failures = 0;
  int product_contract_failures = 0;
  int symmetric_failures = 0;
  const int rounds = 50;
  std::vector<ops::PipOperator> pool;
  for (int t = 0; t < rounds; ++t) {
    const double threshold = rng.uniform(1.0, 8.0);
    auto A = ops::make_operator(family, rng.complex_matrix(4, 4), threshold);
    pool.push_back(A);

    auto Axx = ops::adjoint(ops::adjoint(A));
    worst_involution = std::max(
        worst_involution, (Axx.matrix - A.matrix).cwiseAbs().maxCoeff());
    if (Axx.jset != A.jset) ++jset_mirror_failures;

    // j(A^x) must be the involution mirror of j(A)
    auto Ax = ops::adjoint(A);
    std::set<ops::IndexPair> mirrored;
    for (const auto& [q, p] : A.jset)
      mirrored.insert({family->involution_of(p), family->involution_of(q)});
    if (Ax.jset != mirrored) ++jset_mirror_failures;

    auto S = ops::make_operator(
        family, A.matrix.adjoint() * A.matrix, threshold * threshold);
    if (!ops::is_symmetric(S, 1e-12)) ++symmetric_failures;
  }

  for (int t = 0; t + 1 < static_cast<int>(pool.size()); ++t) {
    const auto& A = pool[t];
    const auto& B = pool[t + 1];
    std::set<std::size_t> is = A.iset(), ds = B.dset(), mid;
    std::set_intersection(is.begin(), is.end(), ds.begin(), ds.end(),
                          std::inserter(mid, mid.begin()));
    bool threw = false;
    try {
      auto BA = ops::multiply(B, A);
      if ((BA.matrix - B.matrix * A.matrix).cwiseAbs().maxCoeff() > 0.0)
        ++product_contract_failures;
    } catch (const UndefinedProductError&) {
      threw = true;
    }
    if (threw != mid.empty()) ++product_contract_failures;
  }

  col.check("adjoint-involution-exact", worst_involution, 0.0);
  col.check("jset-adjoint-mirror", jset_mirror_failures, 0.0);
  col.check("star-square-symmetric", symmetric_failures, 0.0);
  col.check("product-defined-iff-middle-index", product_contract_failures,
            0.0);
  col.data["rounds"] = rounds;
  return finish("operator-algebra-fuzz", seed, std::move(col));
}

}  // namespace

std::vector<std::string> list_scenarios() { return kBuiltins; }

bool is_builtin(const std::string& name) {
  return std::find(kBuiltins.begin(), kBuiltins.end(), name) !=
         kBuiltins.end();
}

std::string explain(const std::string& name) {
  if (name == "onb-sanity")
    return "Analysis, synthesis and resolution against an orthonormal basis "
           "over an 8-point counting measure. The frame bounds are (1,1), the "
           "resolution operator is the identity, the canonical dual is the "
           "family itself, and pair(C_psi f, C_phi g) = <S f, g> holds on "
           "random draws.";
  if (name == "paper-weighted-1-over-n")
    return "The discrete weighted example with theta an orthonormal basis and "
           "m_n = 1/n: psi_n = theta_n/n, phi_n = n theta_n. The resolution "
           "operator telescopes to the identity at every truncation size. Psi "
           "has frame bounds (1/N^2, 1), so its lower bound decays to zero "
           "along a size sweep (upper semi-frame tendency), while Phi has "
           "bounds (1, N^2) with a diverging upper bound (lower semi-frame "
           "tendency).";
  if (name == "paper-weighted-n")
    return "The mirror image of paper-weighted-1-over-n with m_n = n: psi "
           "carries bounds (1, N^2) and trends lower-semi-frame, phi carries "
           "(1/N^2, 1) and trends upper-semi-frame; the resolution operator "
           "is again the identity.";
  if (name == "rkhs-identity-kernel")
    return "A discrete reproducing-kernel space with the identity Gram "
           "matrix and weight m(x) = x+2. The pair psi_x = m(x)^{-1} k_x, "
           "phi_x = m(x) k_x cancels to S = I; the synthesis map multiplies "
           "fields pointwise by m, both quotients are full-dimensional, the "
           "range certificates into the weighted spaces equal 1, and the "
           "construction coincides with the plain weighted pair.";
  if (name == "minmax-probe")
    return "Componentwise min/max of two real perturbed orthonormal "
           "families. Verifies the componentwise order, invertibility of the "
           "resolution operator, the canonical-dual residual, the pairing "
           "identity, and that swapping the roles transposes the resolution "
           "operator.";
  if (name == "lp-duality-grid")
    return "A grid of L^p descriptors (p = 1, 4/3, 2, 4, inf), a weighted "
           "l^2 space and projective/inductive combinations over a random "
           "6-point measure. Checks dual_norm against the structural dual "
           "descriptor for the leaf kinds, Hoelder bounds, the Minkowski-sum "
           "gauge form of the dual of a projective (sum) norm, the max form "
           "of the dual of an inductive (decomposition) norm, the factor-2 "
           "equivalence between those and the structural duals, and the "
           "exact threshold oracle for the L^1 + L^inf decomposition norm.";
  if (name == "scale-triplet")
    return "The Hilbert scale generated by diag(1..8): norm monotonicity in "
           "the scale index, duality H_k <-> H_{-k} within 2%, the "
           "(H_k, H_0, H_{-k}) triplet with a self-dual center, and the "
           "containment/involution structure of the index lattice.";
  if (name == "operator-algebra-fuzz")
    return "Random operators on a three-space Hilbert-scale family: the "
           "adjoint is an exact involution, j(A^x) mirrors j(A) under the "
           "index involution, A^x A is symmetric, and the partial product is "
           "defined exactly when i(A) meets d(B).";
  throw ConfigError("unknown scenario: " + name);
}

ScenarioResult run_builtin(const std::string& name, std::uint64_t seed) {
  if (name == "onb-sanity") return run_onb_sanity(seed);
  if (name == "paper-weighted-1-over-n")
    return run_weighted(name, true, seed);
  if (name == "paper-weighted-n") return run_weighted(name, false, seed);
  if (name == "rkhs-identity-kernel") return run_rkhs_identity(seed);
  if (name == "minmax-probe") return run_minmax_probe(seed);
  if (name == "lp-duality-grid") return run_lp_duality_grid(seed);
  if (name == "scale-triplet") return run_scale_triplet(seed);
  if (name == "operator-algebra-fuzz") return run_operator_fuzz(seed);
  throw ConfigError("unknown scenario: " + name);
}

RunPlan parse_config(const Json& config) {
  if (!config.is_object()) throw ConfigError("config root must be an object");
  for (const auto& [key, value] : config.items()) {
    (void)value;
    if (key != "seed" && key != "scenarios" && key != "custom")
      throw ConfigError("unknown config key: " + key);
  }
  RunPlan plan;
  if (config.contains("seed")) {
    if (!config.at("seed").is_number_unsigned() &&
        !config.at("seed").is_number_integer())
      throw ConfigError("\"seed\" must be a nonnegative integer");
    const auto s = config.at("seed").get<std::int64_t>();
    if (s < 0) throw ConfigError("\"seed\" must be a nonnegative integer");
    plan.seed = static_cast<std::uint64_t>(s);
    plan.seed_explicit = true;
  }
  if (config.contains("scenarios")) {
    const auto& js = config.at("scenarios");
    if (js.is_string()) {
      if (js.get<std::string>() != "all")
        throw ConfigError("\"scenarios\" must be \"all\" or a name list");
      plan.builtins = kBuiltins;
    } else if (js.is_array()) {
      for (const auto& item : js) {
        const std::string name = item.get<std::string>();
        if (!is_builtin(name)) throw ConfigError("unknown scenario: " + name);
        plan.builtins.push_back(name);
      }
    } else {
      throw ConfigError("\"scenarios\" must be \"all\" or a name list");
    }
  }
  if (config.contains("custom")) {
    if (!config.at("custom").is_array())
      throw ConfigError("\"custom\" must be an array of scenario objects");
    plan.customs = config.at("custom");
  }
  if (plan.builtins.empty() && plan.customs.empty())
    throw ConfigError("config selects no scenarios");
  return plan;
}

ScenarioResult run_custom(const Json& custom, std::uint64_t seed) {
  if (!custom.is_object())
    throw ConfigError("custom scenario must be an object");
  for (const auto& [key, value] : custom.items()) {
    (void)value;
    static const std::set<std::string> allowed = {
        "name", "construction", "dim", "weights", "space", "gl_tolerance"};
    if (!allowed.count(key))
      throw ConfigError("unknown custom-scenario key: " + key);
  }
  const std::string name =
      custom.contains("name") ? custom.at("name").get<std::string>() : "custom";
  if (!custom.contains("construction"))
    throw ConfigError("custom scenario needs a \"construction\"");
  const std::string construction = custom.at("construction").get<std::string>();
  const double gl_tol = custom.contains("gl_tolerance")
                            ? custom.at("gl_tolerance").get<double>()
                            : 1e-8;

  Collector col;
  detail::Rng rng(seed);
  if (construction == "weighted_pair") {
    if (!custom.contains("weights"))
      throw ConfigError("weighted_pair needs a \"weights\" array");
    const Eigen::VectorXcd m = serial::field_from_json(custom.at("weights"));
    const auto space = custom.contains("space")
                           ? serial::space_from_json(custom.at("space"))
                           : FiniteMeasureSpace::counting(m.size());
    if (space.size() != m.size())
      throw ConfigError("weight count does not match the measure space");
    VectorFamily theta(space,
                       Eigen::MatrixXcd::Identity(space.size(), space.size()));
    auto [psi, phi] = frames::weighted_pair(m, theta);
    auto rep = frames::check_reproducing_pair(psi, phi, gl_tol);
    col.require("resolution-invertible", rep.invertible);
    col.check("canonical-dual-residual", rep.dual_residual, 1e-10);
    col.check("pairing-identity", keystone_residual(psi, phi, rng, 20), 1e-11);
    col.data["pair_report"] = serial::to_json(rep);
  } else if (construction == "minmax_pair") {
    if (!custom.contains("dim"))
      throw ConfigError("minmax_pair needs a \"dim\"");
    const Eigen::Index n = custom.at("dim").get<Eigen::Index>();
    if (n < 1) throw ConfigError("\"dim\" must be positive");
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd b = Eigen::MatrixXd::Identity(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      a.col(j) += 0.2 * rng.real_vector(n);
      b.col(j) += 0.2 * rng.real_vector(n);
    }
    const auto space = FiniteMeasureSpace::counting(n);
    auto [lo, hi] =
        frames::minmax_pair(VectorFamily(space, a.cast<std::complex<double>>()),
                            VectorFamily(space, b.cast<std::complex<double>>()));
    auto rep = frames::check_reproducing_pair(lo, hi, gl_tol);
    col.require("resolution-invertible", rep.invertible);
    col.check("pairing-identity", keystone_residual(lo, hi, rng, 20), 1e-11);
    col.data["pair_report"] = serial::to_json(rep);
  } else {
    throw ConfigError("unknown construction: " + construction);
  }
  return finish(name, seed, std::move(col));
}

}  // namespace pipframe::scenarios
