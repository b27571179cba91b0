#include "pipframe/frames.hpp"

#include <cmath>

#include "pipframe/detail/rng.hpp"

namespace pipframe::frames {

VectorFamily::VectorFamily(FiniteMeasureSpace sp, Eigen::MatrixXcd m,
                           std::optional<double> bound)
    : space(std::move(sp)), members(std::move(m)), uniform_bound(bound) {
  if (members.cols() != space.size())
    throw DimensionError("one member per measure point required");
  if (uniform_bound) {
    double worst = 0.0;
    for (Eigen::Index x = 0; x < members.cols(); ++x)
      worst = std::max(worst, members.col(x).norm());
    if (worst > *uniform_bound + 1e-12)
      throw DomainError("claimed uniform bound is violated");
  }
}

std::string to_string(FamilyClass c) {
  switch (c) {
    case FamilyClass::Frame: return "frame";
    case FamilyClass::UpperSemiFrameTendency: return "upper-semi-frame-tendency";
    case FamilyClass::LowerSemiFrameTendency: return "lower-semi-frame-tendency";
    case FamilyClass::Neither: return "neither";
  }
  return "?";
}

ScalarField analysis(const VectorFamily& psi, const Eigen::VectorXcd& f) {
  if (f.size() != psi.dim())
    throw DimensionError("vector dimension does not match the family");
  return psi.members.adjoint() * f;
}

Eigen::VectorXcd synthesis(const VectorFamily& psi, const ScalarField& xi) {
  if (xi.size() != psi.points())
    throw DimensionError("field length does not match the family's space");
  const Eigen::VectorXcd scaled =
      xi.cwiseProduct(psi.space.weights().cast<std::complex<double>>());
  return psi.members * scaled;
}

Eigen::MatrixXcd frame_operator(const VectorFamily& psi) {
  return psi.members * psi.space.weights().asDiagonal() *
         psi.members.adjoint();
}

FrameBounds frame_bounds(const VectorFamily& psi) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(frame_operator(psi));
  FrameBounds fb;
  const auto& ev = es.eigenvalues();
  fb.lower = std::max(0.0, ev(0));
  fb.upper = std::max(0.0, ev(ev.size() - 1));
  fb.lower_witness = es.eigenvectors().col(0);
  fb.upper_witness = es.eigenvectors().col(ev.size() - 1);
  return fb;
}

Eigen::MatrixXcd resolution_operator(const VectorFamily& psi,
                                     const VectorFamily& phi) {
  if (!(psi.space == phi.space))
    throw DimensionError("resolution operator needs a shared measure space");
  if (psi.dim() != phi.dim())
    throw DimensionError("resolution operator needs a shared Hilbert dimension");
  return phi.members * phi.space.weights().asDiagonal() *
         psi.members.adjoint();
}

PairReport check_reproducing_pair(const VectorFamily& psi,
                                  const VectorFamily& phi,
                                  double gl_tolerance) {
  PairReport rep;
  rep.resolution = resolution_operator(psi, phi);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(rep.resolution,
                                         Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  rep.operator_norm = sv.size() ? sv(0) : 0.0;
  rep.sigma_min = sv.size() ? sv(sv.size() - 1) : 0.0;
  rep.condition_number =
      rep.sigma_min > 0.0 ? rep.operator_norm / rep.sigma_min
                          : std::numeric_limits<double>::infinity();
  rep.gl_tolerance_used = gl_tolerance * rep.operator_norm;
  rep.invertible = rep.sigma_min > rep.gl_tolerance_used;

  if (rep.invertible) {
    Eigen::MatrixXcd Sinv = rep.resolution.partialPivLu().solve(
        Eigen::MatrixXcd::Identity(rep.resolution.rows(), rep.resolution.cols()));
    VectorFamily dual(phi.space, Sinv * phi.members);
    Eigen::MatrixXcd S2 = resolution_operator(psi, dual);
    rep.dual_residual =
        (S2 - Eigen::MatrixXcd::Identity(S2.rows(), S2.cols())).norm();
  }

  // single-truncation classification; sweeps refine this to tendencies
  auto classify = [&](const VectorFamily& fam) {
    FrameBounds fb = frame_bounds(fam);
    return (fb.lower > 1e-12 * std::max(fb.upper, 1.0)) ? FamilyClass::Frame
                                                        : FamilyClass::Neither;
  };
  rep.psi_class = classify(psi);
  rep.phi_class = classify(phi);
  return rep;
}

VectorFamily canonical_dual(const VectorFamily& psi, const VectorFamily& phi,
                            double gl_tolerance) {
  PairReport rep = check_reproducing_pair(psi, phi, gl_tolerance);
  if (!rep.invertible)
    throw GlViolationError("resolution operator is not in GL", rep.sigma_min);
  Eigen::MatrixXcd dual_members = rep.resolution.partialPivLu().solve(phi.members);
  return VectorFamily(phi.space, std::move(dual_members));
}

std::pair<VectorFamily, VectorFamily> weighted_pair(const Eigen::VectorXcd& m,
                                                    const VectorFamily& theta) {
  if (m.size() != theta.points())
    throw DimensionError("one weight per family member required");
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (std::abs(m(i)) == 0.0) throw DomainError("weights must be nonzero");
  FrameBounds fb = frame_bounds(theta);
  if (!(fb.lower > 0.0))
    throw PreconditionError("theta must be a frame (positive lower bound)");

  Eigen::MatrixXcd psi_m = theta.members;
  Eigen::MatrixXcd phi_m = theta.members;
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    psi_m.col(i) *= m(i);
    phi_m.col(i) /= std::conj(m(i));
  }
  return {VectorFamily(theta.space, std::move(psi_m)),
          VectorFamily(theta.space, std::move(phi_m))};
}

std::pair<VectorFamily, VectorFamily> minmax_pair(const VectorFamily& theta1,
                                                  const VectorFamily& theta2) {
  if (!(theta1.space == theta2.space) || theta1.dim() != theta2.dim())
    throw DimensionError("min/max needs families of identical shape");
  auto require_real = [](const VectorFamily& f) {
    if (f.members.imag().cwiseAbs().maxCoeff() > 0.0)
      throw DomainError("min/max of complex-valued families is undefined");
  };
  if (theta1.members.size() > 0) {
    require_real(theta1);
    require_real(theta2);
  }
  Eigen::MatrixXd a = theta1.members.real();
  Eigen::MatrixXd b = theta2.members.real();
  Eigen::MatrixXcd mn = a.cwiseMin(b).cast<std::complex<double>>();
  Eigen::MatrixXcd mx = a.cwiseMax(b).cast<std::complex<double>>();
  return {VectorFamily(theta1.space, std::move(mn)),
          VectorFamily(theta1.space, std::move(mx))};
}

namespace {

FamilyClass classify_trajectory(const std::vector<double>& lower,
                                const std::vector<double>& upper,
                                double factor) {
  const double m0 = lower.front(), mN = lower.back();
  const double M0 = upper.front(), MN = upper.back();
  const bool upper_bounded = MN <= factor * std::max(M0, 1e-300);
  const bool lower_stays = mN >= m0 / factor;
  bool lower_monotone_down = true;
  for (std::size_t i = 1; i < lower.size(); ++i)
    if (lower[i] > lower[i - 1] * (1.0 + 1e-9)) lower_monotone_down = false;

  if (upper_bounded && lower_stays) return FamilyClass::Frame;
  if (upper_bounded && lower_monotone_down && mN < m0 / factor)
    return FamilyClass::UpperSemiFrameTendency;
  if (!upper_bounded && lower_stays) return FamilyClass::LowerSemiFrameTendency;
  return FamilyClass::Neither;
}

}  // namespace

SweepEvidence semiframe_sweep(const PairGenerator& generator,
                              const std::vector<int>& ns,
                              double bounded_factor) {
  if (ns.empty()) throw PreconditionError("sweep needs at least one size");
  SweepEvidence ev;
  std::vector<double> psi_lo, psi_hi, phi_lo, phi_hi;
  // fixed probes from the smallest truncation, zero-padded upward
  std::vector<Eigen::VectorXcd> probes;
  std::vector<double> psi_first, phi_first;

  for (int n : ns) {
    auto [psi, phi] = generator(n);
    SweepRow row;
    row.n = n;
    row.psi_bounds = frame_bounds(psi);
    row.phi_bounds = frame_bounds(phi);
    psi_lo.push_back(row.psi_bounds.lower);
    psi_hi.push_back(row.psi_bounds.upper);
    phi_lo.push_back(row.phi_bounds.lower);
    phi_hi.push_back(row.phi_bounds.upper);
    ev.rows.push_back(row);

    if (probes.empty()) {
      detail::Rng rng(13);
      for (int k = 0; k < 16; ++k) {
        Eigen::VectorXcd f = rng.complex_vector(psi.dim());
        probes.push_back(f / f.norm());
      }
    }
  }

  // domain growth: which probes keep a bounded analysis L2 norm at the
  // largest truncation relative to the smallest
  {
    auto [psi_a, phi_a] = generator(ns.front());
    auto [psi_b, phi_b] = generator(ns.back());
    auto fraction = [&](const VectorFamily& small, const VectorFamily& big) {
      int kept = 0;
      for (const auto& f0 : probes) {
        Eigen::VectorXcd f = Eigen::VectorXcd::Zero(big.dim());
        f.head(f0.size()) = f0;
        Eigen::VectorXcd fs = Eigen::VectorXcd::Zero(small.dim());
        fs = f0.head(small.dim());
        const double before = std::sqrt(
            analysis(small, fs).cwiseAbs2().dot(small.space.weights()));
        const double after =
            std::sqrt(analysis(big, f).cwiseAbs2().dot(big.space.weights()));
        if (after <= bounded_factor * std::max(before, 1e-12)) ++kept;
      }
      return static_cast<double>(kept) / static_cast<double>(probes.size());
    };
    ev.psi_domain_fraction = fraction(psi_a, psi_b);
    ev.phi_domain_fraction = fraction(phi_a, phi_b);
  }

  ev.psi_class = classify_trajectory(psi_lo, psi_hi, bounded_factor);
  ev.phi_class = classify_trajectory(phi_lo, phi_hi, bounded_factor);
  return ev;
}

RangeCertificate range_containment(const VectorFamily& psi,
                                   const spaces::SpaceDescriptor& desc,
                                   int trials, std::uint64_t seed) {
  if (desc.space().size() != psi.points())
    throw DimensionError("descriptor space does not match the family's space");
  detail::Rng rng(seed);
  RangeCertificate cert;

  auto value = [&](const Eigen::VectorXcd& f) {
    return spaces::norm(desc, analysis(psi, f));
  };

  // random probes plus frame-operator eigenvectors as starting points,
  // each polished by ascent on the sphere
  std::vector<Eigen::VectorXcd> starts;
  for (int t = 0; t < trials; ++t) {
    Eigen::VectorXcd f = rng.complex_vector(psi.dim());
    starts.push_back(f / f.norm());
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(frame_operator(psi));
  for (Eigen::Index i = 0; i < es.eigenvectors().cols(); ++i)
    starts.push_back(es.eigenvectors().col(i));

  for (auto f : starts) {
    double step = 0.4;
    for (int it = 0; it < 40; ++it) {
      const double val = value(f);
      if (val > cert.constant) {
        cert.constant = val;
        cert.witness = f;
      }
      Eigen::VectorXcd g =
          psi.members * spaces::norm_subgradient(desc, analysis(psi, f));
      const double gn = g.norm();
      if (gn < 1e-14) break;
      f += (step / gn) * g;
      f /= f.norm();
      step *= 0.9;
    }
    const double val = value(f);
    if (val > cert.constant) {
      cert.constant = val;
      cert.witness = f;
    }
  }
  return cert;
}

}  // namespace pipframe::frames
