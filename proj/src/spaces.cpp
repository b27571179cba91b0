#include "pipframe/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pipframe/detail/subgradient.hpp"

namespace pipframe::spaces {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::complex<double> phase(std::complex<double> z) {
  const double a = std::abs(z);
  return a > 0.0 ? z / a : std::complex<double>(0.0, 0.0);
}

InductiveOptions nested(const InductiveOptions& opt) {
  InductiveOptions n = opt;
  n.outer = std::max(8, opt.outer / 4);
  n.inner = std::max(80, opt.inner / 2);
  n.throw_on_stall = false;
  return n;
}

}  // namespace

DescPtr SpaceDescriptor::lp(FiniteMeasureSpace space, double p) {
  if (!(p >= 1.0) && !std::isinf(p))
    throw DomainError("Lp exponent must satisfy p >= 1");
  auto d = std::shared_ptr<SpaceDescriptor>(
      new SpaceDescriptor(Kind::Lp, std::move(space)));
  d->p_ = p;
  return d;
}

DescPtr SpaceDescriptor::weighted_l2(FiniteMeasureSpace space,
                                     Eigen::VectorXd m) {
  if (m.size() != space.size())
    throw DimensionError("weight field length does not match measure space");
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (!(m(i) > 0.0) || !std::isfinite(m(i)))
      throw DomainError("WeightedL2 weights must be strictly positive and finite");
  auto d = std::shared_ptr<SpaceDescriptor>(
      new SpaceDescriptor(Kind::WeightedL2, std::move(space)));
  d->m_ = std::move(m);
  return d;
}

DescPtr SpaceDescriptor::projective(DescPtr a, DescPtr b) {
  if (!a || !b) throw DomainError("projective needs two descriptors");
  if (!(a->space() == b->space()))
    throw DimensionError("projective components live on different measure spaces");
  auto d = std::shared_ptr<SpaceDescriptor>(
      new SpaceDescriptor(Kind::Projective, a->space()));
  d->a_ = std::move(a);
  d->b_ = std::move(b);
  return d;
}

DescPtr SpaceDescriptor::inductive(DescPtr a, DescPtr b) {
  if (!a || !b) throw DomainError("inductive needs two descriptors");
  if (!(a->space() == b->space()))
    throw DimensionError("inductive components live on different measure spaces");
  auto d = std::shared_ptr<SpaceDescriptor>(
      new SpaceDescriptor(Kind::Inductive, a->space()));
  d->a_ = std::move(a);
  d->b_ = std::move(b);
  return d;
}

std::string SpaceDescriptor::describe() const {
  switch (kind_) {
    case Kind::Lp:
      return std::isinf(p_) ? "L^inf" : "L^" + std::to_string(p_);
    case Kind::WeightedL2:
      return "l2_m";
    case Kind::Projective:
      return "(" + a_->describe() + " ^ " + b_->describe() + ")";
    case Kind::Inductive:
      return "(" + a_->describe() + " v " + b_->describe() + ")";
  }
  return "?";
}

bool structurally_equal(const SpaceDescriptor& a, const SpaceDescriptor& b,
                        double tol) {
  if (a.kind() != b.kind()) return false;
  if (!(a.space() == b.space())) return false;
  switch (a.kind()) {
    case SpaceDescriptor::Kind::Lp:
      if (std::isinf(a.p()) || std::isinf(b.p()))
        return std::isinf(a.p()) && std::isinf(b.p());
      return std::abs(a.p() - b.p()) <= tol * std::max(1.0, std::abs(a.p()));
    case SpaceDescriptor::Kind::WeightedL2:
      return (a.weight() - b.weight()).cwiseAbs().maxCoeff() <=
             tol * std::max(1.0, a.weight().cwiseAbs().maxCoeff());
    default:
      return structurally_equal(*a.a(), *b.a(), tol) &&
             structurally_equal(*a.b(), *b.b(), tol);
  }
}

double norm(const SpaceDescriptor& desc, const ScalarField& v,
            const InductiveOptions& opt) {
  if (v.size() != desc.space().size())
    throw DimensionError("field length does not match descriptor space");
  const Eigen::VectorXd& mu = desc.space().weights();
  switch (desc.kind()) {
    case SpaceDescriptor::Kind::Lp: {
      if (std::isinf(desc.p())) return v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
      double s = 0.0;
      for (Eigen::Index i = 0; i < v.size(); ++i)
        s += std::pow(std::abs(v(i)), desc.p()) * mu(i);
      return std::pow(s, 1.0 / desc.p());
    }
    case SpaceDescriptor::Kind::WeightedL2: {
      double s = 0.0;
      for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double t = desc.weight()(i) * std::abs(v(i));
        s += t * t * mu(i);
      }
      return std::sqrt(s);
    }
    case SpaceDescriptor::Kind::Projective:
      return norm(*desc.a(), v, opt) + norm(*desc.b(), v, opt);
    case SpaceDescriptor::Kind::Inductive:
      return inductive_norm(*desc.a(), *desc.b(), v, opt);
  }
  return 0.0;
}

ScalarField norm_subgradient(const SpaceDescriptor& desc, const ScalarField& v,
                             const InductiveOptions& opt) {
  if (v.size() != desc.space().size())
    throw DimensionError("field length does not match descriptor space");
  const Eigen::VectorXd& mu = desc.space().weights();
  ScalarField g = ScalarField::Zero(v.size());
  switch (desc.kind()) {
    case SpaceDescriptor::Kind::Lp: {
      const double p = desc.p();
      if (std::isinf(p)) {
        Eigen::Index imax = 0;
        double best = 0.0;
        for (Eigen::Index i = 0; i < v.size(); ++i)
          if (std::abs(v(i)) > best) {
            best = std::abs(v(i));
            imax = i;
          }
        if (best > 0.0) g(imax) = phase(v(imax));
        return g;
      }
      if (p == 1.0) {
        for (Eigen::Index i = 0; i < v.size(); ++i) g(i) = mu(i) * phase(v(i));
        return g;
      }
      const double f = norm(desc, v, opt);
      if (f == 0.0) return g;
      for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double a = std::abs(v(i));
        if (a > 0.0)
          g(i) = std::pow(f, 1.0 - p) * std::pow(a, p - 1.0) * mu(i) * phase(v(i));
      }
      return g;
    }
    case SpaceDescriptor::Kind::WeightedL2: {
      const double f = norm(desc, v, opt);
      if (f == 0.0) return g;
      for (Eigen::Index i = 0; i < v.size(); ++i)
        g(i) = desc.weight()(i) * desc.weight()(i) * mu(i) * v(i) / f;
      return g;
    }
    case SpaceDescriptor::Kind::Projective:
      return norm_subgradient(*desc.a(), v, opt) +
             norm_subgradient(*desc.b(), v, opt);
    case SpaceDescriptor::Kind::Inductive: {
      // At an optimal split v = g* + h*, the subdifferential of the
      // inf-convolution is contained in both component subdifferentials.
      auto dec = inductive_decompose(*desc.a(), *desc.b(), v, nested(opt));
      if (dec.g.norm() >= dec.h.norm() && dec.g.norm() > 0.0)
        return norm_subgradient(*desc.a(), dec.g, opt);
      if (dec.h.norm() > 0.0) return norm_subgradient(*desc.b(), dec.h, opt);
      return g;
    }
  }
  return g;
}

InductiveDecomposition inductive_decompose(const SpaceDescriptor& a,
                                           const SpaceDescriptor& b,
                                           const ScalarField& v,
                                           const InductiveOptions& opt) {
  if (!(a.space() == b.space()))
    throw DimensionError("inductive components live on different measure spaces");
  if (v.size() != a.space().size())
    throw DimensionError("field length does not match descriptor space");

  InductiveDecomposition out;
  if (v.norm() == 0.0) {
    out.g = ScalarField::Zero(v.size());
    out.h = ScalarField::Zero(v.size());
    out.value = 0.0;
    return out;
  }

  auto objective = [&](const ScalarField& g) {
    return norm(a, g, nested(opt)) + norm(b, v - g, nested(opt));
  };
  auto subgrad = [&](const ScalarField& g) -> ScalarField {
    return norm_subgradient(a, g, nested(opt)) -
           norm_subgradient(b, ScalarField(v - g), nested(opt));
  };

  detail::SubgradientOptions sopt;
  sopt.outer = opt.outer;
  sopt.inner = opt.inner;
  auto res = detail::minimize_subgradient(objective, subgrad,
                                          ScalarField(0.5 * v), sopt);

  // trivial decompositions bound the infimum from above
  ScalarField best_g = res.x;
  double best = res.value;
  const double all_a = norm(a, v, nested(opt));
  if (all_a < best) {
    best = all_a;
    best_g = v;
  }
  const double all_b = norm(b, v, nested(opt));
  if (all_b < best) {
    best = all_b;
    best_g = ScalarField::Zero(v.size());
  }

  if (!res.converged && opt.throw_on_stall)
    throw NumericalError("inductive norm minimizer exhausted its budget", best);

  out.g = best_g;
  out.h = v - best_g;
  out.value = best;
  return out;
}

double inductive_norm(const SpaceDescriptor& a, const SpaceDescriptor& b,
                      const ScalarField& v, const InductiveOptions& opt) {
  return inductive_decompose(a, b, v, opt).value;
}

DescPtr dual_descriptor(const SpaceDescriptor& desc) {
  switch (desc.kind()) {
    case SpaceDescriptor::Kind::Lp: {
      const double p = desc.p();
      double pbar;
      if (std::isinf(p))
        pbar = 1.0;
      else if (p == 1.0)
        pbar = kInf;
      else
        pbar = p / (p - 1.0);
      return SpaceDescriptor::lp(desc.space(), pbar);
    }
    case SpaceDescriptor::Kind::WeightedL2:
      return SpaceDescriptor::weighted_l2(desc.space(),
                                          desc.weight().cwiseInverse());
    case SpaceDescriptor::Kind::Projective:
      return SpaceDescriptor::inductive(dual_descriptor(*desc.a()),
                                        dual_descriptor(*desc.b()));
    case SpaceDescriptor::Kind::Inductive:
      return SpaceDescriptor::projective(dual_descriptor(*desc.a()),
                                         dual_descriptor(*desc.b()));
  }
  throw DomainError("unknown descriptor kind");
}

namespace {

// sup over the unit ball of the projective norm, via penalized concave
// maximization; the penalty weight only needs to exceed the optimum.
double dual_norm_projective(const SpaceDescriptor& desc, const ScalarField& v,
                            const InductiveOptions& opt) {
  const Eigen::VectorXd& mu = desc.space().weights();
  const double ub =
      std::min(dual_norm(*desc.a(), v, opt), dual_norm(*desc.b(), v, opt));
  if (ub == 0.0) return 0.0;
  const double M = 5.0 * ub + 1.0;

  ScalarField linear(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) linear(i) = v(i) * mu(i);

  double best = 0.0;
  auto record = [&](const ScalarField& xi) {
    const double n = norm(desc, xi, nested(opt));
    if (n > 0.0) {
      std::complex<double> pr = measure::pair(desc.space(), xi, v);
      best = std::max(best, std::abs(pr) / n);
    }
  };

  auto objective = [&](const ScalarField& xi) {
    double val = 0.0;
    for (Eigen::Index i = 0; i < xi.size(); ++i)
      val -= (xi(i) * std::conj(v(i)) * mu(i)).real();
    const double excess = norm(desc, xi, nested(opt)) - 1.0;
    if (excess > 0.0) val += M * excess;
    return val;
  };
  auto subgrad = [&](const ScalarField& xi) -> ScalarField {
    record(xi);
    ScalarField g = -linear;
    if (norm(desc, xi, nested(opt)) > 1.0)
      g += M * norm_subgradient(desc, xi, nested(opt));
    return g;
  };

  const double n0 = norm(desc, v, nested(opt));
  ScalarField xi0 = n0 > 0.0 ? ScalarField(v / n0) : v;
  record(xi0);

  detail::SubgradientOptions sopt;
  sopt.outer = opt.outer;
  sopt.inner = opt.inner;
  detail::minimize_subgradient(objective, subgrad, xi0, sopt);
  return best;
}

}  // namespace

double dual_norm(const SpaceDescriptor& desc, const ScalarField& v,
                 const InductiveOptions& opt) {
  if (v.size() != desc.space().size())
    throw DimensionError("field length does not match descriptor space");
  const Eigen::VectorXd& mu = desc.space().weights();
  switch (desc.kind()) {
    case SpaceDescriptor::Kind::Lp: {
      // Hoelder extremizer is explicit for the mu-weighted pairing
      const double p = desc.p();
      if (std::isinf(p)) {
        double s = 0.0;
        for (Eigen::Index i = 0; i < v.size(); ++i) s += std::abs(v(i)) * mu(i);
        return s;
      }
      if (p == 1.0) return v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
      const double pbar = p / (p - 1.0);
      double s = 0.0;
      for (Eigen::Index i = 0; i < v.size(); ++i)
        s += std::pow(std::abs(v(i)), pbar) * mu(i);
      return std::pow(s, 1.0 / pbar);
    }
    case SpaceDescriptor::Kind::WeightedL2: {
      double s = 0.0;
      for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double t = std::abs(v(i)) / desc.weight()(i);
        s += t * t * mu(i);
      }
      return std::sqrt(s);
    }
    case SpaceDescriptor::Kind::Inductive:
      // the unit ball is the convex hull of the two component balls, so
      // the supremum splits as a maximum
      return std::max(dual_norm(*desc.a(), v, opt),
                      dual_norm(*desc.b(), v, opt));
    case SpaceDescriptor::Kind::Projective:
      return dual_norm_projective(desc, v, opt);
  }
  return 0.0;
}

bool holder_bound_check(const SpaceDescriptor& desc, const ScalarField& v,
                        const ScalarField& w, double tol) {
  const double lhs = std::abs(measure::pair(desc.space(), v, w));
  const double rhs = norm(desc, v) * norm(*dual_descriptor(desc), w);
  return lhs <= rhs + tol * std::max(1.0, rhs);
}

}  // namespace pipframe::spaces
