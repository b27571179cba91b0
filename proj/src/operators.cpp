#include "pipframe/operators.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "pipframe/detail/rng.hpp"

namespace pipframe::ops {

IndexedSpaceFamily::IndexedSpaceFamily(FiniteMeasureSpace ambient,
                                       std::vector<lattice::Index> indices,
                                       std::vector<spaces::DescPtr> realizations)
    : ambient_(std::move(ambient)),
      indices_(std::move(indices)),
      realizations_(std::move(realizations)) {
  if (indices_.empty() || indices_.size() != realizations_.size())
    throw DimensionError("index/realization count mismatch");
  for (const auto& d : realizations_)
    if (!d || !(d->space() == ambient_))
      throw DimensionError("realization not defined over the ambient space");

  involution_.resize(indices_.size());
  bool has_center = false;
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    const lattice::Index dual = lattice::involution(indices_[i]);
    bool found = false;
    for (std::size_t j = 0; j < indices_.size(); ++j) {
      if (lattice::same_index(indices_[j], dual)) {
        involution_[i] = j;
        found = true;
        break;
      }
    }
    if (!found)
      throw DomainError("index set not closed under involution: missing dual of " +
                        lattice::to_string(indices_[i]));
    if (involution_[i] == i) {
      center_ = i;
      has_center = true;
    }
  }
  if (!has_center)
    throw DomainError("family lacks the self-dual center index");

  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (!spaces::structurally_equal(*realizations_[involution_[i]],
                                    *spaces::dual_descriptor(*realizations_[i]),
                                    1e-9))
      throw DomainError("realization of " +
                        lattice::to_string(indices_[involution_[i]]) +
                        " is not the dual of the realization of " +
                        lattice::to_string(indices_[i]));
  }
}

FamilyPtr IndexedSpaceFamily::scale_family(const Eigen::VectorXd& generator,
                                           int K) {
  for (Eigen::Index i = 0; i < generator.size(); ++i)
    if (!(generator(i) >= 1.0))
      throw DomainError("scale generator entries must be >= 1");
  auto space = FiniteMeasureSpace::counting(generator.size());
  std::vector<lattice::Index> indices;
  std::vector<spaces::DescPtr> realizations;
  for (int k = -K; k <= K; ++k) {
    indices.push_back(lattice::ScaleIndex{k});
    Eigen::VectorXd w(generator.size());
    for (Eigen::Index i = 0; i < generator.size(); ++i)
      w(i) = std::pow(generator(i), k);
    realizations.push_back(spaces::SpaceDescriptor::weighted_l2(space, w));
  }
  return std::make_shared<IndexedSpaceFamily>(space, std::move(indices),
                                              std::move(realizations));
}

std::set<std::size_t> PipOperator::dset() const {
  std::set<std::size_t> out;
  for (const auto& [q, p] : jset) out.insert(q);
  return out;
}

std::set<std::size_t> PipOperator::iset() const {
  std::set<std::size_t> out;
  for (const auto& [q, p] : jset) out.insert(p);
  return out;
}

namespace {

// weight w with norm(v) = || diag(w) v ||_2 when the descriptor is
// quadratic (Lp{2} or WeightedL2), folding in the measure
std::optional<Eigen::VectorXd> quadratic_weight(
    const spaces::SpaceDescriptor& d) {
  const Eigen::VectorXd sqrt_mu = d.space().weights().cwiseSqrt();
  if (d.kind() == spaces::SpaceDescriptor::Kind::Lp && d.p() == 2.0)
    return sqrt_mu;
  if (d.kind() == spaces::SpaceDescriptor::Kind::WeightedL2)
    return Eigen::VectorXd(d.weight().cwiseProduct(sqrt_mu));
  return std::nullopt;
}

}  // namespace

double operator_norm(const Eigen::MatrixXcd& A,
                     const spaces::SpaceDescriptor& from,
                     const spaces::SpaceDescriptor& to,
                     const OperatorNormOptions& opt) {
  if (A.rows() != to.space().size() || A.cols() != from.space().size())
    throw DimensionError("matrix shape does not match descriptor spaces");

  const auto wf = quadratic_weight(from);
  const auto wt = quadratic_weight(to);
  if (wf && wt) {
    Eigen::MatrixXcd scaled = wt->asDiagonal() * A *
                              wf->cwiseInverse().asDiagonal();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(scaled);
    return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  }

  // generic case: ascent on the ratio norm_to(Av) / norm_from(v)
  detail::Rng rng(opt.seed);
  const Eigen::Index n = A.cols();
  double best = 0.0;
  for (int r = 0; r < opt.restarts; ++r) {
    Eigen::VectorXcd v = rng.complex_vector(n);
    double step = 0.5;
    for (int it = 0; it < opt.iterations; ++it) {
      const double den = spaces::norm(from, v);
      if (den < 1e-14) break;
      const Eigen::VectorXcd Av = A * v;
      const double num = spaces::norm(to, Av);
      best = std::max(best, num / den);
      const Eigen::VectorXcd gnum =
          A.adjoint() * spaces::norm_subgradient(to, Av);
      const Eigen::VectorXcd gden = spaces::norm_subgradient(from, v);
      Eigen::VectorXcd grad = (gnum * den - num * gden) / (den * den);
      const double gn = grad.norm();
      if (gn < 1e-14) break;
      v += (step * v.norm() / gn) * grad;
      step *= 0.94;
    }
    const double den = spaces::norm(from, v);
    if (den > 1e-14) best = std::max(best, spaces::norm(to, A * v) / den);
  }
  return best;
}

PipOperator make_operator(FamilyPtr family, Eigen::MatrixXcd matrix,
                          double norm_threshold,
                          const OperatorNormOptions& opt) {
  if (!family) throw DomainError("operator needs a space family");
  if (matrix.rows() != family->dim() || matrix.cols() != family->dim())
    throw DimensionError("operator matrix must be N x N over the family");
  PipOperator A;
  A.family = std::move(family);
  A.matrix = std::move(matrix);
  A.norm_threshold = norm_threshold;

  const std::size_t n = A.family->size();
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t p = 0; p < n; ++p) {
      const double nn = operator_norm(A.matrix, *A.family->realize(q),
                                      *A.family->realize(p), opt);
      if (std::isfinite(nn) && nn <= norm_threshold) A.jset.insert({q, p});
    }

  // d(A) initial, i(A) final: close under shrinking q and growing p
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [q, p] : std::set<IndexPair>(A.jset)) {
      for (std::size_t q2 = 0; q2 < n; ++q2)
        for (std::size_t p2 = 0; p2 < n; ++p2)
          if (A.family->leq(q2, q) && A.family->leq(p, p2))
            changed |= A.jset.insert({q2, p2}).second;
    }
  }
  return A;
}

std::set<IndexPair> jset(const PipOperator& A) { return A.jset; }

PipOperator adjoint(const PipOperator& A) {
  PipOperator B;
  B.family = A.family;
  B.norm_threshold = A.norm_threshold;
  const Eigen::VectorXd& mu = A.family->ambient().weights();
  B.matrix = mu.cwiseInverse().asDiagonal() * A.matrix.adjoint() *
             mu.asDiagonal();
  for (const auto& [q, p] : A.jset)
    B.jset.insert({A.family->involution_of(p), A.family->involution_of(q)});
  return B;
}

PipOperator multiply(const PipOperator& B, const PipOperator& A) {
  if (A.family != B.family)
    throw DomainError("partial multiplication needs a shared family");
  const auto ia = A.iset();
  const auto db = B.dset();
  std::vector<std::size_t> middle;
  for (std::size_t r : ia)
    if (db.count(r)) middle.push_back(r);
  if (middle.empty()) {
    std::ostringstream os;
    os << "product undefined: i(A) = {";
    for (std::size_t r : ia) os << " " << lattice::to_string(A.family->index(r));
    os << " }, d(B) = {";
    for (std::size_t r : db) os << " " << lattice::to_string(B.family->index(r));
    os << " } do not intersect";
    throw UndefinedProductError(os.str());
  }
  return make_operator(A.family, Eigen::MatrixXcd(B.matrix * A.matrix),
                       std::min(A.norm_threshold, B.norm_threshold));
}

bool is_symmetric(const PipOperator& A, double tol) {
  const PipOperator Ax = adjoint(A);
  const double scale = std::max(1.0, A.matrix.cwiseAbs().maxCoeff());
  if ((Ax.matrix - A.matrix).cwiseAbs().maxCoeff() > tol * scale) return false;
  for (const auto& [q, p] : A.jset)
    if (!A.jset.count({A.family->involution_of(p), A.family->involution_of(q)}))
      return false;
  return true;
}

}  // namespace pipframe::ops
