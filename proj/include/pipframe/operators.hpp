#ifndef PIPFRAME_OPERATORS_HPP
#define PIPFRAME_OPERATORS_HPP

#include <Eigen/Dense>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "pipframe/lattice.hpp"
#include "pipframe/spaces.hpp"

namespace pipframe::ops {

using measure::FiniteMeasureSpace;

// A finite set of lattice indices closed under involution, each realized
// as a Banach-space norm over one shared coordinate system of dimension N.
// All spaces are the same set of vectors; only the norms differ.
class IndexedSpaceFamily {
public:
  IndexedSpaceFamily(FiniteMeasureSpace ambient,
                     std::vector<lattice::Index> indices,
                     std::vector<spaces::DescPtr> realizations);

  Eigen::Index dim() const { return ambient_.size(); }
  const FiniteMeasureSpace& ambient() const { return ambient_; }
  std::size_t size() const { return indices_.size(); }
  const lattice::Index& index(std::size_t i) const { return indices_[i]; }
  const spaces::DescPtr& realize(std::size_t i) const { return realizations_[i]; }

  std::size_t center() const { return center_; }
  std::size_t involution_of(std::size_t i) const { return involution_[i]; }
  bool leq(std::size_t a, std::size_t b) const {
    return lattice::leq(indices_[a], indices_[b]);
  }

  // Hilbert scale slice {H_k : |k| <= K} with weights a^k over a counting
  // measure; generator entries must be >= 1.
  static std::shared_ptr<const IndexedSpaceFamily> scale_family(
      const Eigen::VectorXd& generator, int K);

private:
  FiniteMeasureSpace ambient_;
  std::vector<lattice::Index> indices_;
  std::vector<spaces::DescPtr> realizations_;
  std::vector<std::size_t> involution_;
  std::size_t center_ = 0;
};

using FamilyPtr = std::shared_ptr<const IndexedSpaceFamily>;

// jset entries are (q, p): the matrix maps V_q continuously into V_p.
using IndexPair = std::pair<std::size_t, std::size_t>;

// One underlying matrix plus the set of continuity certificates it holds
// across the family. Embeddings are identities at desk scale, so every
// representative is the same matrix.
struct PipOperator {
  FamilyPtr family;
  Eigen::MatrixXcd matrix;
  std::set<IndexPair> jset;
  double norm_threshold = std::numeric_limits<double>::infinity();

  std::set<std::size_t> dset() const;
  std::set<std::size_t> iset() const;
};

struct OperatorNormOptions {
  int restarts = 24;
  int iterations = 60;
  std::uint64_t seed = 7;
};

// sup_{norm_from(v)=1} norm_to(A v). Exact via SVD when both descriptors
// are quadratic (Lp{2} / WeightedL2); otherwise estimated by projected
// ascent with random restarts.
double operator_norm(const Eigen::MatrixXcd& A,
                     const spaces::SpaceDescriptor& from,
                     const spaces::SpaceDescriptor& to,
                     const OperatorNormOptions& opt = {});

// Builds the operator and computes j(A): all pairs (q,p) whose operator
// norm stays below the threshold (every pair, when the threshold is
// infinite).
PipOperator make_operator(FamilyPtr family, Eigen::MatrixXcd matrix,
                          double norm_threshold =
                              std::numeric_limits<double>::infinity(),
                          const OperatorNormOptions& opt = {});

std::set<IndexPair> jset(const PipOperator& A);

// Adjoint with respect to the mu-weighted pairing of the ambient space;
// j(A^x) = {(p-bar, q-bar) : (q,p) in j(A)}.
PipOperator adjoint(const PipOperator& A);

// Defined iff i(A) and d(B) intersect; throws UndefinedProductError
// listing both sets otherwise.
PipOperator multiply(const PipOperator& B, const PipOperator& A);

bool is_symmetric(const PipOperator& A, double tol = 1e-12);

}  // namespace pipframe::ops

#endif
