#ifndef PIPFRAME_SPACES_HPP
#define PIPFRAME_SPACES_HPP

#include <Eigen/Dense>
#include <memory>

#include "pipframe/measure.hpp"

namespace pipframe::spaces {

using measure::FiniteMeasureSpace;
using measure::ScalarField;

class SpaceDescriptor;
using DescPtr = std::shared_ptr<const SpaceDescriptor>;

// A computable Banach-space norm over a finite measure space: L^p,
// weighted l^2, or a projective/inductive combination of two descriptors
// on the same space.
class SpaceDescriptor {
public:
  enum class Kind { Lp, WeightedL2, Projective, Inductive };

  static DescPtr lp(FiniteMeasureSpace space, double p);  // p in [1, inf]
  static DescPtr weighted_l2(FiniteMeasureSpace space, Eigen::VectorXd m);
  static DescPtr projective(DescPtr a, DescPtr b);
  static DescPtr inductive(DescPtr a, DescPtr b);

  Kind kind() const { return kind_; }
  const FiniteMeasureSpace& space() const { return space_; }
  double p() const { return p_; }                     // Lp only
  const Eigen::VectorXd& weight() const { return m_; }  // WeightedL2 only
  const DescPtr& a() const { return a_; }             // composite only
  const DescPtr& b() const { return b_; }

  std::string describe() const;

private:
  SpaceDescriptor(Kind kind, FiniteMeasureSpace space)
      : kind_(kind), space_(std::move(space)) {}

  Kind kind_;
  FiniteMeasureSpace space_;
  double p_ = 2.0;
  Eigen::VectorXd m_;
  DescPtr a_, b_;
};

bool structurally_equal(const SpaceDescriptor& a, const SpaceDescriptor& b,
                        double tol = 1e-12);

struct InductiveOptions {
  int outer = 40;
  int inner = 250;
  bool throw_on_stall = true;
};

double norm(const SpaceDescriptor& desc, const ScalarField& v,
            const InductiveOptions& opt = {});

// Infimum of norm_a(g) + norm_b(v - g) over decompositions v = g + h,
// by subgradient descent warm-started at g = v/2.
double inductive_norm(const SpaceDescriptor& a, const SpaceDescriptor& b,
                      const ScalarField& v, const InductiveOptions& opt = {});

struct InductiveDecomposition {
  ScalarField g, h;
  double value = 0.0;
};
InductiveDecomposition inductive_decompose(const SpaceDescriptor& a,
                                           const SpaceDescriptor& b,
                                           const ScalarField& v,
                                           const InductiveOptions& opt = {});

DescPtr dual_descriptor(const SpaceDescriptor& desc);

// sup over the unit ball of |pair(xi, v)|; closed form for the leaf kinds,
// penalized concave maximization for composites.
double dual_norm(const SpaceDescriptor& desc, const ScalarField& v,
                 const InductiveOptions& opt = {});

// |pair(v, w)| <= norm(desc, v) * norm(dual, w) + tol
bool holder_bound_check(const SpaceDescriptor& desc, const ScalarField& v,
                        const ScalarField& w, double tol = 1e-9);

// Element of the subdifferential of norm(desc, .) at v, real-inner-product
// convention (directional derivative along delta is Re(g^H delta)).
ScalarField norm_subgradient(const SpaceDescriptor& desc, const ScalarField& v,
                             const InductiveOptions& opt = {});

}  // namespace pipframe::spaces

#endif
