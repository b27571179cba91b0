#ifndef PIPFRAME_LATTICE_HPP
#define PIPFRAME_LATTICE_HPP

#include <string>
#include <variant>

#include "pipframe/errors.hpp"

namespace pipframe::lattice {

// The point (1/p, 1/q) of the unit square indexing L^(p,q). Diagonal
// points are plain L^p spaces; p = infinity maps to coordinate 0.
struct LpIndex {
  double inv_p;
  double inv_q;

  LpIndex(double ip, double iq) : inv_p(ip), inv_q(iq) {
    if (!(ip >= 0.0 && ip <= 1.0 && iq >= 0.0 && iq <= 1.0))
      throw DomainError("LpIndex coordinates must lie in [0,1]");
  }

  static LpIndex from_p(double p);  // diagonal point for plain L^p

  bool operator==(const LpIndex& o) const {
    return inv_p == o.inv_p && inv_q == o.inv_q;
  }
};

// Rung of a Hilbert scale; higher k means smaller space H_k.
struct ScaleIndex {
  int k;
  bool operator==(const ScaleIndex& o) const { return k == o.k; }
};

// Containment order: a <= b iff the space indexed by a is contained in the
// space indexed by b, i.e. (1/p,1/q) left of and above (1/p',1/q').
bool leq(const LpIndex& a, const LpIndex& b);
bool leq(const ScaleIndex& a, const ScaleIndex& b);

// Duality: symmetry of the unit square with respect to L^2.
LpIndex involution(const LpIndex& a);
ScaleIndex involution(const ScaleIndex& a);

LpIndex meet(const LpIndex& a, const LpIndex& b);  // intersection index
LpIndex join(const LpIndex& a, const LpIndex& b);  // sum index
ScaleIndex meet(const ScaleIndex& a, const ScaleIndex& b);
ScaleIndex join(const ScaleIndex& a, const ScaleIndex& b);

// "L^(p,q)" with p = 1/inv_p (inf when inv_p = 0); diagonal points render
// as plain "L^p".
std::string to_string(const LpIndex& a);
std::string to_string(const ScaleIndex& a);

// One index type per space family; mixing the two is a usage error.
using Index = std::variant<LpIndex, ScaleIndex>;

bool leq(const Index& a, const Index& b);
Index involution(const Index& a);
std::string to_string(const Index& a);
bool same_index(const Index& a, const Index& b);

}  // namespace pipframe::lattice

#endif
