#include "pipframe/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace pipframe::lattice {

LpIndex LpIndex::from_p(double p) {
  if (std::isinf(p)) return LpIndex(0.0, 0.0);
  if (!(p >= 1.0)) throw DomainError("exponent p must satisfy p >= 1");
  return LpIndex(1.0 / p, 1.0 / p);
}

bool leq(const LpIndex& a, const LpIndex& b) {
  // left AND above-or-equal, componentwise
  return a.inv_p <= b.inv_p && a.inv_q >= b.inv_q;
}

bool leq(const ScaleIndex& a, const ScaleIndex& b) {
  // H_k subset H_k' iff k >= k'
  return a.k >= b.k;
}

LpIndex involution(const LpIndex& a) {
  return LpIndex(1.0 - a.inv_p, 1.0 - a.inv_q);
}

ScaleIndex involution(const ScaleIndex& a) { return ScaleIndex{-a.k}; }

LpIndex meet(const LpIndex& a, const LpIndex& b) {
  return LpIndex(std::min(a.inv_p, b.inv_p), std::max(a.inv_q, b.inv_q));
}

LpIndex join(const LpIndex& a, const LpIndex& b) {
  return LpIndex(std::max(a.inv_p, b.inv_p), std::min(a.inv_q, b.inv_q));
}

ScaleIndex meet(const ScaleIndex& a, const ScaleIndex& b) {
  return ScaleIndex{std::max(a.k, b.k)};
}

ScaleIndex join(const ScaleIndex& a, const ScaleIndex& b) {
  return ScaleIndex{std::min(a.k, b.k)};
}

namespace {

std::string render_exponent(double inv) {
  if (inv == 0.0) return "inf";
  const double p = 1.0 / inv;
  std::ostringstream os;
  if (std::abs(p - std::round(p)) < 1e-12) {
    os << static_cast<long long>(std::llround(p));
  } else {
    os.precision(6);
    os << p;
  }
  return os.str();
}

}  // namespace

std::string to_string(const LpIndex& a) {
  if (a.inv_p == a.inv_q) return "L^" + render_exponent(a.inv_p);
  return "L^(" + render_exponent(a.inv_p) + "," + render_exponent(a.inv_q) + ")";
}

std::string to_string(const ScaleIndex& a) {
  return "H_" + std::to_string(a.k);
}

bool leq(const Index& a, const Index& b) {
  if (a.index() != b.index())
    throw DomainError("cannot compare LpIndex with ScaleIndex");
  if (std::holds_alternative<LpIndex>(a))
    return leq(std::get<LpIndex>(a), std::get<LpIndex>(b));
  return leq(std::get<ScaleIndex>(a), std::get<ScaleIndex>(b));
}

Index involution(const Index& a) {
  if (std::holds_alternative<LpIndex>(a)) return involution(std::get<LpIndex>(a));
  return involution(std::get<ScaleIndex>(a));
}

std::string to_string(const Index& a) {
  if (std::holds_alternative<LpIndex>(a)) return to_string(std::get<LpIndex>(a));
  return to_string(std::get<ScaleIndex>(a));
}

bool same_index(const Index& a, const Index& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<LpIndex>(a))
    return std::get<LpIndex>(a) == std::get<LpIndex>(b);
  return std::get<ScaleIndex>(a) == std::get<ScaleIndex>(b);
}

}  // namespace pipframe::lattice
