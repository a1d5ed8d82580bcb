// LP-backed polyhedron predicates: redundancy removal, inclusion and
// equality tests, point membership.
#pragma once

#include <map>
#include <stdexcept>

#include "lp.hpp"
#include "polyhedron.hpp"

namespace icrr {

struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnboundedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// True iff dropping `ineq` from `poly` does not change the set.
inline bool is_redundant(const Polyhedron& poly, const LinearInequality& ineq) {
  LinearInequality q = ineq;
  q.canonicalize();
  if (q.trivially_true()) return true;
  Polyhedron rest(poly.variables());
  for (const auto& r : poly.inequalities())
    if (!(r == q)) rest.add(r);
  auto lp = lp_max(rest, q.coeffs);
  switch (lp.status) {
    case LpStatus::Infeasible:
      return true;  // empty set implies everything
    case LpStatus::Unbounded:
      return false;
    case LpStatus::Optimal:
      return lp.value <= q.rhs;
  }
  return false;
}

// Irredundant system defining the same set. Inequalities are probed in
// canonical order, so the output is stable under input permutation.
inline Polyhedron remove_redundant(const Polyhedron& poly) {
  Polyhedron out(poly.variables());
  if (!lp_feasible(poly)) {
    out.add(LinearInequality{{}, Rational(-1)});
    return out;
  }
  std::vector<LinearInequality> kept(poly.inequalities().begin(),
                                     poly.inequalities().end());
  for (std::size_t i = 0; i < kept.size();) {
    Polyhedron rest(poly.variables());
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) rest.add(kept[j]);
    auto lp = lp_max(rest, kept[i].coeffs);
    bool redundant = (lp.status == LpStatus::Optimal && lp.value <= kept[i].rhs);
    if (redundant)
      kept.erase(kept.begin() + i);
    else
      ++i;
  }
  for (auto& q : kept) out.add(std::move(q));
  return out;
}

// a subset of b: every inequality of b is valid over a.
inline bool poly_subset(const Polyhedron& a, const Polyhedron& b) {
  if (a.variables() != b.variables())
    throw std::runtime_error("poly_subset: variable lists differ");
  for (const auto& q : b.inequalities()) {
    auto lp = lp_max(a, q.coeffs);
    if (lp.status == LpStatus::Infeasible) return true;
    if (lp.status == LpStatus::Unbounded) return false;
    if (lp.value > q.rhs) return false;
  }
  return true;
}

inline bool poly_equal(const Polyhedron& a, const Polyhedron& b) {
  return poly_subset(a, b) && poly_subset(b, a);
}

inline bool contains_point(const Polyhedron& poly,
                           const std::map<VarId, Rational>& point) {
  return poly.contains(point);
}

}  // namespace icrr
