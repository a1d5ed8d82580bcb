// Convex hull of the projection of a union of polyhedra, computed by a
// support-function oracle instead of eliminating variables member by
// member.
//
// The oracle answers "maximize d . x over the union" with a pair
// (value, point) where the point is an extreme point of the projection
// of the maximizing member (obtained by lexicographic tightening). The
// hull is grown outer-approximation style: keep a set V of achieved
// points, take H = conv(V), and for every facet of H ask the oracle
// whether the union exceeds it; any excess yields a new extreme point.
// Since every added point is a vertex of some member's projection and
// lies strictly outside conv(V), the loop terminates with H equal to
// the exact hull. Only linear programs over the lifted systems are
// solved, so the cost is independent of how wide the eliminations
// would have been.
#pragma once

#include <map>
#include <vector>

#include "dd.hpp"

namespace icrr {

struct UnionHullResult {
  Polyhedron hull;                              // over the kept variables
  std::vector<std::vector<Rational>> points;    // support points, superset of hull vertices
  std::vector<std::size_t> achiever;            // points[i] comes from lifted[achiever[i]]
};

// `keep` must be a subset of every member's variables; every member must
// be bounded in those coordinates (UnboundedError otherwise).
inline UnionHullResult hull_of_lifted_union(const std::vector<VarId>& keep_in,
                                            const std::vector<Polyhedron>& lifted) {
  if (lifted.empty()) throw std::runtime_error("hull_of_lifted_union: empty union");
  std::vector<VarId> keep = keep_in;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

  struct Support {
    bool feasible = false;
    Rational value = 0;
    std::size_t member = 0;
    std::vector<Rational> point;  // over keep
  };

  // One oracle call: maximize over every member, then tighten the best
  // member lexicographically so the answer is an extreme point of its
  // projection.
  auto oracle = [&](const std::map<VarId, Rational>& dir) {
    Support s;
    for (std::size_t mi = 0; mi < lifted.size(); ++mi) {
      auto lp = lp_max(lifted[mi], dir);
      if (lp.status == LpStatus::Infeasible) continue;
      if (lp.status == LpStatus::Unbounded)
        throw UnboundedError("hull_of_lifted_union: union unbounded");
      if (!s.feasible || lp.value > s.value) {
        s.feasible = true;
        s.value = lp.value;
        s.member = mi;
      }
    }
    if (!s.feasible) return s;
    Polyhedron face = lifted[s.member];
    face.add_equality(dir, s.value);
    for (const auto& v : keep) {
      auto lp = lp_max(face, {{v, Rational(1)}});
      if (lp.status != LpStatus::Optimal)
        throw UnboundedError("hull_of_lifted_union: face unbounded");
      face.add_equality({{v, Rational(1)}}, lp.value);
      s.point.push_back(lp.value);
    }
    return s;
  };

  std::map<std::map<VarId, Rational>, Support> memo;
  auto cached_oracle = [&](const std::map<VarId, Rational>& dir) -> const Support& {
    auto it = memo.find(dir);
    if (it == memo.end()) it = memo.emplace(dir, oracle(dir)).first;
    return it->second;
  };

  UnionHullResult res;

  std::map<VarId, Rational> ones;
  for (const auto& v : keep) ones[v] = 1;
  const Support& seed = cached_oracle(ones);
  if (!seed.feasible) {
    // Every member is empty; so is the hull.
    res.hull = Polyhedron(keep);
    res.hull.add(LinearInequality{{}, Rational(-1)});
    return res;
  }
  res.points.push_back(seed.point);
  res.achiever.push_back(seed.member);

  for (;;) {
    std::vector<std::vector<Rational>> pts = res.points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    res.hull = hull_from_points(keep, pts);
    bool grown = false;
    for (const auto& q : res.hull.inequalities()) {
      const Support& s = cached_oracle(q.coeffs);
      if (s.value <= q.rhs) continue;
      res.points.push_back(s.point);
      res.achiever.push_back(s.member);
      grown = true;
    }
    if (!grown) return res;
  }
}

}  // namespace icrr
