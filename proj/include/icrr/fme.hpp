// Fourier-Motzkin elimination with exact coefficients.
//
// One variable is eliminated per step, chosen by the classic
// min(#upper * #lower) heuristic (ties broken by variable order).
// After each step the system is cheaply reduced (canonical dedup plus
// same-lhs rhs-minimization); LP-based redundancy removal kicks in once
// the row count passes a small threshold, and is always applied to the
// final projection. A hard cap on the intermediate row count turns
// blow-ups into a clean LimitError.
#pragma once

#include <map>
#include <set>
#include <vector>

#include "polyops.hpp"

namespace icrr {

struct FmeOptions {
  std::size_t max_rows = 20000;       // LimitError above this
  std::size_t lp_reduce_above = 24;   // run remove_redundant when exceeded
};

namespace detail {

// Same canonical lhs, keep only the smallest rhs (sound because the
// rows are otherwise identical halfspace normals).
inline Polyhedron cheap_reduce(const Polyhedron& p) {
  std::map<std::map<VarId, Rational>, Rational> best;
  for (const auto& q : p.inequalities()) {
    auto it = best.find(q.coeffs);
    if (it == best.end())
      best.emplace(q.coeffs, q.rhs);
    else if (q.rhs < it->second)
      it->second = q.rhs;
  }
  Polyhedron out(p.variables());
  for (auto& [coeffs, rhs] : best) out.add(LinearInequality{coeffs, rhs});
  return out;
}

}  // namespace detail

inline Polyhedron fme_eliminate(const Polyhedron& poly, const std::set<VarId>& drop,
                                const FmeOptions& opts = {}) {
  for (const auto& v : drop)
    if (poly.var_index(v) < 0)
      throw std::runtime_error("fme_eliminate: unknown variable " + var_name(v));

  Polyhedron cur = poly;
  std::set<VarId> remaining = drop;
  while (!remaining.empty()) {
    // Pick the variable minimizing the product of upper and lower
    // occurrence counts; ties go to the smaller VarId (set order).
    VarId pick;
    std::size_t best_cost = 0;
    bool have = false;
    for (const auto& v : remaining) {
      std::size_t up = 0, lo = 0;
      for (const auto& q : cur.inequalities()) {
        auto it = q.coeffs.find(v);
        if (it == q.coeffs.end()) continue;
        (it->second > 0 ? up : lo)++;
      }
      std::size_t cost = up * lo;
      if (!have || cost < best_cost) {
        pick = v;
        best_cost = cost;
        have = true;
      }
    }

    std::vector<const LinearInequality*> uppers, lowers, others;
    for (const auto& q : cur.inequalities()) {
      auto it = q.coeffs.find(pick);
      if (it == q.coeffs.end())
        others.push_back(&q);
      else if (it->second > 0)
        uppers.push_back(&q);
      else
        lowers.push_back(&q);
    }

    std::vector<VarId> next_vars;
    for (const auto& v : cur.variables())
      if (v != pick) next_vars.push_back(v);
    Polyhedron next(next_vars);
    for (const auto* q : others) next.add(*q);
    for (const auto* u : uppers) {
      const Rational cu = u->coeffs.at(pick);
      for (const auto* l : lowers) {
        const Rational cl = l->coeffs.at(pick);  // cl < 0
        LinearInequality combined;
        combined.rhs = (-cl) * u->rhs + cu * l->rhs;
        for (const auto& [v, c] : u->coeffs)
          if (v != pick) combined.coeffs[v] += (-cl) * c;
        for (const auto& [v, c] : l->coeffs)
          if (v != pick) combined.coeffs[v] += cu * c;
        next.add(std::move(combined));
        if (next.inequalities().size() > opts.max_rows)
          throw LimitError("fme_eliminate: intermediate system exceeds cap");
      }
    }

    next = detail::cheap_reduce(next);
    if (next.inequalities().size() > opts.lp_reduce_above) next = remove_redundant(next);
    cur = std::move(next);
    remaining.erase(pick);
  }
  return remove_redundant(cur);
}

}  // namespace icrr
