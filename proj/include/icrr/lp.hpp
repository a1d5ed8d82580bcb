// Exact linear programming by two-phase dictionary simplex with Bland's
// rule. All pivoting is over rationals, so results are exact and, with
// the fixed pivot rule, bit-for-bit reproducible.
//
// Variables carrying an explicit "-x <= 0" row get a single nonnegative
// column (and the row is absorbed); all other variables are split into
// a difference of two nonnegative columns.
#pragma once

#include <cassert>
#include <map>
#include <vector>

#include "polyhedron.hpp"
#include "rational.hpp"

namespace icrr {

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value = 0;                 // meaningful when Optimal
  std::map<VarId, Rational> point;    // an optimal point when Optimal
};

namespace detail {

// Dictionary: for each basic variable b_i,
//   x_{b_i} = rows[i][0] + sum_j rows[i][1+j] * x_{nonbasic[j]}
// Objective:  z = obj[0] + sum_j obj[1+j] * x_{nonbasic[j]}
class SimplexDict {
 public:
  std::vector<int> basic, nonbasic;       // variable ids
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> obj;

  enum class Step { Pivoted, Optimal, Unbounded };

  // Bland: entering = smallest-id nonbasic variable with positive
  // reduced cost; leaving = tightest ratio, ties by smallest basic id.
  Step step() {
    int e = -1;
    for (std::size_t j = 0; j < nonbasic.size(); ++j)
      if (obj[1 + j] > 0 && (e < 0 || nonbasic[j] < nonbasic[e])) e = static_cast<int>(j);
    if (e < 0) return Step::Optimal;
    int r = -1;
    Rational best = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational& a = rows[i][1 + e];
      if (a >= 0) continue;
      Rational ratio = -rows[i][0] / a;
      if (r < 0 || ratio < best || (ratio == best && basic[i] < basic[r])) {
        r = static_cast<int>(i);
        best = ratio;
      }
    }
    if (r < 0) return Step::Unbounded;
    pivot(r, e);
    return Step::Pivoted;
  }

  void pivot(int r, int e) {
    const std::size_t w = nonbasic.size() + 1;
    std::vector<Rational> solved(w);
    const Rational& a = rows[r][1 + e];
    // Solve row r for the entering variable; the leaving variable takes
    // the entering one's column slot.
    solved[0] = -rows[r][0] / a;
    for (std::size_t j = 0; j < nonbasic.size(); ++j)
      solved[1 + j] = (static_cast<int>(j) == e) ? Rational(Rational(1) / a)
                                                 : Rational(-rows[r][1 + j] / a);
    std::swap(basic[r], nonbasic[e]);
    rows[r] = solved;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      substitute(rows[i], solved, e);
    }
    substitute(obj, solved, e);
  }

  static void substitute(std::vector<Rational>& row, const std::vector<Rational>& solved,
                         int e) {
    Rational c = row[1 + e];
    if (c == 0) return;
    row[1 + e] = 0;
    for (std::size_t t = 0; t < row.size(); ++t)
      if (solved[t] != 0) row[t] += c * solved[t];
  }
};

}  // namespace detail

// Maximize objective . x over the polyhedron.
inline LpResult lp_max(const Polyhedron& poly, const std::map<VarId, Rational>& objective) {
  for (const auto& [v, c] : objective)
    if (poly.var_index(v) < 0)
      throw std::runtime_error("objective variable not in polyhedron: " + var_name(v));

  const std::size_t n = poly.variables().size();

  // Pass 1: variables with a plain "-x <= 0" row become native
  // nonnegative columns; the row is absorbed.
  std::vector<bool> nonneg(n, false);
  std::vector<const LinearInequality*> active;
  for (const auto& q : poly.inequalities()) {
    if (q.coeffs.size() == 1 && q.rhs == 0) {
      const auto& [v, c] = *q.coeffs.begin();
      if (c == -1) {
        nonneg[poly.var_index(v)] = true;
        continue;
      }
    }
    active.push_back(&q);
  }
  const std::size_t m = active.size();

  // Column ids: per variable one column (nonnegative) or a plus/minus
  // pair; then slacks; phase-1 auxiliary last (largest id, so Bland
  // drives it out early).
  std::vector<int> col_pos(n), col_neg(n, -1);
  int next_id = 0;
  for (std::size_t i = 0; i < n; ++i) {
    col_pos[i] = next_id++;
    if (!nonneg[i]) col_neg[i] = next_id++;
  }
  const int ncols = next_id;
  const int aux_id = ncols + static_cast<int>(m);

  detail::SimplexDict d;
  d.nonbasic.resize(ncols);
  for (int i = 0; i < ncols; ++i) d.nonbasic[i] = i;
  d.basic.resize(m);
  d.rows.assign(m, std::vector<Rational>(ncols + 1));
  bool need_phase1 = false;
  for (std::size_t i = 0; i < m; ++i) {
    d.basic[i] = ncols + static_cast<int>(i);
    d.rows[i][0] = active[i]->rhs;
    if (d.rows[i][0] < 0) need_phase1 = true;
    for (const auto& [v, c] : active[i]->coeffs) {
      const int vi = poly.var_index(v);
      d.rows[i][1 + col_pos[vi]] = -c;
      if (col_neg[vi] >= 0) d.rows[i][1 + col_neg[vi]] = c;
    }
  }

  if (need_phase1) {
    // max -x0  s.t. slack_i = b_i - A y + x0.
    for (auto& row : d.rows) row.push_back(Rational(1));
    d.nonbasic.push_back(aux_id);
    d.obj.assign(ncols + 2, Rational(0));
    d.obj[1 + ncols] = -1;
    // Initial special pivot: x0 enters, most-negative row leaves.
    int r = 0;
    for (std::size_t i = 1; i < m; ++i)
      if (d.rows[i][0] < d.rows[r][0]) r = static_cast<int>(i);
    d.pivot(r, ncols);
    for (;;) {
      auto s = d.step();
      if (s == detail::SimplexDict::Step::Optimal) break;
      assert(s != detail::SimplexDict::Step::Unbounded);  // aux objective <= 0
    }
    if (d.obj[0] != 0) return LpResult{LpStatus::Infeasible, 0, {}};
    // Drop x0. If still basic (at value 0), pivot it out first.
    for (std::size_t i = 0; i < d.rows.size(); ++i) {
      if (d.basic[i] != aux_id) continue;
      int e = -1;
      for (std::size_t j = 0; j < d.nonbasic.size(); ++j)
        if (d.rows[i][1 + j] != 0 && d.nonbasic[j] != aux_id &&
            (e < 0 || d.nonbasic[j] < d.nonbasic[e]))
          e = static_cast<int>(j);
      if (e >= 0) {
        d.pivot(static_cast<int>(i), e);
      } else {
        // Row reads x0 = 0: the constraint is vacuous now; drop the row.
        d.rows.erase(d.rows.begin() + i);
        d.basic.erase(d.basic.begin() + i);
      }
      break;
    }
    for (std::size_t j = 0; j < d.nonbasic.size(); ++j) {
      if (d.nonbasic[j] != aux_id) continue;
      d.nonbasic.erase(d.nonbasic.begin() + j);
      for (auto& row : d.rows) row.erase(row.begin() + 1 + j);
      break;
    }
  }

  // Phase 2 objective, expressed through the current dictionary.
  d.obj.assign(d.nonbasic.size() + 1, Rational(0));
  auto add_col = [&](int col_id, const Rational& c) {
    for (std::size_t j = 0; j < d.nonbasic.size(); ++j)
      if (d.nonbasic[j] == col_id) {
        d.obj[1 + j] += c;
        return;
      }
    for (std::size_t i = 0; i < d.basic.size(); ++i)
      if (d.basic[i] == col_id) {
        for (std::size_t t = 0; t < d.obj.size(); ++t) d.obj[t] += c * d.rows[i][t];
        return;
      }
  };
  for (const auto& [v, c] : objective) {
    const int vi = poly.var_index(v);
    add_col(col_pos[vi], c);
    if (col_neg[vi] >= 0) add_col(col_neg[vi], -c);
  }

  for (;;) {
    auto s = d.step();
    if (s == detail::SimplexDict::Step::Unbounded)
      return LpResult{LpStatus::Unbounded, 0, {}};
    if (s == detail::SimplexDict::Step::Optimal) break;
  }

  LpResult res;
  res.status = LpStatus::Optimal;
  res.value = d.obj[0];
  std::vector<Rational> colval(ncols, Rational(0));
  for (std::size_t i = 0; i < d.basic.size(); ++i)
    if (d.basic[i] < ncols) colval[d.basic[i]] = d.rows[i][0];
  for (std::size_t i = 0; i < n; ++i)
    res.point[poly.variables()[i]] =
        col_neg[i] >= 0 ? Rational(colval[col_pos[i]] - colval[col_neg[i]])
                        : colval[col_pos[i]];
  return res;
}

inline bool lp_feasible(const Polyhedron& poly) {
  return lp_max(poly, {}).status == LpStatus::Optimal;
}

}  // namespace icrr
