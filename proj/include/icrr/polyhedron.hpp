// Closed linear inequality systems over named variables, kept in a
// canonical form so that syntactic equality of systems is meaningful:
//   - every inequality is "coeffs . x <= rhs" with the coefficients
//     scaled to coprime integers (positive scaling only, so each
//     halfspace has a single representative),
//   - zero coefficients are never stored,
//   - inequalities are sorted and deduplicated,
//   - the trivially false row is normalized to "0 <= -1".
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"
#include "varid.hpp"

namespace icrr {

struct LinearInequality {
  std::map<VarId, Rational> coeffs;  // lhs, relation is always "<="
  Rational rhs = 0;

  void canonicalize() {
    for (auto it = coeffs.begin(); it != coeffs.end();)
      it = (it->second == 0) ? coeffs.erase(it) : std::next(it);
    if (coeffs.empty()) {
      rhs = (rhs < 0) ? Rational(-1) : Rational(0);
      return;
    }
    std::vector<Rational> vals;
    vals.reserve(coeffs.size());
    for (const auto& [v, c] : coeffs) vals.push_back(c);
    Rational s = coprime_scale(vals);
    for (auto& [v, c] : coeffs) c *= s;
    rhs *= s;
  }

  bool trivially_true() const { return coeffs.empty() && rhs >= 0; }
  bool trivially_false() const { return coeffs.empty() && rhs < 0; }

  Rational evaluate(const std::map<VarId, Rational>& point) const {
    Rational acc = 0;
    for (const auto& [v, c] : coeffs) {
      auto it = point.find(v);
      if (it != point.end()) acc += c * it->second;
    }
    return acc;
  }

  auto key() const { return std::tie(coeffs, rhs); }
  bool operator==(const LinearInequality& o) const { return key() == o.key(); }
  bool operator<(const LinearInequality& o) const { return key() < o.key(); }
};

inline LinearInequality make_ineq(std::map<VarId, Rational> coeffs, Rational rhs) {
  LinearInequality q{std::move(coeffs), std::move(rhs)};
  q.canonicalize();
  return q;
}

class Polyhedron {
 public:
  Polyhedron() = default;
  explicit Polyhedron(std::vector<VarId> vars) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    vars_ = std::move(vars);
  }

  const std::vector<VarId>& variables() const { return vars_; }
  const std::vector<LinearInequality>& inequalities() const { return ineqs_; }

  int var_index(const VarId& v) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) return -1;
    return static_cast<int>(it - vars_.begin());
  }

  void add(LinearInequality q) {
    q.canonicalize();
    if (q.trivially_true()) return;
    if (q.trivially_false()) q = LinearInequality{{}, Rational(-1)};
    auto it = std::lower_bound(ineqs_.begin(), ineqs_.end(), q);
    if (it != ineqs_.end() && *it == q) return;
    ineqs_.insert(it, std::move(q));
  }

  // a . x = rhs, stored as the two opposite inequalities.
  void add_equality(const std::map<VarId, Rational>& coeffs, const Rational& rhs) {
    add(LinearInequality{coeffs, rhs});
    std::map<VarId, Rational> neg;
    for (const auto& [v, c] : coeffs) neg[v] = -c;
    add(LinearInequality{neg, -rhs});
  }

  // -x <= 0 for every variable.
  void add_nonnegativity() {
    for (const auto& v : vars_) add(make_ineq({{v, Rational(-1)}}, Rational(0)));
  }

  bool has_false_row() const {
    return !ineqs_.empty() && ineqs_.front().trivially_false();
  }

  bool contains(const std::map<VarId, Rational>& point) const {
    for (const auto& q : ineqs_)
      if (q.evaluate(point) > q.rhs) return false;
    return true;
  }

  bool operator==(const Polyhedron& o) const {
    return vars_ == o.vars_ && ineqs_ == o.ineqs_;
  }

  // Dense view used by the numerical kernels (LP, FME, DD).
  std::vector<Rational> dense_row(const LinearInequality& q) const {
    std::vector<Rational> row(vars_.size(), Rational(0));
    for (const auto& [v, c] : q.coeffs) {
      int i = var_index(v);
      if (i < 0) throw std::runtime_error("inequality variable not in polyhedron");
      row[i] = c;
    }
    return row;
  }

  LinearInequality from_dense(const std::vector<Rational>& row, Rational rhs) const {
    std::map<VarId, Rational> coeffs;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (row[i] != 0) coeffs[vars_[i]] = row[i];
    return make_ineq(std::move(coeffs), std::move(rhs));
  }

 private:
  std::vector<VarId> vars_;
  std::vector<LinearInequality> ineqs_;
};

// Union of polyhedra over one shared variable list (pre-hull carrier).
struct RegionUnion {
  std::vector<Polyhedron> members;
};

}  // namespace icrr
