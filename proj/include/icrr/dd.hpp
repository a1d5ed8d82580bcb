// Double description method over rational cones, and the vertex /
// facet conversions built on it:
//   vertices            H-form -> exact vertex set (bounded polyhedra)
//   hull_from_points    V-form -> facet description (bipolar duality)
//   project_by_vertices coordinate projection through the vertex set
//   hull_of_union       convex hull of a union of bounded members
//
// The cone representation keeps an explicit lineality basis, so
// lower-dimensional hulls come back with their implied equalities
// (emitted as inequality pairs).
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "fme.hpp"
#include "polyops.hpp"

namespace icrr {

namespace detail {

using Vec = std::vector<Rational>;
using Bits = std::vector<std::uint64_t>;

inline Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

inline void scale_coprime(Vec& v) {
  Rational s = coprime_scale(v);
  if (s != 1)
    for (auto& x : v) x *= s;
}

// Lineality generators stand for +/- directions; pin the sign.
inline void scale_signed(Vec& v) {
  scale_coprime(v);
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
}

struct ConeRay {
  Vec v;
  Bits z;  // constraints satisfied with equality
};

inline void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t(1) << (i % 64); }

inline bool subset_bits(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

inline int popcount_bits(const Bits& b) {
  int n = 0;
  for (auto w : b) n += __builtin_popcountll(w);
  return n;
}

struct DdCone {
  std::vector<Vec> lineality;
  std::vector<ConeRay> rays;
};

// Minimal generator description of {y : c . y <= 0 for all rows c}.
inline DdCone dd_cone(const std::vector<Vec>& constraints, std::size_t dim) {
  const std::size_t words = constraints.empty() ? 1 : (constraints.size() + 63) / 64;
  DdCone cone;
  for (std::size_t i = 0; i < dim; ++i) {
    Vec e(dim, Rational(0));
    e[i] = 1;
    cone.lineality.push_back(std::move(e));
  }

  for (std::size_t t = 0; t < constraints.size(); ++t) {
    const Vec& c = constraints[t];

    // If some lineality direction crosses the hyperplane, use it to put
    // every other generator on the hyperplane; it then becomes a ray.
    int cross = -1;
    for (std::size_t i = 0; i < cone.lineality.size(); ++i)
      if (dot(c, cone.lineality[i]) != 0) {
        cross = static_cast<int>(i);
        break;
      }
    if (cross >= 0) {
      Vec pivot = cone.lineality[cross];
      cone.lineality.erase(cone.lineality.begin() + cross);
      Rational dp = dot(c, pivot);
      if (dp > 0) {
        for (auto& x : pivot) x = -x;
        dp = -dp;
      }
      for (auto& g : cone.lineality) {
        Rational dg = dot(c, g);
        if (dg != 0) {
          Rational f = dg / dp;
          for (std::size_t i = 0; i < g.size(); ++i) g[i] -= f * pivot[i];
          scale_signed(g);
        }
      }
      for (auto& r : cone.rays) {
        Rational dr = dot(c, r.v);
        if (dr != 0) {
          Rational f = dr / dp;
          for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] -= f * pivot[i];
          scale_coprime(r.v);
        }
        set_bit(r.z, t);
      }
      ConeRay nr;
      nr.v = pivot;
      scale_coprime(nr.v);
      nr.z.assign(words, 0);
      for (std::size_t s = 0; s < t; ++s) set_bit(nr.z, s);
      cone.rays.push_back(std::move(nr));
      continue;
    }

    std::vector<std::size_t> neg, zero, pos;
    std::vector<Rational> val(cone.rays.size());
    for (std::size_t i = 0; i < cone.rays.size(); ++i) {
      val[i] = dot(c, cone.rays[i].v);
      (val[i] < 0 ? neg : val[i] > 0 ? pos : zero).push_back(i);
    }
    if (pos.empty()) {
      for (auto i : zero) set_bit(cone.rays[i].z, t);
      continue;
    }

    const int rank_needed =
        static_cast<int>(dim) - static_cast<int>(cone.lineality.size()) - 2;
    auto adjacent = [&](std::size_t p, std::size_t n) {
      Bits common(words);
      for (std::size_t w = 0; w < words; ++w)
        common[w] = cone.rays[p].z[w] & cone.rays[n].z[w];
      if (popcount_bits(common) < rank_needed) return false;
      for (std::size_t r = 0; r < cone.rays.size(); ++r) {
        if (r == p || r == n) continue;
        if (subset_bits(common, cone.rays[r].z)) return false;
      }
      return true;
    };

    std::vector<ConeRay> born;
    for (auto p : pos)
      for (auto n : neg) {
        if (!adjacent(p, n)) continue;
        ConeRay nr;
        nr.v.resize(dim);
        for (std::size_t i = 0; i < dim; ++i)
          nr.v[i] = val[p] * cone.rays[n].v[i] - val[n] * cone.rays[p].v[i];
        scale_coprime(nr.v);
        nr.z.assign(words, 0);
        for (std::size_t w = 0; w < words; ++w)
          nr.z[w] = cone.rays[p].z[w] & cone.rays[n].z[w];
        set_bit(nr.z, t);
        born.push_back(std::move(nr));
      }
    std::vector<ConeRay> next;
    for (auto i : neg) next.push_back(std::move(cone.rays[i]));
    for (auto i : zero) {
      set_bit(cone.rays[i].z, t);
      next.push_back(std::move(cone.rays[i]));
    }
    for (auto& nr : born) next.push_back(std::move(nr));
    cone.rays = std::move(next);
  }

  for (auto& r : cone.rays) scale_coprime(r.v);
  std::sort(cone.rays.begin(), cone.rays.end(),
            [](const ConeRay& a, const ConeRay& b) { return a.v < b.v; });
  cone.rays.erase(std::unique(cone.rays.begin(), cone.rays.end(),
                              [](const ConeRay& a, const ConeRay& b) { return a.v == b.v; }),
                  cone.rays.end());
  std::sort(cone.lineality.begin(), cone.lineality.end());
  return cone;
}

}  // namespace detail

// Exact vertex set of a bounded polyhedron, canonically sorted.
// Points are coordinate vectors aligned with poly.variables().
inline std::vector<std::vector<Rational>> vertices(const Polyhedron& poly) {
  if (!lp_feasible(poly)) return {};
  for (const auto& v : poly.variables()) {
    for (int sign : {1, -1}) {
      auto lp = lp_max(poly, {{v, Rational(sign)}});
      if (lp.status == LpStatus::Unbounded)
        throw UnboundedError("vertices: polyhedron unbounded in " + var_name(v));
    }
  }
  const std::size_t n = poly.variables().size();
  std::vector<detail::Vec> cons;
  for (const auto& q : poly.inequalities()) {
    detail::Vec row = poly.dense_row(q);
    row.push_back(-q.rhs);
    cons.push_back(std::move(row));
  }
  detail::Vec tpos(n + 1, Rational(0));
  tpos[n] = -1;  // t >= 0
  cons.push_back(std::move(tpos));

  auto cone = detail::dd_cone(cons, n + 1);
  std::vector<std::vector<Rational>> pts;
  for (const auto& r : cone.rays) {
    if (r.v[n] <= 0) continue;  // recession direction, impossible when bounded
    std::vector<Rational> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = r.v[i] / r.v[n];
    pts.push_back(std::move(p));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Facet description of the convex hull of a finite point set.
inline Polyhedron hull_from_points(const std::vector<VarId>& vars,
                                   const std::vector<std::vector<Rational>>& points) {
  Polyhedron out(vars);
  if (points.empty()) {
    out.add(LinearInequality{{}, Rational(-1)});
    return out;
  }
  const std::size_t n = out.variables().size();
  std::vector<detail::Vec> cons;
  for (const auto& p : points) {
    detail::Vec row = p;
    row.push_back(Rational(1));
    cons.push_back(std::move(row));
  }
  auto polar = detail::dd_cone(cons, n + 1);
  // Polar generators (a, b) encode a.x <= -b; lineality gives equalities.
  for (const auto& l : polar.lineality) {
    std::map<VarId, Rational> coeffs;
    for (std::size_t i = 0; i < n; ++i)
      if (l[i] != 0) coeffs[out.variables()[i]] = l[i];
    out.add_equality(coeffs, -l[n]);
  }
  for (const auto& r : polar.rays) {
    std::map<VarId, Rational> coeffs;
    for (std::size_t i = 0; i < n; ++i)
      if (r.v[i] != 0) coeffs[out.variables()[i]] = r.v[i];
    out.add(LinearInequality{std::move(coeffs), -r.v[n]});
  }
  return remove_redundant(out);
}

// Projection onto `keep` via the vertex set; equals fme_eliminate on the
// same (bounded) input as a set.
inline Polyhedron project_by_vertices(const Polyhedron& poly, const std::set<VarId>& keep) {
  std::vector<VarId> kept;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < poly.variables().size(); ++i)
    if (keep.count(poly.variables()[i])) {
      kept.push_back(poly.variables()[i]);
      idx.push_back(i);
    }
  auto verts = vertices(poly);
  std::vector<std::vector<Rational>> pts;
  for (const auto& v : verts) {
    std::vector<Rational> p;
    p.reserve(idx.size());
    for (auto i : idx) p.push_back(v[i]);
    pts.push_back(std::move(p));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return hull_from_points(kept, pts);
}

// Facet description of conv(union of members); empty members are ignored.
inline Polyhedron hull_of_union(const RegionUnion& u) {
  if (u.members.empty()) throw std::runtime_error("hull_of_union: empty union");
  const auto& vars = u.members.front().variables();
  std::vector<std::vector<Rational>> pts;
  for (const auto& m : u.members) {
    if (m.variables() != vars)
      throw std::runtime_error("hull_of_union: members over different variables");
    auto verts = vertices(m);  // throws UnboundedError on unbounded members
    pts.insert(pts.end(), verts.begin(), verts.end());
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return hull_from_points(vars, pts);
}

}  // namespace icrr
