// Inner-vs-outer region analysis: capacity certification with gap
// witnesses, the LP-certificate backend used when full projection is
// out of reach, and report rendering (text and stable JSON).
#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "dd.hpp"
#include "regionio.hpp"
#include "schemes.hpp"

namespace icrr {

enum class Verdict { TIGHT, GAP, UNKNOWN };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::TIGHT: return "TIGHT";
    case Verdict::GAP: return "GAP";
    case Verdict::UNKNOWN: return "UNKNOWN";
  }
  return "?";
}

struct CertifyResult {
  Verdict verdict = Verdict::UNKNOWN;
  std::optional<std::map<VarId, Rational>> witness;  // in outer, not in inner
};

// A point of `a` outside `b`, if one exists. Vertices of `a` are
// preferred (human-meaningful witnesses); LP separation is the fallback
// (unbounded `a`, or a violation not visible at any vertex).
inline std::optional<std::map<VarId, Rational>> separating_point(const Polyhedron& a,
                                                                 const Polyhedron& b) {
  try {
    for (const auto& v : vertices(a)) {
      std::map<VarId, Rational> p;
      for (std::size_t i = 0; i < a.variables().size(); ++i)
        if (v[i] != 0) p[a.variables()[i]] = v[i];
      if (!contains_point(b, p)) return p;
    }
  } catch (const UnboundedError&) {
    // fall through to LP separation
  }
  for (const auto& q : b.inequalities()) {
    auto lp = lp_max(a, q.coeffs);
    if (lp.status == LpStatus::Optimal && lp.value > q.rhs) return lp.point;
    if (lp.status == LpStatus::Unbounded) {
      // Cap the objective just past the facet to pull out a finite point.
      Polyhedron capped = a;
      capped.add(LinearInequality{q.coeffs, q.rhs + 1});
      auto lp2 = lp_max(capped, q.coeffs);
      if (lp2.status == LpStatus::Optimal && lp2.value > q.rhs) return lp2.point;
    }
  }
  return std::nullopt;
}

// TIGHT iff the sets are equal; otherwise GAP with a witness point of
// the outer bound outside the inner hull.
inline CertifyResult certify(const Polyhedron& inner, const Polyhedron& outer) {
  if (poly_equal(inner, outer)) return {Verdict::TIGHT, std::nullopt};
  auto w = separating_point(outer, inner);
  if (w) return {Verdict::GAP, std::move(w)};
  throw std::runtime_error("certify: inner region exceeds the outer bound");
}

// Certificate-based equality check between a lifted system (rates plus
// auxiliaries) and a target over the rates alone, without projecting:
//  (a) every target facet is valid over the lifted system (LP maximum),
//  (b) every target vertex is reachable (feasibility with rates pinned).
struct VerifyCertificates {
  struct FacetCheck {
    LinearInequality facet;
    Rational max = 0;
    bool ok = false;
  };
  struct VertexCheck {
    std::vector<Rational> vertex;
    bool feasible = false;
  };
  std::vector<FacetCheck> facets;
  std::vector<VertexCheck> vertices;
  bool ok = true;
};

inline VerifyCertificates verify_region_equals(const Polyhedron& lifted,
                                               const Polyhedron& target) {
  VerifyCertificates cert;
  for (const auto& q : target.inequalities()) {
    VerifyCertificates::FacetCheck fc;
    fc.facet = q;
    auto lp = lp_max(lifted, q.coeffs);
    fc.ok = (lp.status == LpStatus::Optimal && lp.value <= q.rhs);
    if (lp.status == LpStatus::Optimal) fc.max = lp.value;
    cert.ok = cert.ok && fc.ok;
    cert.facets.push_back(std::move(fc));
  }
  for (const auto& v : vertices(target)) {
    VerifyCertificates::VertexCheck vc;
    vc.vertex = v;
    Polyhedron pinned = lifted;
    for (std::size_t i = 0; i < target.variables().size(); ++i)
      pinned.add_equality({{target.variables()[i], Rational(1)}}, v[i]);
    vc.feasible = lp_feasible(pinned);
    cert.ok = cert.ok && vc.feasible;
    cert.vertices.push_back(std::move(vc));
  }
  return cert;
}

struct RegionReport {
  std::string instance_id;
  std::string scheme;
  std::vector<std::string> plans;  // human-readable plan descriptions
  Polyhedron region;               // inner hull over R_1..R_N
  Verdict verdict = Verdict::UNKNOWN;
  std::optional<std::map<VarId, Rational>> witness;
  bool exhaustive = true;
  std::size_t member_count = 0;
};

// Assemble the report; a truncated search can still certify TIGHT (the
// inner hull reached the outer bound) but never GAP.
inline RegionReport make_report(const std::string& instance_id, const SchemeResult& sr,
                                const std::optional<Polyhedron>& outer) {
  RegionReport rep;
  rep.instance_id = instance_id;
  rep.scheme = scheme_name(sr.scheme);
  for (const auto& pr : sr.plans) rep.plans.push_back(pr.plan.describe());
  rep.region = sr.hull;
  rep.exhaustive = sr.exhaustive;
  rep.member_count = sr.member_count;
  if (outer) {
    auto c = certify(sr.hull, *outer);
    if (c.verdict == Verdict::TIGHT) {
      rep.verdict = Verdict::TIGHT;
    } else if (sr.exhaustive) {
      rep.verdict = Verdict::GAP;
      rep.witness = c.witness;
    } else {
      rep.verdict = Verdict::UNKNOWN;
    }
  }
  return rep;
}

inline std::string format_inequality(const LinearInequality& q) {
  std::string s;
  bool first = true;
  for (const auto& [v, c] : q.coeffs) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        s += "-";
        a = -a;
      }
    } else {
      s += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (a != 1) s += rational_to_string(a);
    s += var_name(v);
    first = false;
  }
  if (first) s += "0";
  return s + " <= " + rational_to_string(q.rhs);
}

inline std::string format_point(const std::vector<VarId>& vars,
                                const std::map<VarId, Rational>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = p.find(vars[i]);
    s += (i ? ", " : "") + rational_to_string(it == p.end() ? Rational(0) : it->second);
  }
  return s + ")";
}

inline std::string render_report_text(const RegionReport& rep) {
  std::string s;
  s += "instance: " + rep.instance_id + "\n";
  s += "scheme: " + rep.scheme + "\n";
  for (const auto& p : rep.plans) s += "plan: " + p + "\n";
  s += "region facets:\n";
  for (const auto& q : rep.region.inequalities()) s += "  " + format_inequality(q) + "\n";
  s += "verdict: " + verdict_name(rep.verdict);
  if (rep.verdict == Verdict::TIGHT) s += " (capacity region established)";
  if (rep.verdict == Verdict::UNKNOWN && !rep.exhaustive)
    s += " (enumeration caps were hit; inner bound may be incomplete)";
  s += "\n";
  if (rep.witness)
    s += "witness: " + format_point(rep.region.variables(), *rep.witness) + "\n";
  s += "stats: members=" + std::to_string(rep.member_count) +
       " exhaustive=" + (rep.exhaustive ? std::string("yes") : std::string("no")) + "\n";
  return s;
}

inline std::string render_report_json(const RegionReport& rep) {
  nlohmann::json doc;
  doc["instance"] = rep.instance_id;
  doc["scheme"] = rep.scheme;
  doc["plans"] = rep.plans;
  doc["verdict"] = verdict_name(rep.verdict);
  if (rep.witness) {
    nlohmann::json w = nlohmann::json::object();
    for (const auto& v : rep.region.variables()) {
      auto it = rep.witness->find(v);
      w[var_name(v)] = rational_to_string(it == rep.witness->end() ? Rational(0) : it->second);
    }
    doc["witness"] = w;
  } else {
    doc["witness"] = nullptr;
  }
  doc["region"] = nlohmann::json::parse(region_to_json(rep.region));
  doc["stats"] = {{"members", rep.member_count}, {"exhaustive", rep.exhaustive}};
  return doc.dump(2) + "\n";
}

// Certificate that the non-cooperative lifted system of a group sits
// inside the cooperative one for the same decoding choice, without
// projecting either: under the substitution
//   (cooperative) y_J  :=  sum over senders k carrying J of y^k_J
// the decoding rows coincide syntactically, so only the cooperative
// link rows need an LP maximum over the non-cooperative system.
inline bool noncoop_within_coop(const Instance& inst, const Group& g,
                                const DecodingChoice& choice) {
  Polyhedron nc = group_system(inst, g, choice, Compression::NonCooperative, false);
  auto coop_links = link_constraints(inst, g, Compression::Cooperative, false);
  for (const auto& q : coop_links) {
    std::map<VarId, Rational> subst;
    for (const auto& [v, c] : q.coeffs) {
      for (int k : g.senders)
        if (!(v.subset & ~inst.senders[k - 1].messages))
          subst[VarId::composite(v.subset, g.index, k)] += c;
    }
    auto lp = lp_max(nc, subst);
    if (lp.status != LpStatus::Optimal || lp.value > q.rhs) return false;
  }
  return true;
}

}  // namespace icrr
