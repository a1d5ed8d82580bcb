// Sender grouping plans and the six inner-bound scheme variants.
//
// A plan groups the senders; capacities are fixed per group except in
// link-sender mode, where each sender splits its capacity across the
// groups it joins via symbolic shares C_{k,P} subject to
//   sum over groups containing k of C_{k,P} <= C_k,  C_{k,P} >= 0.
//
// Scheme map (compression x grouping):
//   dcc-a   non-cooperative, all-in-one
//   dcc     non-cooperative, sender partitions
//   mdcc    non-cooperative, link-sender plans (symbolic shares)
//   ccc-a   cooperative,     all-in-one
//   ccc-s   cooperative,     sender partitions
//   ccc-ls  cooperative,     link-sender plans (symbolic shares)
//
// The scheme region is the convex hull of the union over all plans,
// decoding choices, and admissible capacity splits, taken over the
// message-rate coordinates.
#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "composite.hpp"
#include "dd.hpp"
#include "hull_oracle.hpp"

namespace icrr {

enum class PlanMode { AllInOne, SenderPartition, LinkSenderPartition };

struct GroupingPlan {
  PlanMode mode = PlanMode::AllInOne;
  std::vector<Group> groups;

  bool symbolic() const { return mode == PlanMode::LinkSenderPartition; }

  std::string describe() const {
    std::string s = mode == PlanMode::AllInOne            ? "all-in-one"
                    : mode == PlanMode::SenderPartition   ? "sender-partition"
                                                          : "link-sender-partition";
    for (const auto& g : groups) {
      s += " {";
      for (std::size_t i = 0; i < g.senders.size(); ++i)
        s += (i ? "," : "") + std::to_string(g.senders[i]);
      s += "}";
    }
    return s;
  }
};

inline GroupingPlan make_plan(PlanMode mode, std::vector<std::vector<int>> groups, int K) {
  GroupingPlan plan;
  plan.mode = mode;
  if (groups.empty()) throw ParseError("plan has no groups");
  std::vector<int> count(K, 0);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    auto& gs = groups[gi];
    std::sort(gs.begin(), gs.end());
    if (gs.empty() || std::unique(gs.begin(), gs.end()) != gs.end())
      throw ParseError("plan group " + std::to_string(gi + 1) + " is empty or repeats a sender");
    for (int k : gs) {
      if (k < 1 || k > K)
        throw ParseError("plan group names sender " + std::to_string(k) + " out of range");
      ++count[k - 1];
    }
    Group g;
    g.senders = gs;
    g.index = static_cast<int>(gi + 1);
    plan.groups.push_back(std::move(g));
  }
  for (int k = 1; k <= K; ++k)
    if (count[k - 1] == 0)
      throw ParseError("plan does not cover sender " + std::to_string(k));
  if (mode == PlanMode::AllInOne &&
      (groups.size() != 1 || static_cast<int>(groups[0].size()) != K))
    throw ParseError("all-in-one plan must consist of the single full sender set");
  if (mode == PlanMode::SenderPartition)
    for (int k = 1; k <= K; ++k)
      if (count[k - 1] != 1)
        throw ParseError("sender-partition groups must be disjoint");
  if (mode == PlanMode::LinkSenderPartition)
    for (std::size_t a = 0; a < groups.size(); ++a)
      for (std::size_t b = 0; b < a; ++b)
        if (groups[a] == groups[b])
          throw ParseError("link-sender plan repeats a group");
  return plan;
}

inline GroupingPlan all_in_one_plan(int K) {
  std::vector<int> all(K);
  std::iota(all.begin(), all.end(), 1);
  return make_plan(PlanMode::AllInOne, {all}, K);
}

// All set partitions of [1..K] via restricted-growth strings, in the
// canonical RGS order (so the single-block partition comes first).
inline std::vector<std::vector<std::vector<int>>> enumerate_sender_partitions(int K) {
  if (K < 1 || K > 12) throw LimitError("enumerate_sender_partitions: K out of range");
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> a(K, 0);
  for (;;) {
    int blocks = *std::max_element(a.begin(), a.end()) + 1;
    std::vector<std::vector<int>> part(blocks);
    for (int i = 0; i < K; ++i) part[a[i]].push_back(i + 1);
    out.push_back(std::move(part));
    int i = K - 1;
    for (; i > 0; --i) {
      int cap = *std::max_element(a.begin(), a.begin() + i) + 1;
      if (a[i] < cap) {
        ++a[i];
        std::fill(a.begin() + i + 1, a.end(), 0);
        break;
      }
      a[i] = 0;
    }
    if (i == 0) break;
  }
  return out;
}

struct PlanEnumeration {
  std::vector<GroupingPlan> plans;
  bool complete = true;
};

// Link-sender plan library.
//   "default":    all-in-one, every sender partition, and (K <= 4) every
//                 cover of the senders by distinct two-element subsets.
//   "exhaustive": every cover by distinct nonempty subsets (K <= 4).
// Plans are deduplicated by their group sets.
inline PlanEnumeration enumerate_link_sender_plans(int K, const std::string& policy,
                                                   std::size_t max_plans = 10000) {
  PlanEnumeration out;
  std::set<std::vector<std::vector<int>>> seen;
  auto push = [&](std::vector<std::vector<int>> groups) {
    for (auto& g : groups) std::sort(g.begin(), g.end());
    std::sort(groups.begin(), groups.end());
    if (!seen.insert(groups).second) return;
    if (out.plans.size() >= max_plans) {
      out.complete = false;
      return;
    }
    out.plans.push_back(make_plan(PlanMode::LinkSenderPartition, groups, K));
  };

  if (policy == "default") {
    for (auto& part : enumerate_sender_partitions(K)) push(part);
    if (K <= 4) {
      // Covers by distinct pairs: subsets of the pair list.
      std::vector<std::vector<int>> pairs;
      for (int a = 1; a <= K; ++a)
        for (int b = a + 1; b <= K; ++b) pairs.push_back({a, b});
      for (std::uint32_t m = 1; m < (1u << pairs.size()); ++m) {
        std::uint32_t covered = 0;
        std::vector<std::vector<int>> groups;
        for (std::size_t i = 0; i < pairs.size(); ++i)
          if (m & (1u << i)) {
            groups.push_back(pairs[i]);
            covered |= (1u << (pairs[i][0] - 1)) | (1u << (pairs[i][1] - 1));
          }
        if (covered == (1u << K) - 1u) push(std::move(groups));
      }
    }
  } else if (policy == "exhaustive") {
    if (K > 4) throw LimitError("enumerate_link_sender_plans: exhaustive policy needs K <= 4");
    std::vector<std::vector<int>> subsets;
    for (std::uint32_t s = 1; s < (1u << K); ++s) {
      std::vector<int> g;
      for (int k = 1; k <= K; ++k)
        if (s & (1u << (k - 1))) g.push_back(k);
      subsets.push_back(std::move(g));
    }
    for (std::uint32_t m = 1; m < (1u << subsets.size()); ++m) {
      std::uint32_t covered = 0;
      std::vector<std::vector<int>> groups;
      for (std::size_t i = 0; i < subsets.size(); ++i)
        if (m & (1u << i)) {
          groups.push_back(subsets[i]);
          for (int k : subsets[i]) covered |= 1u << (k - 1);
        }
      if (covered == (1u << K) - 1u) push(std::move(groups));
    }
  } else {
    throw ParseError("unknown link-sender plan policy: " + policy);
  }
  return out;
}

// One combined member per tuple of group members: conjoin the group
// systems, couple R_j = sum of its per-group rates, add capacity-share
// admissibility in symbolic mode, and eliminate everything but the
// message rates.
struct CombineResult {
  RegionUnion u;                                  // members over R_1..R_N
  std::vector<std::vector<std::size_t>> tuples;   // member -> per-group indices
  bool complete = true;
};

inline CombineResult combine_groups(const Instance& inst, const GroupingPlan& plan,
                                    const std::vector<RegionUnion>& unions,
                                    const FmeOptions& opts = {},
                                    std::size_t max_tuples = 100000) {
  if (unions.size() != plan.groups.size())
    throw std::runtime_error("combine_groups: unions not aligned with plan groups");
  std::vector<VarId> rate_vars;
  for (int j = 1; j <= inst.num_messages; ++j) rate_vars.push_back(VarId::message_rate(j));

  CombineResult res;
  std::vector<std::size_t> idx(plan.groups.size(), 0);
  for (;;) {
    if (res.u.members.size() == max_tuples) {
      res.complete = false;
      break;
    }
    std::vector<VarId> vars = rate_vars;
    for (std::size_t gi = 0; gi < plan.groups.size(); ++gi) {
      const auto& mvars = unions[gi].members[idx[gi]].variables();
      vars.insert(vars.end(), mvars.begin(), mvars.end());
    }
    Polyhedron sys(std::move(vars));
    sys.add_nonnegativity();
    for (std::size_t gi = 0; gi < plan.groups.size(); ++gi)
      for (const auto& q : unions[gi].members[idx[gi]].inequalities()) sys.add(q);
    for (int j = 1; j <= inst.num_messages; ++j) {
      std::map<VarId, Rational> eq{{VarId::message_rate(j), 1}};
      for (const auto& g : plan.groups)
        if (group_messages(inst, g) & (1u << (j - 1)))
          eq[VarId::group_rate(j, g.index)] = -1;
      sys.add_equality(eq, 0);
    }
    if (plan.symbolic()) {
      for (int k = 1; k <= inst.num_senders(); ++k) {
        LinearInequality q;
        for (const auto& g : plan.groups)
          if (std::find(g.senders.begin(), g.senders.end(), k) != g.senders.end())
            q.coeffs[VarId::link_split(k, g.index)] = 1;
        if (q.coeffs.empty()) continue;
        q.rhs = inst.senders[k - 1].capacity;
        sys.add(std::move(q));
      }
    }
    std::set<VarId> drop;
    for (const auto& v : sys.variables())
      if (v.kind != VarKind::MessageRate) drop.insert(v);
    res.u.members.push_back(fme_eliminate(sys, drop, opts));
    res.tuples.push_back(idx);

    std::size_t gi = 0;
    while (gi < idx.size() && ++idx[gi] == unions[gi].members.size()) idx[gi++] = 0;
    if (gi == idx.size()) break;
  }
  return res;
}

// Full lifted system of one decoding tuple under a plan: the groups'
// systems conjoined with the rate coupling R_j = sum of its per-group
// rates and, in symbolic mode, the capacity-share admissibility rows.
inline Polyhedron tuple_system(const Instance& inst, const GroupingPlan& plan,
                               const std::vector<DecodingChoice>& per_group,
                               Compression comp) {
  if (per_group.size() != plan.groups.size())
    throw std::runtime_error("tuple_system: choices not aligned with plan groups");
  std::vector<Polyhedron> gsys;
  std::vector<VarId> vars;
  for (int j = 1; j <= inst.num_messages; ++j) vars.push_back(VarId::message_rate(j));
  for (std::size_t gi = 0; gi < plan.groups.size(); ++gi) {
    gsys.push_back(group_system(inst, plan.groups[gi], per_group[gi], comp, plan.symbolic()));
    const auto& gv = gsys.back().variables();
    vars.insert(vars.end(), gv.begin(), gv.end());
  }
  Polyhedron sys(std::move(vars));
  sys.add_nonnegativity();
  for (const auto& g : gsys)
    for (const auto& q : g.inequalities()) sys.add(q);
  for (int j = 1; j <= inst.num_messages; ++j) {
    std::map<VarId, Rational> eq{{VarId::message_rate(j), 1}};
    for (const auto& g : plan.groups)
      if (group_messages(inst, g) & (1u << (j - 1)))
        eq[VarId::group_rate(j, g.index)] = -1;
    sys.add_equality(eq, 0);
  }
  if (plan.symbolic()) {
    for (int k = 1; k <= inst.num_senders(); ++k) {
      LinearInequality q;
      for (const auto& g : plan.groups)
        if (std::find(g.senders.begin(), g.senders.end(), k) != g.senders.end())
          q.coeffs[VarId::link_split(k, g.index)] = 1;
      if (q.coeffs.empty()) continue;
      q.rhs = inst.senders[k - 1].capacity;
      sys.add(std::move(q));
    }
  }
  return sys;
}

enum class Scheme { DccA, Dcc, Mdcc, CccA, CccS, CccLs };

inline Scheme parse_scheme(const std::string& s) {
  if (s == "dcc-a") return Scheme::DccA;
  if (s == "dcc") return Scheme::Dcc;
  if (s == "mdcc") return Scheme::Mdcc;
  if (s == "ccc-a") return Scheme::CccA;
  if (s == "ccc-s") return Scheme::CccS;
  if (s == "ccc-ls") return Scheme::CccLs;
  throw ParseError("unknown scheme: " + s);
}

inline std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::DccA: return "dcc-a";
    case Scheme::Dcc: return "dcc";
    case Scheme::Mdcc: return "mdcc";
    case Scheme::CccA: return "ccc-a";
    case Scheme::CccS: return "ccc-s";
    case Scheme::CccLs: return "ccc-ls";
  }
  return "?";
}

inline Compression scheme_compression(Scheme s) {
  switch (s) {
    case Scheme::DccA:
    case Scheme::Dcc:
    case Scheme::Mdcc:
      return Compression::NonCooperative;
    default:
      return Compression::Cooperative;
  }
}

// Default plan set for a scheme under plan_source "auto".
inline std::vector<GroupingPlan> auto_plans(const Instance& inst, Scheme s,
                                            std::size_t max_plans, bool* complete) {
  const int K = inst.num_senders();
  *complete = true;
  switch (s) {
    case Scheme::DccA:
    case Scheme::CccA:
      return {all_in_one_plan(K)};
    case Scheme::Dcc:
    case Scheme::CccS: {
      std::vector<GroupingPlan> out;
      for (auto& part : enumerate_sender_partitions(K)) {
        if (out.size() >= max_plans) {
          *complete = false;
          break;
        }
        out.push_back(make_plan(PlanMode::SenderPartition, part, K));
      }
      return out;
    }
    case Scheme::Mdcc:
    case Scheme::CccLs: {
      auto e = enumerate_link_sender_plans(K, "default", max_plans);
      *complete = e.complete;
      return e.plans;
    }
  }
  return {};
}

struct SchemeOptions {
  FmeOptions fme;
  std::size_t max_choices = 100000;        // per-group decoding product
  std::size_t max_tuples = 100000;         // combined members per plan
  std::size_t max_plans = 10000;
  std::size_t max_oracle_members = 256;    // lifted tuple systems per symbolic plan
};

// A full decoding tuple: one choice per plan group, 1-based index.
using DecodingTuple = std::map<int, DecodingChoice>;

struct PlanReport {
  GroupingPlan plan;
  bool contributed = false;
  // Per group, the decoding choices whose region supplied a hull point.
  std::vector<std::vector<DecodingChoice>> group_choices;
};

struct SchemeResult {
  Scheme scheme = Scheme::CccA;
  std::vector<PlanReport> plans;
  Polyhedron hull;  // over R_1..R_N
  bool exhaustive = true;
  std::size_t member_count = 0;
};

namespace detail {

inline std::map<VarId, Rational> point_as_map(const std::vector<VarId>& vars,
                                              const std::vector<Rational>& p) {
  std::map<VarId, Rational> m;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (p[i] != 0) m[vars[i]] = p[i];
  return m;
}

}  // namespace detail

// Hull of the union over plans, decoding choices, and capacity splits.
// Fixed-capacity plans are combined through group hull extreme points
// (groups are independent once capacities are fixed, so the hull of the
// combined union is the coordinate-wise sum of the per-group hulls);
// the per-group hulls come from the support-function oracle over the
// lifted systems, so no per-choice elimination is needed. Symbolic
// plans take the oracle hull of the combined lifted tuple systems;
// explicit decoding tuples go through per-tuple elimination, which also
// yields the exact per-tuple regions for attribution.
inline SchemeResult scheme_region(const Instance& inst, Scheme scheme,
                                  const std::vector<GroupingPlan>& plans,
                                  const std::vector<DecodingTuple>& decoding = {},
                                  const SchemeOptions& opts = {}) {
  const Compression comp = scheme_compression(scheme);
  if (!decoding.empty() && plans.size() != 1)
    throw ParseError("explicit decoding tuples require a single explicit plan");

  SchemeResult res;
  res.scheme = scheme;
  std::vector<VarId> rate_vars;
  for (int j = 1; j <= inst.num_messages; ++j) rate_vars.push_back(VarId::message_rate(j));

  struct PlanData {
    std::vector<std::vector<Rational>> points;  // candidates over R_1..R_N
    // Tuple path: member regions + their tuples for attribution.
    std::vector<Polyhedron> members;
    std::vector<std::vector<DecodingChoice>> member_tuples;
    // Oracle path (symbolic plans without explicit tuples): points are
    // the plan hull's vertices, each with the tuple achieving it.
    bool oracle_path = false;
    std::vector<std::vector<DecodingChoice>> point_tuples;  // aligned with points
    // Product path: per-group hull vertices and the choices behind them.
    bool product_path = false;
    std::vector<std::vector<int>> group_msgs;                    // per group, pool messages
    std::vector<std::vector<std::vector<Rational>>> ext_points;  // per group
    std::vector<std::vector<DecodingChoice>> ext_choices;        // aligned with ext_points
  };
  std::vector<PlanData> data(plans.size());

  // Group hulls depend only on the sender set (not the group's index in
  // a plan), so share them across plans.
  struct CachedGroup {
    std::vector<int> msgs;  // pool messages, ascending
    std::vector<std::vector<Rational>> ext_points;
    std::vector<DecodingChoice> ext_choices;
    std::size_t num_choices = 0;
    bool complete = true;
  };
  std::map<std::vector<int>, CachedGroup> group_cache;
  auto group_hull = [&](const Group& g) -> const CachedGroup& {
    auto it = group_cache.find(g.senders);
    if (it != group_cache.end()) return it->second;
    auto en = enumerate_choices(inst, g, opts.max_choices);
    std::vector<Polyhedron> lifted;
    lifted.reserve(en.choices.size());
    for (const auto& c : en.choices) lifted.push_back(group_system(inst, g, c, comp, false));
    CachedGroup cg;
    const std::uint32_t pool = group_messages(inst, g);
    std::vector<VarId> keep;
    for (int j = 1; j <= inst.num_messages; ++j)
      if (pool & (1u << (j - 1))) {
        cg.msgs.push_back(j);
        keep.push_back(VarId::group_rate(j, g.index));
      }
    auto uh = hull_of_lifted_union(keep, lifted);
    std::map<std::vector<Rational>, std::size_t> first_achiever;
    for (std::size_t i = 0; i < uh.points.size(); ++i)
      first_achiever.emplace(uh.points[i], uh.achiever[i]);
    for (auto& p : vertices(uh.hull)) {
      cg.ext_choices.push_back(en.choices[first_achiever.at(p)]);
      cg.ext_points.push_back(std::move(p));
    }
    cg.num_choices = en.choices.size();
    cg.complete = en.complete;
    return group_cache.emplace(g.senders, std::move(cg)).first->second;
  };

  for (std::size_t pi = 0; pi < plans.size(); ++pi) {
    const auto& plan = plans[pi];
    PlanData& pd = data[pi];
    res.plans.push_back(PlanReport{plan, false, {}});
    res.plans.back().group_choices.resize(plan.groups.size());

    if (!decoding.empty()) {
      // Explicit tuples: one combined member each.
      for (const auto& tup : decoding) {
        std::vector<RegionUnion> unions(plan.groups.size());
        std::vector<DecodingChoice> per_group;
        for (std::size_t gi = 0; gi < plan.groups.size(); ++gi) {
          auto it = tup.find(static_cast<int>(gi + 1));
          if (it == tup.end())
            throw ParseError("decoding tuple missing group " + std::to_string(gi + 1));
          unions[gi].members.push_back(group_region(inst, plan.groups[gi], it->second,
                                                    comp, plan.symbolic(), opts.fme));
          per_group.push_back(it->second);
        }
        auto comb = combine_groups(inst, plan, unions, opts.fme, opts.max_tuples);
        pd.members.push_back(std::move(comb.u.members[0]));
        pd.member_tuples.push_back(std::move(per_group));
      }
    } else if (plan.symbolic()) {
      // Symbolic shares couple the groups, so the product shortcut does
      // not apply; take the oracle hull over the combined lifted tuple
      // systems (capped, since the tuple product can be huge).
      pd.oracle_path = true;
      std::vector<std::vector<DecodingChoice>> options;
      for (const auto& g : plan.groups) {
        auto en = enumerate_choices(inst, g, opts.max_choices);
        if (!en.complete) res.exhaustive = false;
        options.push_back(std::move(en.choices));
      }
      std::vector<Polyhedron> lifted;
      std::vector<std::vector<DecodingChoice>> tuples;
      std::vector<std::size_t> idx(plan.groups.size(), 0);
      for (;;) {
        if (lifted.size() == opts.max_oracle_members) {
          res.exhaustive = false;
          break;
        }
        std::vector<DecodingChoice> per_group;
        for (std::size_t gi = 0; gi < plan.groups.size(); ++gi)
          per_group.push_back(options[gi][idx[gi]]);
        lifted.push_back(tuple_system(inst, plan, per_group, comp));
        tuples.push_back(std::move(per_group));
        std::size_t gi = 0;
        while (gi < idx.size() && ++idx[gi] == options[gi].size()) idx[gi++] = 0;
        if (gi == idx.size()) break;
      }
      res.member_count += lifted.size();
      auto uh = hull_of_lifted_union(rate_vars, lifted);
      std::map<std::vector<Rational>, std::size_t> first_achiever;
      for (std::size_t i = 0; i < uh.points.size(); ++i)
        first_achiever.emplace(uh.points[i], uh.achiever[i]);
      for (auto& p : vertices(uh.hull)) {
        pd.point_tuples.push_back(tuples[first_achiever.at(p)]);
        pd.points.push_back(std::move(p));
      }
    } else {
      // Fixed capacities: hull per group, then sum extreme points.
      pd.product_path = true;
      for (const auto& g : plan.groups) {
        const CachedGroup& cg = group_hull(g);
        if (!cg.complete) res.exhaustive = false;
        pd.group_msgs.push_back(cg.msgs);
        pd.ext_points.push_back(cg.ext_points);
        pd.ext_choices.push_back(cg.ext_choices);
        res.member_count += cg.num_choices;
      }
      // Candidate hull points: sums over one extreme point per group,
      // embedded into the message-rate coordinates.
      std::vector<std::size_t> idx(plan.groups.size(), 0);
      bool overflow = false;
      for (;;) {
        if (pd.points.size() == opts.max_tuples) {
          overflow = true;
          break;
        }
        std::vector<Rational> p(rate_vars.size(), Rational(0));
        for (std::size_t gi = 0; gi < plan.groups.size(); ++gi) {
          const auto& msgs = pd.group_msgs[gi];
          const auto& gp = pd.ext_points[gi][idx[gi]];
          for (std::size_t vi = 0; vi < msgs.size(); ++vi) p[msgs[vi] - 1] += gp[vi];
        }
        pd.points.push_back(std::move(p));
        std::size_t gi = 0;
        while (gi < idx.size() && ++idx[gi] == pd.ext_points[gi].size()) idx[gi++] = 0;
        if (gi == idx.size()) break;
      }
      if (overflow) res.exhaustive = false;
      std::sort(pd.points.begin(), pd.points.end());
      pd.points.erase(std::unique(pd.points.begin(), pd.points.end()), pd.points.end());
    }

    if (!pd.product_path && !pd.oracle_path) {
      res.member_count += pd.members.size();
      for (const auto& m : pd.members) {
        auto vs = vertices(m);
        pd.points.insert(pd.points.end(), vs.begin(), vs.end());
      }
      std::sort(pd.points.begin(), pd.points.end());
      pd.points.erase(std::unique(pd.points.begin(), pd.points.end()), pd.points.end());
    }
  }

  std::vector<std::vector<Rational>> all_pts;
  for (const auto& pd : data)
    all_pts.insert(all_pts.end(), pd.points.begin(), pd.points.end());
  std::sort(all_pts.begin(), all_pts.end());
  all_pts.erase(std::unique(all_pts.begin(), all_pts.end()), all_pts.end());
  res.hull = hull_from_points(rate_vars, all_pts);

  // Attribution: every hull vertex is one of the candidate points, and
  // a candidate belongs to the plans/choices able to achieve it.
  auto hull_vs = vertices(res.hull);
  for (std::size_t pi = 0; pi < plans.size(); ++pi) {
    PlanData& pd = data[pi];
    std::set<std::vector<Rational>> mine(pd.points.begin(), pd.points.end());
    std::vector<std::vector<Rational>> hits;
    for (const auto& v : hull_vs)
      if (mine.count(v)) hits.push_back(v);
    if (hits.empty()) continue;
    res.plans[pi].contributed = true;
    if (pd.product_path) {
      for (std::size_t gi = 0; gi < pd.ext_choices.size(); ++gi) {
        auto& list = res.plans[pi].group_choices[gi];
        for (const auto& c : pd.ext_choices[gi])
          if (std::find(list.begin(), list.end(), c) == list.end()) list.push_back(c);
      }
    } else if (pd.oracle_path) {
      std::set<std::vector<Rational>> on_hull(hull_vs.begin(), hull_vs.end());
      for (std::size_t i = 0; i < pd.points.size(); ++i) {
        if (!on_hull.count(pd.points[i])) continue;
        for (std::size_t gi = 0; gi < pd.point_tuples[i].size(); ++gi) {
          auto& list = res.plans[pi].group_choices[gi];
          const auto& c = pd.point_tuples[i][gi];
          if (std::find(list.begin(), list.end(), c) == list.end()) list.push_back(c);
        }
      }
    } else {
      for (std::size_t mi = 0; mi < pd.members.size(); ++mi) {
        bool used = false;
        for (const auto& v : hits)
          if (contains_point(pd.members[mi], detail::point_as_map(rate_vars, v))) {
            used = true;
            break;
          }
        if (!used) continue;
        for (std::size_t gi = 0; gi < pd.member_tuples[mi].size(); ++gi) {
          auto& list = res.plans[pi].group_choices[gi];
          const auto& c = pd.member_tuples[mi][gi];
          if (std::find(list.begin(), list.end(), c) == list.end()) list.push_back(c);
        }
      }
    }
  }
  return res;
}

inline SchemeResult scheme_region_auto(const Instance& inst, Scheme scheme,
                                       const SchemeOptions& opts = {}) {
  bool complete = true;
  auto plans = auto_plans(inst, scheme, opts.max_plans, &complete);
  auto res = scheme_region(inst, scheme, plans, {}, opts);
  if (!complete) res.exhaustive = false;
  return res;
}

}  // namespace icrr
