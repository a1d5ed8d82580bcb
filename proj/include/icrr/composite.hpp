// Composite-coding achievable-rate systems, per sender group.
//
// For a group P of senders with message pool S_P (union of the group's
// sender sets), the lifted system lives over
//   - per-group message rates R_{j,P} for j in S_P,
//   - composite rates: cooperative  y_J   for nonempty J inside some S_k,
//                      non-coop     y^k_J for nonempty J subset of S_k,
//   - optionally symbolic capacity shares C_{k,P} (link-split mode).
//
// Decoding constraints (one family per receiver j in S_P, for a chosen
// decoded set D_j with j in D_j, D_j disjoint from the side info):
//   for every nonempty T subset of D_j:
//     sum_{i in T} R_{i,P} <= sum of composite rates y whose subset J
//     fits inside D_j union A_{j,P} and meets T.
//
// Link constraints bound the composite rates a receiver cannot strip
// using side information by the capacities involved:
//   non-coop, per (j, k):  sum_{J subset S_k, J not inside A_j} y^k_J <= C_k
//   cooperative, per (j, nonempty Ktilde subset P):
//     sum over J carried only by senders in Ktilde, J not inside A_j,
//     of y_J  <=  sum_{k in Ktilde} C_k.
// Families implied by another (smaller lhs support, rhs at least as
// large) are pruned, which is sound because all variables are >= 0.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "fme.hpp"
#include "instance.hpp"

namespace icrr {

enum class Compression { Cooperative, NonCooperative };

struct Group {
  std::vector<int> senders;  // 1-based sender indices, strictly increasing
  int index = 1;             // 1-based position within the plan
};

inline std::uint32_t group_messages(const Instance& inst, const Group& g) {
  std::uint32_t m = 0;
  for (int k : g.senders) m |= inst.senders[k - 1].messages;
  return m;
}

// Decoded message set per receiver in the group's pool: j -> D_j mask.
using DecodingChoice = std::map<int, std::uint32_t>;

inline void validate_choice(const Instance& inst, const Group& g,
                            const DecodingChoice& choice) {
  const std::uint32_t pool = group_messages(inst, g);
  for (int j = 1; j <= inst.num_messages; ++j) {
    const std::uint32_t jb = 1u << (j - 1);
    if (!(pool & jb)) {
      if (choice.count(j))
        throw ParseError("decoding choice names receiver " + std::to_string(j) +
                         " outside the group pool");
      continue;
    }
    auto it = choice.find(j);
    if (it == choice.end())
      throw ParseError("decoding choice missing receiver " + std::to_string(j));
    const std::uint32_t allowed = pool & ~inst.side_info[j - 1];
    if (!(it->second & jb) || (it->second & ~allowed))
      throw ParseError("invalid decoded set for receiver " + std::to_string(j));
  }
}

// Composite-rate variables of the group, canonically sorted.
inline std::vector<VarId> composite_vars(const Instance& inst, const Group& g,
                                         Compression comp) {
  std::set<VarId> vars;
  for (int k : g.senders) {
    const std::uint32_t sk = inst.senders[k - 1].messages;
    for (std::uint32_t j = sk; j != 0; j = (j - 1) & sk)
      vars.insert(VarId::composite(j, g.index,
                                   comp == Compression::NonCooperative ? k : 0));
  }
  return {vars.begin(), vars.end()};
}

inline std::vector<LinearInequality> decoding_constraints(const Instance& inst,
                                                          const Group& g,
                                                          const DecodingChoice& choice,
                                                          Compression comp) {
  validate_choice(inst, g, choice);
  const auto gammas = composite_vars(inst, g, comp);
  std::vector<LinearInequality> out;
  const std::uint32_t pool = group_messages(inst, g);
  for (int j = 1; j <= inst.num_messages; ++j) {
    if (!(pool & (1u << (j - 1)))) continue;
    const std::uint32_t dj = choice.at(j);
    const std::uint32_t known = dj | (inst.side_info[j - 1] & pool);
    for (std::uint32_t t = dj; t != 0; t = (t - 1) & dj) {
      LinearInequality q;
      for (int i = 1; i <= inst.num_messages; ++i)
        if (t & (1u << (i - 1))) q.coeffs[VarId::group_rate(i, g.index)] = 1;
      for (const auto& v : gammas)
        if (!(v.subset & ~known) && (v.subset & t)) q.coeffs[v] += -1;
      q.rhs = 0;
      out.push_back(std::move(q));
    }
  }
  return out;
}

namespace detail {

// One link-constraint candidate before pruning: the lhs composite-rate
// support plus its rhs, which is either a fixed capacity sum or a set
// of capacity-share variables (encoded by the sender subset ktilde).
struct LinkCandidate {
  std::vector<VarId> lhs;   // sorted support
  Rational rhs_fixed = 0;   // capacity sum (fixed-capacity mode)
  std::uint32_t ktilde = 0; // sender-position mask (symbolic mode)
};

// A implied by B: smaller-or-equal lhs support and rhs at least as
// large. With symbolic shares the rhs comparison becomes superset of
// the share set (shares are >= 0).
inline bool link_dominated(const LinkCandidate& a, const LinkCandidate& b, bool symbolic) {
  if (!std::includes(b.lhs.begin(), b.lhs.end(), a.lhs.begin(), a.lhs.end())) return false;
  if (symbolic) {
    if ((b.ktilde & ~a.ktilde) != 0) return false;
    return a.lhs != b.lhs || a.ktilde != b.ktilde;
  }
  if (a.rhs_fixed < b.rhs_fixed) return false;
  return a.lhs != b.lhs || a.rhs_fixed != b.rhs_fixed;
}

inline void prune_link_candidates(std::vector<LinkCandidate>& cands, bool symbolic) {
  std::sort(cands.begin(), cands.end(), [](const LinkCandidate& x, const LinkCandidate& y) {
    return std::tie(x.lhs, x.rhs_fixed, x.ktilde) < std::tie(y.lhs, y.rhs_fixed, y.ktilde);
  });
  cands.erase(std::unique(cands.begin(), cands.end(),
                          [](const LinkCandidate& x, const LinkCandidate& y) {
                            return x.lhs == y.lhs && x.rhs_fixed == y.rhs_fixed &&
                                   x.ktilde == y.ktilde;
                          }),
              cands.end());
  std::vector<LinkCandidate> kept;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < cands.size() && !dominated; ++j)
      if (j != i && link_dominated(cands[i], cands[j], symbolic)) dominated = true;
    if (!dominated) kept.push_back(cands[i]);
  }
  cands = std::move(kept);
}

}  // namespace detail

inline std::vector<LinearInequality> link_constraints(const Instance& inst, const Group& g,
                                                      Compression comp, bool symbolic) {
  const std::uint32_t pool = group_messages(inst, g);
  std::vector<detail::LinkCandidate> cands;

  if (comp == Compression::NonCooperative) {
    for (std::size_t pos = 0; pos < g.senders.size(); ++pos) {
      const int k = g.senders[pos];
      const std::uint32_t sk = inst.senders[k - 1].messages;
      for (int j = 1; j <= inst.num_messages; ++j) {
        if (!(pool & (1u << (j - 1)))) continue;
        detail::LinkCandidate c;
        for (std::uint32_t J = sk; J != 0; J = (J - 1) & sk)
          if (J & ~inst.side_info[j - 1])
            c.lhs.push_back(VarId::composite(J, g.index, k));
        if (c.lhs.empty()) continue;
        std::sort(c.lhs.begin(), c.lhs.end());
        c.rhs_fixed = inst.senders[k - 1].capacity;
        c.ktilde = 1u << pos;
        cands.push_back(std::move(c));
      }
    }
  } else {
    const int gk = static_cast<int>(g.senders.size());
    if (gk > 20) throw LimitError("link_constraints: group too large");
    // Universe of composite subsets, each with the mask of group senders
    // able to carry it.
    std::vector<std::uint32_t> Js;
    std::map<std::uint32_t, std::uint32_t> cover;
    for (int pos = 0; pos < gk; ++pos) {
      const std::uint32_t sk = inst.senders[g.senders[pos] - 1].messages;
      for (std::uint32_t J = sk; J != 0; J = (J - 1) & sk) cover[J] |= 1u << pos;
    }
    for (const auto& [J, cov] : cover) Js.push_back(J);

    for (int j = 1; j <= inst.num_messages; ++j) {
      if (!(pool & (1u << (j - 1)))) continue;
      const std::uint32_t aj = inst.side_info[j - 1];
      for (std::uint32_t kt = 1; kt < (1u << gk); ++kt) {
        // lhs support: subsets carried only by senders inside ktilde.
        // Only keep ktilde equal to the union of those carrier sets:
        // any larger ktilde yields the same lhs with a weaker rhs.
        std::uint32_t used = 0;
        detail::LinkCandidate c;
        for (std::uint32_t J : Js) {
          const std::uint32_t cov = cover[J];
          if (cov & ~kt) continue;
          used |= cov;
          if (J & ~aj) c.lhs.push_back(VarId::composite(J, g.index, 0));
        }
        if (used != kt || c.lhs.empty()) continue;
        std::sort(c.lhs.begin(), c.lhs.end());
        c.ktilde = kt;
        for (int pos = 0; pos < gk; ++pos)
          if (kt & (1u << pos)) c.rhs_fixed += inst.senders[g.senders[pos] - 1].capacity;
        cands.push_back(std::move(c));
      }
    }
  }

  detail::prune_link_candidates(cands, symbolic);

  std::vector<LinearInequality> out;
  for (auto& c : cands) {
    LinearInequality q;
    for (const auto& v : c.lhs) q.coeffs[v] = 1;
    if (symbolic) {
      for (int pos = 0; pos < static_cast<int>(g.senders.size()); ++pos)
        if (c.ktilde & (1u << pos))
          q.coeffs[VarId::link_split(g.senders[pos], g.index)] = -1;
      q.rhs = 0;
    } else {
      q.rhs = c.rhs_fixed;
    }
    out.push_back(std::move(q));
  }
  return out;
}

// Full lifted system of the group for one decoding choice.
inline Polyhedron group_system(const Instance& inst, const Group& g,
                               const DecodingChoice& choice, Compression comp,
                               bool symbolic) {
  std::vector<VarId> vars = composite_vars(inst, g, comp);
  const std::uint32_t pool = group_messages(inst, g);
  for (int j = 1; j <= inst.num_messages; ++j)
    if (pool & (1u << (j - 1))) vars.push_back(VarId::group_rate(j, g.index));
  if (symbolic)
    for (int k : g.senders) vars.push_back(VarId::link_split(k, g.index));
  Polyhedron poly(std::move(vars));
  poly.add_nonnegativity();
  for (auto& q : decoding_constraints(inst, g, choice, comp)) poly.add(std::move(q));
  for (auto& q : link_constraints(inst, g, comp, symbolic)) poly.add(std::move(q));
  return poly;
}

// Composite rates eliminated: the group's rate region for one decoding
// choice, over R_{j,P} (plus C_{k,P} in symbolic mode).
inline Polyhedron group_region(const Instance& inst, const Group& g,
                               const DecodingChoice& choice, Compression comp,
                               bool symbolic, const FmeOptions& opts = {}) {
  Polyhedron sys = group_system(inst, g, choice, comp, symbolic);
  std::set<VarId> drop;
  for (const auto& v : sys.variables())
    if (v.kind == VarKind::CompositeRate) drop.insert(v);
  return fme_eliminate(sys, drop, opts);
}

// All admissible decoded sets of one receiver, ascending by mask.
inline std::vector<std::uint32_t> receiver_choices(const Instance& inst, const Group& g,
                                                   int j) {
  const std::uint32_t pool = group_messages(inst, g);
  const std::uint32_t jb = 1u << (j - 1);
  const std::uint32_t free = (pool & ~inst.side_info[j - 1]) & ~jb;
  std::vector<std::uint32_t> out;
  std::uint32_t sub = free;
  for (;;) {
    out.push_back(sub | jb);
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Product of the per-receiver options, truncated at the cap; `complete`
// reports whether the full product fit.
struct ChoiceEnumeration {
  std::vector<DecodingChoice> choices;
  bool complete = true;
};

inline ChoiceEnumeration enumerate_choices(const Instance& inst, const Group& g,
                                           std::size_t max_choices = 100000) {
  const std::uint32_t pool = group_messages(inst, g);
  std::vector<int> receivers;
  std::vector<std::vector<std::uint32_t>> options;
  for (int j = 1; j <= inst.num_messages; ++j) {
    if (!(pool & (1u << (j - 1)))) continue;
    receivers.push_back(j);
    options.push_back(receiver_choices(inst, g, j));
  }
  ChoiceEnumeration out;
  std::vector<std::size_t> idx(receivers.size(), 0);
  for (;;) {
    if (out.choices.size() == max_choices) {
      out.complete = false;
      break;
    }
    DecodingChoice c;
    for (std::size_t i = 0; i < receivers.size(); ++i) c[receivers[i]] = options[i][idx[i]];
    out.choices.push_back(std::move(c));
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == options[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return out;
}

// Union of the group regions over a set of decoding choices (all
// admissible ones when `choices` is empty). Members align with the
// returned choice list.
struct GroupUnion {
  RegionUnion u;
  std::vector<DecodingChoice> choices;
  bool complete = true;
};

inline GroupUnion group_region_union(const Instance& inst, const Group& g,
                                     Compression comp, bool symbolic,
                                     const std::vector<DecodingChoice>& choices = {},
                                     const FmeOptions& opts = {},
                                     std::size_t max_choices = 100000) {
  GroupUnion out;
  if (choices.empty()) {
    auto e = enumerate_choices(inst, g, max_choices);
    out.choices = std::move(e.choices);
    out.complete = e.complete;
  } else {
    out.choices = choices;
  }
  for (const auto& c : out.choices)
    out.u.members.push_back(group_region(inst, g, c, comp, symbolic, opts));
  return out;
}

}  // namespace icrr
