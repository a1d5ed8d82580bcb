// Strongly typed variable identifiers for the rate-region systems.
//
// Four kinds of variables show up across the pipeline:
//   - message rates        R_j                      ("R3")
//   - per-group rates      R_{j,P}                  ("R3_g2")
//   - composite rates      gamma_{J,P} / gamma^{(k)}_{J,P}
//                                                   ("y{2,3}_g2", "y{2,3}_k1_g2")
//   - link-capacity splits C_{k,P}                  ("C1_g2")
// Message subsets J are kept as bitmasks (bit j-1 <=> message j), so all
// comparisons are cheap and the ordering is total and deterministic.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "rational.hpp"

namespace icrr {

enum class VarKind : int {
  MessageRate = 0,
  GroupRate = 1,
  CompositeRate = 2,
  LinkSplit = 3,
};

struct VarId {
  VarKind kind = VarKind::MessageRate;
  int msg = 0;        // message index j (1-based), rates only
  int group = 0;      // group index within a plan (1-based), 0 = n/a
  int sender = 0;     // sender index k (1-based), 0 = cooperative / n/a
  std::uint32_t subset = 0;  // composite subset J as bitmask

  static VarId message_rate(int j) { return {VarKind::MessageRate, j, 0, 0, 0}; }
  static VarId group_rate(int j, int g) { return {VarKind::GroupRate, j, g, 0, 0}; }
  static VarId composite(std::uint32_t j_mask, int g, int k = 0) {
    return {VarKind::CompositeRate, 0, g, k, j_mask};
  }
  static VarId link_split(int k, int g) { return {VarKind::LinkSplit, 0, g, k, 0}; }

  auto key() const { return std::tie(kind, msg, group, sender, subset); }
  bool operator==(const VarId& o) const { return key() == o.key(); }
  bool operator!=(const VarId& o) const { return key() != o.key(); }
  bool operator<(const VarId& o) const { return key() < o.key(); }
};

inline std::string subset_to_string(std::uint32_t mask) {
  std::string s = "{";
  bool first = true;
  for (int j = 1; j <= 32; ++j) {
    if (mask & (1u << (j - 1))) {
      if (!first) s += ",";
      s += std::to_string(j);
      first = false;
    }
  }
  return s + "}";
}

inline std::string var_name(const VarId& v) {
  std::string s;
  switch (v.kind) {
    case VarKind::MessageRate:
      return "R" + std::to_string(v.msg);
    case VarKind::GroupRate:
      return "R" + std::to_string(v.msg) + "_g" + std::to_string(v.group);
    case VarKind::CompositeRate:
      s = "y" + subset_to_string(v.subset);
      if (v.sender != 0) s += "_k" + std::to_string(v.sender);
      if (v.group != 0) s += "_g" + std::to_string(v.group);
      return s;
    case VarKind::LinkSplit:
      return "C" + std::to_string(v.sender) + "_g" + std::to_string(v.group);
  }
  return "?";
}

// Inverse of var_name; used by the region-file reader.
inline VarId parse_var_name(const std::string& name) {
  auto fail = [&]() -> VarId {
    throw ParseError("unrecognized variable name: '" + name + "'");
  };
  auto parse_int_at = [&](std::size_t& i) {
    std::size_t start = i;
    while (i < name.size() && name[i] >= '0' && name[i] <= '9') ++i;
    if (i == start) fail();
    return std::stoi(name.substr(start, i - start));
  };
  if (name.empty()) fail();
  std::size_t i = 1;
  if (name[0] == 'R') {
    int j = parse_int_at(i);
    if (j < 1) fail();
    if (i == name.size()) return VarId::message_rate(j);
    if (name[i] == '_' && i + 1 < name.size() && name[i + 1] == 'g') {
      i += 2;
      int g = parse_int_at(i);
      if (i == name.size()) return VarId::group_rate(j, g);
    }
    return fail();
  }
  if (name[0] == 'C') {
    int k = parse_int_at(i);
    if (i + 1 < name.size() && name[i] == '_' && name[i + 1] == 'g') {
      i += 2;
      int g = parse_int_at(i);
      if (i == name.size()) return VarId::link_split(k, g);
    }
    return fail();
  }
  if (name[0] == 'y') {
    if (i >= name.size() || name[i] != '{') fail();
    ++i;
    std::uint32_t mask = 0;
    while (i < name.size() && name[i] != '}') {
      int j = parse_int_at(i);
      if (j < 1 || j > 32) fail();
      mask |= 1u << (j - 1);
      if (i < name.size() && name[i] == ',') ++i;
    }
    if (i >= name.size() || name[i] != '}' || mask == 0) fail();
    ++i;
    int k = 0, g = 0;
    while (i < name.size()) {
      if (name[i] != '_' || i + 1 >= name.size()) fail();
      char tag = name[i + 1];
      i += 2;
      if (tag == 'k')
        k = parse_int_at(i);
      else if (tag == 'g')
        g = parse_int_at(i);
      else
        fail();
    }
    return VarId::composite(mask, g, k);
  }
  return fail();
}

}  // namespace icrr
