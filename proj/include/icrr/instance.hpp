// Multi-sender unicast index-coding instances: data model, JSON
// parsing/serialization with validation, and the derived receiver
// side-information digraph.
//
// Message and sender indices are 1-based at every interface, matching
// the usual convention for these problems. Message subsets are held as
// bitmasks (bit j-1 <=> message j).
#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "rational.hpp"

namespace icrr {

using json = nlohmann::json;

inline std::uint32_t mask_from_list(const std::vector<int>& xs, int n,
                                    const std::string& what) {
  std::uint32_t m = 0;
  for (int x : xs) {
    if (x < 1 || x > n)
      throw ParseError(what + ": message index " + std::to_string(x) +
                       " out of range [1," + std::to_string(n) + "]");
    m |= 1u << (x - 1);
  }
  return m;
}

inline std::vector<int> list_from_mask(std::uint32_t m) {
  std::vector<int> xs;
  for (int j = 1; j <= 32; ++j)
    if (m & (1u << (j - 1))) xs.push_back(j);
  return xs;
}

struct Sender {
  std::uint32_t messages = 0;  // S_k
  Rational capacity = 0;       // C_k, bcu
};

struct Instance {
  int num_messages = 0;             // N
  std::vector<Sender> senders;      // K entries, order preserved from file
  std::vector<std::uint32_t> side_info;  // A_j, index j-1

  int num_senders() const { return static_cast<int>(senders.size()); }

  std::uint32_t all_messages() const {
    return num_messages == 32 ? 0xffffffffu : ((1u << num_messages) - 1);
  }

  void validate() const {
    if (num_messages < 1 || num_messages > 31)
      throw ParseError("num_messages must be in [1,31]");
    if (senders.empty() || senders.size() > (std::size_t(1) << num_messages) - 1)
      throw ParseError("sender count must be in [1, 2^N - 1]");
    std::uint32_t covered = 0;
    for (std::size_t a = 0; a < senders.size(); ++a) {
      if (senders[a].messages == 0)
        throw ParseError("sender " + std::to_string(a + 1) + ": empty message set");
      if (senders[a].capacity <= 0)
        throw ParseError("sender " + std::to_string(a + 1) +
                         ": capacity must be strictly positive");
      for (std::size_t b = 0; b < a; ++b)
        if (senders[a].messages == senders[b].messages)
          throw ParseError("duplicate sender message set (senders " +
                           std::to_string(b + 1) + " and " + std::to_string(a + 1) + ")");
      covered |= senders[a].messages;
    }
    for (int j = 1; j <= num_messages; ++j)
      if (!(covered & (1u << (j - 1))))
        throw ParseError("uncovered message index " + std::to_string(j));
    if (side_info.size() != static_cast<std::size_t>(num_messages))
      throw ParseError("side_info must list every receiver 1..N");
    for (int j = 1; j <= num_messages; ++j)
      if (side_info[j - 1] & (1u << (j - 1)))
        throw ParseError("side information of receiver " + std::to_string(j) +
                         " contains its own message");
  }
};

inline Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed instance JSON: ") + e.what());
  }
  Instance inst;
  try {
    inst.num_messages = doc.at("num_messages").get<int>();
    for (const auto& s : doc.at("senders")) {
      Sender sd;
      sd.messages = mask_from_list(s.at("messages").get<std::vector<int>>(),
                                   inst.num_messages, "sender messages");
      sd.capacity = parse_rational(s.at("capacity").get<std::string>());
      inst.senders.push_back(std::move(sd));
    }
    inst.side_info.assign(inst.num_messages, 0);
    const auto& si = doc.at("side_info");
    if (si.size() != static_cast<std::size_t>(inst.num_messages))
      throw ParseError("side_info must list every receiver 1..N");
    for (auto it = si.begin(); it != si.end(); ++it) {
      int j = std::stoi(it.key());
      if (j < 1 || j > inst.num_messages)
        throw ParseError("side_info receiver index " + it.key() + " out of range");
      inst.side_info[j - 1] =
          mask_from_list(it.value().get<std::vector<int>>(), inst.num_messages,
                         "side_info of receiver " + it.key());
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed instance JSON: ") + e.what());
  }
  inst.validate();
  return inst;
}

inline std::string serialize_instance(const Instance& inst) {
  json doc;
  doc["num_messages"] = inst.num_messages;
  doc["senders"] = json::array();
  for (const auto& s : inst.senders)
    doc["senders"].push_back(
        {{"messages", list_from_mask(s.messages)},
         {"capacity", rational_to_string(s.capacity)}});
  json si = json::object();
  for (int j = 1; j <= inst.num_messages; ++j)
    si[std::to_string(j)] = list_from_mask(inst.side_info[j - 1]);
  doc["side_info"] = si;
  return doc.dump(2) + "\n";
}

// Arc i -> j iff receiver i holds message j as side information.
struct SideInfoDigraph {
  int num_vertices = 0;
  std::vector<std::uint32_t> out;  // out[i-1] = successors of vertex i

  bool has_arc(int i, int j) const { return out[i - 1] & (1u << (j - 1)); }
};

inline SideInfoDigraph derive_digraph(const Instance& inst) {
  SideInfoDigraph g;
  g.num_vertices = inst.num_messages;
  g.out = inst.side_info;
  return g;
}

}  // namespace icrr
