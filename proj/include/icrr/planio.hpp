// Plan-file and decoding-file JSON I/O.
//
// Plan file: { "mode": "sender-partition", "groups": [[1,2],[3,4]] }.
// The mode is a grouping mode ("all-in-one", "sender-partition",
// "link-sender-partition"); scheme names are accepted as aliases and
// map to the scheme's grouping column.
//
// Decoding file: either one tuple — an object mapping group index to
// { receiver: [decoded messages] } — or an array of such tuples (the
// hull is then taken over all of them, which expresses time sharing
// between named decoding configurations).
#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "instance.hpp"
#include "schemes.hpp"

namespace icrr {

inline PlanMode parse_plan_mode(const std::string& s) {
  if (s == "all-in-one" || s == "dcc-a" || s == "ccc-a") return PlanMode::AllInOne;
  if (s == "sender-partition" || s == "dcc" || s == "ccc-s") return PlanMode::SenderPartition;
  if (s == "link-sender-partition" || s == "mdcc" || s == "ccc-ls")
    return PlanMode::LinkSenderPartition;
  throw ParseError("unknown plan mode: " + s);
}

inline GroupingPlan plan_from_json(const std::string& text, int K) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed plan JSON: ") + e.what());
  }
  try {
    PlanMode mode = parse_plan_mode(doc.at("mode").get<std::string>());
    std::vector<std::vector<int>> groups;
    for (const auto& g : doc.at("groups")) groups.push_back(g.get<std::vector<int>>());
    return make_plan(mode, std::move(groups), K);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed plan JSON: ") + e.what());
  }
}

namespace detail {

inline DecodingTuple tuple_from_json(const nlohmann::json& obj, const Instance& inst) {
  DecodingTuple tup;
  for (auto git = obj.begin(); git != obj.end(); ++git) {
    int gi = std::stoi(git.key());
    if (gi < 1) throw ParseError("decoding tuple: group index must be >= 1");
    DecodingChoice choice;
    for (auto rit = git.value().begin(); rit != git.value().end(); ++rit) {
      int j = std::stoi(rit.key());
      if (j < 1 || j > inst.num_messages)
        throw ParseError("decoding tuple: receiver index " + rit.key() + " out of range");
      choice[j] = mask_from_list(rit.value().get<std::vector<int>>(), inst.num_messages,
                                 "decoded set of receiver " + rit.key());
    }
    tup[gi] = std::move(choice);
  }
  return tup;
}

}  // namespace detail

inline std::vector<DecodingTuple> decoding_from_json(const std::string& text,
                                                     const Instance& inst) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed decoding JSON: ") + e.what());
  }
  try {
    std::vector<DecodingTuple> out;
    if (doc.is_array()) {
      for (const auto& t : doc) out.push_back(detail::tuple_from_json(t, inst));
    } else {
      out.push_back(detail::tuple_from_json(doc, inst));
    }
    if (out.empty()) throw ParseError("decoding file lists no tuples");
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed decoding JSON: ") + e.what());
  }
}

}  // namespace icrr
