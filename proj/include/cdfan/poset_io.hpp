#pragma once

#include <fstream>
#include <set>
#include <string>

#include <json.hpp>

#include "errors.hpp"
#include "poset.hpp"

namespace cdfan {

/// Canonical JSON form: elements sorted by (rank, id), covers sorted
/// lexicographically. serialize(ingest(file)) is the identity on canonical
/// content.
inline nlohmann::ordered_json poset_to_json(const GradedPoset& p) {
  nlohmann::ordered_json j;
  j["name"] = p.name();
  j["rank"] = p.rank_n();
  j["elements"] = nlohmann::ordered_json::array();
  for (const auto& e : p.elements())
    j["elements"].push_back({{"id", e.id}, {"rank", e.rank}});
  auto covers = nlohmann::ordered_json::array();
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& [lo, hi] : p.covers())
    pairs.emplace_back(p.element(lo).id, p.element(hi).id);
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [lo, hi] : pairs) covers.push_back({lo, hi});
  j["covers"] = covers;
  return j;
}

inline GradedPoset poset_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SchemaError("top level must be an object");
  for (const char* key : {"name", "rank", "elements", "covers"})
    if (!j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  if (!j["name"].is_string()) throw SchemaError("'name' must be a string");
  if (!j["rank"].is_number_integer()) throw SchemaError("'rank' must be an integer");
  const int n = j["rank"].get<int>();
  if (n < 1) throw SchemaError("'rank' must be >= 1");
  if (n > kMaxVars - 1) throw SchemaError("'rank' exceeds the supported cap");
  if (!j["elements"].is_array() || !j["covers"].is_array())
    throw SchemaError("'elements' and 'covers' must be arrays");

  std::vector<PosetElement> elems;
  std::set<std::string> seen;
  int zero_count = 0;
  for (const auto& e : j["elements"]) {
    if (!e.is_object() || !e.contains("id") || !e.contains("rank") ||
        !e["id"].is_string() || !e["rank"].is_number_integer())
      throw SchemaError("each element must be {\"id\": str, \"rank\": int}");
    std::string id = e["id"].get<std::string>();
    int r = e["rank"].get<int>();
    if (!seen.insert(id).second) throw SchemaError("duplicate element id '" + id + "'");
    if (r < 0 || r > n)
      throw SchemaError("element '" + id + "' has rank outside 0.." + std::to_string(n));
    if (r == 0) ++zero_count;
    elems.push_back({id, r});
  }
  if (zero_count != 1) throw SchemaError("exactly one rank-0 element required");

  std::map<std::string, int> rank_of;
  for (const auto& e : elems) rank_of[e.id] = e.rank;
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      throw SchemaError("each cover must be [lowId, upId]");
    std::string lo = c[0].get<std::string>(), hi = c[1].get<std::string>();
    auto li = rank_of.find(lo), hi_it = rank_of.find(hi);
    if (li == rank_of.end()) throw SchemaError("cover references unknown id '" + lo + "'");
    if (hi_it == rank_of.end()) throw SchemaError("cover references unknown id '" + hi + "'");
    if (hi_it->second != li->second + 1)
      throw SchemaError("cover [" + lo + "," + hi + "] has a rank gap");
    covers.emplace_back(lo, hi);
  }
  return GradedPoset::build(j["name"].get<std::string>(), n, std::move(elems), covers);
}

inline GradedPoset ingest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("JSON parse error in '" + path + "': " + e.what());
  }
  return poset_from_json(j);
}

inline void serialize(const GradedPoset& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << poset_to_json(p).dump(2) << "\n";
}

} // namespace cdfan
