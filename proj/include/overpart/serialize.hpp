#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "overpart/bijections.hpp"
#include "overpart/enumerate.hpp"

namespace overpart {

/// `n,count` with a header row naming the family.
inline std::string to_csv(const CountTable& t) {
  std::ostringstream os;
  os << "n," << family_name(t.family) << "\n";
  for (const auto& [n, c] : t.rows) os << n << "," << c.str() << "\n";
  return os.str();
}

/// `[{"n":0,"count":"1"}, ...]`, counts as decimal strings.
inline nlohmann::json to_json(const CountTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [n, c] : t.rows) rows.push_back({{"n", n}, {"count", c.str()}});
  return rows;
}

inline nlohmann::json to_json(const MapTrace& tr) {
  return {{"theorem", theorem_name(tr.theorem)}, {"sourceTag", source_name(tr.source)},
          {"branch", tr.branch},                 {"input", format(tr.input)},
          {"output", format(tr.output)},         {"targetTag", tr.target},
          {"signFlip", tr.sign_flip}};
}

inline MapTrace map_trace_from_json(const nlohmann::json& j) {
  const auto theorem = parse_theorem(j.at("theorem").get<std::string>());
  const auto source = parse_source(j.at("sourceTag").get<std::string>());
  if (!theorem) throw std::invalid_argument("unknown theorem in trace");
  if (!source) throw std::invalid_argument("unknown sourceTag in trace");
  return {*theorem,
          *source,
          j.at("branch").get<std::string>(),
          parse(j.at("input").get<std::string>()),
          parse(j.at("output").get<std::string>()),
          j.at("targetTag").get<std::string>(),
          j.at("signFlip").get<bool>()};
}

}  // namespace overpart
