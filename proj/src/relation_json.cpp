#include "xdescent/relation_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "xdescent/errors.hpp"

namespace xdescent {

namespace {

using nlohmann::json;

RelationSpec parse_node(const json& j);

std::vector<RelationSpec> parse_parts(const json& j) {
  if (!j.contains("parts") || !j["parts"].is_array()) {
    throw ParseError("relation: combinator needs a \"parts\" array");
  }
  // An empty union is the empty relation; an empty intersection holds all
  // distinct pairs.
  std::vector<RelationSpec> parts;
  for (const auto& part : j["parts"]) parts.push_back(parse_node(part));
  return parts;
}

RelationSpec parse_node(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError("relation: every node needs a string \"kind\"");
  }
  const std::string kind = j["kind"].get<std::string>();

  if (kind == "greater") return RelationSpec::greater();
  if (kind == "less") return RelationSpec::less();

  if (kind == "pairs") {
    if (!j.contains("pairs") || !j["pairs"].is_array()) {
      throw ParseError("relation: \"pairs\" needs an array of [a,b] pairs");
    }
    std::set<std::pair<int, int>> pairs;
    for (const auto& entry : j["pairs"]) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
          !entry[1].is_number_integer()) {
        throw ParseError("relation: each pair must be [a,b] with integers");
      }
      const int a = entry[0].get<int>();
      const int b = entry[1].get<int>();
      if (a < 1 || b < 1 || a == b) {
        throw ParseError("relation: pairs must be distinct positive integers");
      }
      pairs.insert({a, b});
    }
    return RelationSpec::finite_pairs(std::move(pairs));
  }

  if (kind == "diff") {
    if (!j.contains("deltas") || !j["deltas"].is_array()) {
      throw ParseError("relation: \"diff\" needs a \"deltas\" array");
    }
    std::set<long long> deltas;
    for (const auto& d : j["deltas"]) {
      if (!d.is_number_integer()) throw ParseError("relation: deltas must be integers");
      const long long value = d.get<long long>();
      if (value == 0) throw ParseError("relation: deltas must be nonzero");
      deltas.insert(value);
    }
    return RelationSpec::difference_set(std::move(deltas));
  }

  if (kind == "periodic") {
    if (!j.contains("m") || !j["m"].is_number_integer()) {
      throw ParseError("relation: \"periodic\" needs integer \"m\"");
    }
    const int m = j["m"].get<int>();
    if (m < 1) throw ParseError("relation: modulus must be positive");
    if (!j.contains("f") || !j["f"].is_array() || static_cast<int>(j["f"].size()) != m) {
      throw ParseError("relation: \"f\" must be an array of m rows");
    }
    std::vector<std::vector<int>> rows;
    for (const auto& row : j["f"]) {
      if (!row.is_array() || static_cast<int>(row.size()) != m) {
        throw ParseError("relation: each row of \"f\" must have m entries");
      }
      std::vector<int> cells;
      for (const auto& cell : row) {
        if (!cell.is_number_integer()) throw ParseError("relation: f entries must be 0/1");
        const int v = cell.get<int>();
        if (v != 0 && v != 1) throw ParseError("relation: f entries must be 0/1");
        cells.push_back(v);
      }
      rows.push_back(std::move(cells));
    }
    return RelationSpec::periodic(ResidueMatrix(m, rows));
  }

  if (kind == "union") return RelationSpec::union_of(parse_parts(j));
  if (kind == "intersection") return RelationSpec::intersection_of(parse_parts(j));

  if (kind == "complement") {
    if (!j.contains("of")) throw ParseError("relation: \"complement\" needs \"of\"");
    return RelationSpec::complement_of(parse_node(j["of"]));
  }

  throw ParseError("relation: unknown kind \"" + kind + "\"");
}

json to_json_node(const RelationSpec& spec) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RelationSpec::FinitePairs>) {
          json pairs = json::array();
          for (const auto& [a, b] : v.pairs) pairs.push_back({a, b});
          return {{"kind", "pairs"}, {"pairs", pairs}};
        } else if constexpr (std::is_same_v<T, RelationSpec::Greater>) {
          return {{"kind", "greater"}};
        } else if constexpr (std::is_same_v<T, RelationSpec::Less>) {
          return {{"kind", "less"}};
        } else if constexpr (std::is_same_v<T, RelationSpec::DifferenceSet>) {
          return {{"kind", "diff"}, {"deltas", v.deltas}};
        } else if constexpr (std::is_same_v<T, RelationSpec::PeriodicMod>) {
          const int m = v.f.modulus();
          json rows = json::array();
          for (int r = 0; r < m; ++r) {
            json row = json::array();
            for (int s = 0; s < m; ++s) row.push_back(v.f.at(r, s) ? 1 : 0);
            rows.push_back(row);
          }
          return {{"kind", "periodic"}, {"m", m}, {"f", rows}};
        } else if constexpr (std::is_same_v<T, RelationSpec::Union>) {
          json parts = json::array();
          for (const auto& part : v.parts) parts.push_back(to_json_node(part));
          return {{"kind", "union"}, {"parts", parts}};
        } else if constexpr (std::is_same_v<T, RelationSpec::Intersection>) {
          json parts = json::array();
          for (const auto& part : v.parts) parts.push_back(to_json_node(part));
          return {{"kind", "intersection"}, {"parts", parts}};
        } else {
          return {{"kind", "complement"}, {"of", to_json_node(v.of.front())}};
        }
      },
      spec.node());
}

}  // namespace

RelationSpec relation_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("relation: invalid JSON: ") + e.what());
  }
  try {
    return parse_node(j);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("relation: ") + e.what());
  }
}

RelationSpec relation_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open relation file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return relation_from_json(buffer.str());
}

std::string relation_to_json(const RelationSpec& spec) { return to_json_node(spec).dump(); }

}  // namespace xdescent
