#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ordram/core/types.hpp"
#include "ordram/witness/forest.hpp"

namespace ordram {

enum class CertKind {
  MonoClique,
  MonoPathPower,
  MonoTightPath3,
  MonoClique3,
  MonoBlowup,
  NonIncreasingSet,
  LexicographicSet,
  CliqueChain,
  HstCopy,
  ChiForest,
  RedNet,
  LabelMonotonePath,
};

inline constexpr std::array<std::pair<CertKind, std::string_view>, 12> kCertKindNames{{
    {CertKind::MonoClique, "MonoClique"},
    {CertKind::MonoPathPower, "MonoPathPower"},
    {CertKind::MonoTightPath3, "MonoTightPath3"},
    {CertKind::MonoClique3, "MonoClique3"},
    {CertKind::MonoBlowup, "MonoBlowup"},
    {CertKind::NonIncreasingSet, "NonIncreasingSet"},
    {CertKind::LexicographicSet, "LexicographicSet"},
    {CertKind::CliqueChain, "CliqueChain"},
    {CertKind::HstCopy, "HstCopy"},
    {CertKind::ChiForest, "ChiForest"},
    {CertKind::RedNet, "RedNet"},
    {CertKind::LabelMonotonePath, "LabelMonotonePath"},
}};

inline std::string_view to_string(CertKind k) {
  for (auto [kind, name] : kCertKindNames)
    if (kind == k) return name;
  return "?";
}

inline CertKind cert_kind_from_string(std::string_view s) {
  for (auto [kind, name] : kCertKindNames)
    if (name == s) return kind;
  throw ParseError("unknown certificate kind '" + std::string(s) + "'");
}

struct LexAux {
  bool forward = true;             // chi(x_i, x_j) = c_i; otherwise c_{j-1}
  std::vector<int> colors;         // c_1..c_{s-1}
  bool nonincreasing_colors = false;
  friend bool operator==(const LexAux&, const LexAux&) = default;
};

struct ChainAux {
  std::vector<VertexList> cliques;
  friend bool operator==(const ChainAux&, const ChainAux&) = default;
};

/// x_1 < ... < x_s = y_1 < ... < y_t; `split` is s.
struct HstAux {
  int split = 0;
  friend bool operator==(const HstAux&, const HstAux&) = default;
};

struct BlowupAux {
  std::vector<VertexList> groups;
  friend bool operator==(const BlowupAux&, const BlowupAux&) = default;
};

struct ForestAux {
  OrderedForest forest;
  friend bool operator==(const ForestAux&, const ForestAux&) = default;
};

struct RedNetAux {
  OrderedForest forest;
  std::map<Vertex, VertexList> sets;  // node v -> X_v
  friend bool operator==(const RedNetAux&, const RedNetAux&) = default;
};

enum class Monotonicity { NonIncreasing, Increasing };

struct PathAux {
  Monotonicity monotonicity = Monotonicity::NonIncreasing;
  friend bool operator==(const PathAux&, const PathAux&) = default;
};

using Aux = std::variant<std::monostate, LexAux, ChainAux, HstAux, BlowupAux, ForestAux, RedNetAux, PathAux>;

/// A witness plus the parameters needed to re-check it.
struct Certificate {
  CertKind kind = CertKind::MonoClique;
  std::optional<Color> color;
  std::map<std::string, std::int64_t> params;
  VertexList vertices;
  Aux aux;
  std::string route;  // which branch of the extractor produced it; informational

  std::int64_t param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw std::invalid_argument("certificate lacks parameter '" + key + "'");
    return it->second;
  }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

namespace detail {

inline nlohmann::json forest_to_json(const OrderedForest& f) {
  auto arr = nlohmann::json::array();
  for (auto [v, p] : f.parent_map()) arr.push_back({v, p});
  return arr;
}

inline OrderedForest forest_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("forest must be an array of [node, parent]");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw ParseError("forest entry must be [node, parent]");
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  try {
    return OrderedForest::from_edges(edges);
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
}

inline std::vector<VertexList> lists_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("expected an array of vertex lists");
  return j.get<std::vector<VertexList>>();
}

}  // namespace detail

inline nlohmann::json to_json(const Certificate& c) {
  using nlohmann::json;
  json aux = json::object();
  std::visit(
      [&](const auto& a) {
        using A = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<A, LexAux>) {
          aux["direction"] = a.forward ? "forward" : "backward";
          aux["colors"] = a.colors;
          aux["nonincreasing_colors"] = a.nonincreasing_colors;
        } else if constexpr (std::is_same_v<A, ChainAux>) {
          aux["cliques"] = a.cliques;
        } else if constexpr (std::is_same_v<A, HstAux>) {
          aux["split"] = a.split;
        } else if constexpr (std::is_same_v<A, BlowupAux>) {
          aux["groups"] = a.groups;
        } else if constexpr (std::is_same_v<A, ForestAux>) {
          aux["forest"] = detail::forest_to_json(a.forest);
        } else if constexpr (std::is_same_v<A, RedNetAux>) {
          aux["forest"] = detail::forest_to_json(a.forest);
          json sets = json::array();
          for (const auto& [v, xs] : a.sets) sets.push_back({{"node", v}, {"set", xs}});
          aux["sets"] = sets;
        } else if constexpr (std::is_same_v<A, PathAux>) {
          aux["monotonicity"] = a.monotonicity == Monotonicity::NonIncreasing ? "nonincreasing" : "increasing";
        }
      },
      c.aux);
  if (!c.route.empty()) aux["route"] = c.route;
  json j;
  j["kind"] = std::string(to_string(c.kind));
  j["params"] = c.params;
  j["vertices"] = c.vertices;
  j["color"] = c.color ? json(std::string(to_string(*c.color))) : json(nullptr);
  j["aux"] = aux;
  return j;
}

inline std::string serialize(const Certificate& c) { return to_json(c).dump(2) + "\n"; }

inline Certificate certificate_from_json(const nlohmann::json& j) {
  try {
    Certificate c;
    c.kind = cert_kind_from_string(j.at("kind").get<std::string>());
    c.params = j.at("params").get<std::map<std::string, std::int64_t>>();
    c.vertices = j.at("vertices").get<VertexList>();
    if (!j.at("color").is_null()) c.color = color_from_string(j.at("color").get<std::string>());
    const auto& aux = j.at("aux");
    if (!aux.is_object()) throw ParseError("aux must be an object");
    if (aux.contains("route")) c.route = aux.at("route").get<std::string>();
    switch (c.kind) {
      case CertKind::LexicographicSet: {
        LexAux a;
        const auto dir = aux.at("direction").get<std::string>();
        if (dir != "forward" && dir != "backward") throw ParseError("direction must be forward or backward");
        a.forward = dir == "forward";
        a.colors = aux.at("colors").get<std::vector<int>>();
        a.nonincreasing_colors = aux.at("nonincreasing_colors").get<bool>();
        c.aux = a;
        break;
      }
      case CertKind::CliqueChain: c.aux = ChainAux{detail::lists_from_json(aux.at("cliques"))}; break;
      case CertKind::HstCopy: c.aux = HstAux{aux.at("split").get<int>()}; break;
      case CertKind::MonoBlowup: c.aux = BlowupAux{detail::lists_from_json(aux.at("groups"))}; break;
      case CertKind::ChiForest: c.aux = ForestAux{detail::forest_from_json(aux.at("forest"))}; break;
      case CertKind::RedNet: {
        RedNetAux a;
        a.forest = detail::forest_from_json(aux.at("forest"));
        for (const auto& e : aux.at("sets")) a.sets[e.at("node").get<Vertex>()] = e.at("set").get<VertexList>();
        c.aux = a;
        break;
      }
      case CertKind::LabelMonotonePath: {
        const auto m = aux.at("monotonicity").get<std::string>();
        if (m != "nonincreasing" && m != "increasing") throw ParseError("monotonicity must be nonincreasing or increasing");
        c.aux = PathAux{m == "nonincreasing" ? Monotonicity::NonIncreasing : Monotonicity::Increasing};
        break;
      }
      default: break;
    }
    return c;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed certificate: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("malformed certificate: ") + ex.what());
  }
}

inline Certificate parse_certificate(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("certificate is not valid JSON: ") + ex.what());
  }
  return certificate_from_json(j);
}

}  // namespace ordram
