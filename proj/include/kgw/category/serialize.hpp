#pragma once

// JSON and Graphviz DOT forms of finite categories.

#include <sstream>
#include <string>

#include <json.hpp>

#include "kgw/category/finite_category.hpp"
#include "kgw/category/homotopy.hpp"

namespace kgw::cat {

// {objects, homs:{"src,dst":[ids]}, comp:{"g,f":id}} with keys sorted, plus
// the identities and morphism table needed to rebuild the category.
inline nlohmann::json to_json(const FiniteCategory& c) {
  nlohmann::json j;
  j["objects"] = nlohmann::json::array();
  for (Id a = 0; a < c.num_objects(); ++a) j["objects"].push_back(c.object_label(a));
  j["morphisms"] = nlohmann::json::array();
  for (Id f = 0; f < c.num_morphisms(); ++f)
    j["morphisms"].push_back({{"src", c.src(f)}, {"dst", c.dst(f)}, {"label", c.morphism_label(f)}});
  j["identities"] = nlohmann::json::array();
  for (Id a = 0; a < c.num_objects(); ++a) j["identities"].push_back(c.identity(a));
  j["homs"] = nlohmann::json::object();
  for (Id a = 0; a < c.num_objects(); ++a)
    for (Id b = 0; b < c.num_objects(); ++b)
      if (!c.homs(a, b).empty()) j["homs"][std::to_string(a) + "," + std::to_string(b)] = c.homs(a, b);
  j["comp"] = nlohmann::json::object();
  c.for_each_composable([&](Id g, Id f) {
    j["comp"][std::to_string(g) + "," + std::to_string(f)] = c.compose(g, f);
  });
  return j;
}

inline FiniteCategory category_from_json(const nlohmann::json& j) {
  try {
    CategoryBuilder b;
    for (const auto& o : j.at("objects")) b.add_object(o.get<std::string>());
    for (const auto& m : j.at("morphisms"))
      b.add_morphism(m.at("src").get<Id>(), m.at("dst").get<Id>(), m.at("label").get<std::string>());
    const auto& ids = j.at("identities");
    for (Id a = 0; a < ids.size(); ++a) b.set_identity(a, ids[a].get<Id>());
    for (const auto& [key, val] : j.at("comp").items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) throw ParseError("composition key '" + key + "'");
      b.set_composite(static_cast<Id>(std::stoul(key.substr(0, comma))),
                      static_cast<Id>(std::stoul(key.substr(comma + 1))), val.get<Id>());
    }
    FiniteCategory c = std::move(b).build();
    for (const auto& [key, val] : j.at("homs").items()) {
      const auto comma = key.find(',');
      const Id a = static_cast<Id>(std::stoul(key.substr(0, comma)));
      const Id d = static_cast<Id>(std::stoul(key.substr(comma + 1)));
      if (val.get<std::vector<Id>>() != c.homs(a, d)) throw ParseError("hom table disagrees with morphisms at " + key);
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("category JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw ParseError(std::string("category JSON: ") + e.what());
  }
}

namespace detail {
inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}
}  // namespace detail

// One cluster per connected component; identities are omitted.
inline std::string to_dot(const FiniteCategory& c, const std::string& name = "C") {
  const Components comps = pi0(c);
  std::ostringstream os;
  os << "digraph \"" << detail::dot_escape(name) << "\" {\n";
  for (std::size_t k = 0; k < comps.size(); ++k) {
    os << "  subgraph cluster_" << k << " {\n";
    for (Id a : comps.members[k])
      os << "    n" << a << " [label=\"" << detail::dot_escape(c.object_label(a)) << "\"];\n";
    os << "  }\n";
  }
  for (Id f = 0; f < c.num_morphisms(); ++f) {
    if (c.is_identity(f)) continue;
    os << "  n" << c.src(f) << " -> n" << c.dst(f) << " [label=\"" << detail::dot_escape(c.morphism_label(f))
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace kgw::cat
