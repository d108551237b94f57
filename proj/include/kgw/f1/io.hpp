#pragma once

// Text and JSON forms of morphisms: "[0,2,0]:2->2" and
// {"src":2,"dst":2,"map":[0,2,0]}.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kgw/f1/morphism.hpp"

namespace kgw::f1 {

namespace detail {
inline void skip_ws(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}
inline int read_int(std::string_view s, std::size_t& pos) {
  skip_ws(s, pos);
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (start == pos) throw ParseError("expected a number at offset " + std::to_string(start) + " in '" + std::string(s) + "'");
  if (pos - start > 4) throw ParseError("number too large in '" + std::string(s) + "'");
  return std::stoi(std::string(s.substr(start, pos - start)));
}
inline void expect(std::string_view s, std::size_t& pos, std::string_view token) {
  skip_ws(s, pos);
  if (s.substr(pos, token.size()) != token)
    throw ParseError("expected '" + std::string(token) + "' at offset " + std::to_string(pos) +
                     " in '" + std::string(s) + "'");
  pos += token.size();
}
}  // namespace detail

inline Morphism parse_morphism(std::string_view text) {
  std::size_t pos = 0;
  detail::expect(text, pos, "[");
  std::vector<int> values;
  detail::skip_ws(text, pos);
  if (pos < text.size() && text[pos] != ']') {
    values.push_back(detail::read_int(text, pos));
    for (;;) {
      detail::skip_ws(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        values.push_back(detail::read_int(text, pos));
      } else {
        break;
      }
    }
  }
  detail::expect(text, pos, "]");
  detail::expect(text, pos, ":");
  const int src = detail::read_int(text, pos);
  detail::expect(text, pos, "->");
  const int dst = detail::read_int(text, pos);
  detail::skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters in '" + std::string(text) + "'");
  try {
    return Morphism(src, dst, values);
  } catch (const SizeLimit&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid morphism literal '") + std::string(text) + "': " + e.what());
  }
}

inline nlohmann::json to_json(const Morphism& f) {
  return {{"src", f.src()}, {"dst", f.dst()}, {"map", f.values()}};
}

inline Morphism morphism_from_json(const nlohmann::json& j) {
  try {
    return Morphism(j.at("src").get<int>(), j.at("dst").get<int>(), j.at("map").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("morphism JSON: ") + e.what());
  }
}

}  // namespace kgw::f1
