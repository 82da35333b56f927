#pragma once

// JSON encodings shared by the theorem, orbit and form formats. Integers that
// fit in 64 bits are JSON numbers; larger ones are decimal strings. Readers
// accept both.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "cubicforge/cfinite.hpp"
#include "cubicforge/errors.hpp"
#include "cubicforge/kernel/integer.hpp"

namespace cubicforge::json_io {

using nlohmann::json;

inline json from_integer(const Integer& x) {
  if (x.fits_slong_p()) return json(static_cast<std::int64_t>(x.get_si()));
  return json(x.get_str());
}

inline Integer to_integer(const json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) fail(Errc::InvalidArgument, "not an integer: " + j.dump());
    return x;
  }
  fail(Errc::InvalidArgument, "expected an integer, found " + j.dump());
}

inline json from_integers(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(from_integer(x));
  return a;
}

inline std::vector<Integer> to_integers(const json& j) {
  if (!j.is_array()) fail(Errc::InvalidArgument, "expected an array of integers, found " + j.dump());
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(to_integer(x));
  return out;
}

/// {"num": [...], "den": [...]}, ascending coefficients.
inline json from_gf(const RationalGF& g) {
  return json{{"num", from_integers(g.num())}, {"den", from_integers(g.den())}};
}

inline RationalGF to_gf(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    fail(Errc::InvalidArgument, "generating function needs \"num\" and \"den\"");
  }
  return RationalGF::make(to_integers(j.at("num")), to_integers(j.at("den")));
}

inline const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(Errc::InvalidArgument, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline Pattern to_pattern(const json& j) {
  const auto s = j.get<std::string>();
  if (s == "constant") return Pattern::Constant;
  if (s == "alternating") return Pattern::Alternating;
  fail(Errc::InvalidArgument, "unknown pattern \"" + s + "\"");
}

}  // namespace cubicforge::json_io
