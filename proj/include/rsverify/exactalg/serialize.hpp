#pragma once

#include <string>

#include <json.hpp>

#include "rsverify/errors.hpp"
#include "rsverify/exactalg/sym_laurent.hpp"
#include "rsverify/exactalg/trunc_series.hpp"
#include "rsverify/exactalg/vlaurent.hpp"

namespace rsv {

using Json = nlohmann::ordered_json;

// {"<v exponent>": "num/den", ...} in increasing exponent order.
inline Json to_json(const VLaurent& x) {
  Json out = Json::object();
  for (const auto& [e, c] : x.terms()) out[std::to_string(e)] = to_fraction_string(c);
  return out;
}

inline VLaurent vlaurent_from_json(const Json& j) {
  if (!j.is_object()) throw domain_error("VLaurent JSON must be an object");
  VLaurent out;
  for (const auto& [k, val] : j.items()) {
    int e = 0;
    try {
      std::size_t used = 0;
      e = std::stoi(k, &used);
      if (used != k.size()) throw std::invalid_argument(k);
    } catch (const std::exception&) {
      throw domain_error("bad v exponent key: " + k);
    }
    if (val.is_string()) out.add_term(e, parse_rational(val.get<std::string>()));
    else if (val.is_number_integer()) out.add_term(e, Rational(val.get<long>()));
    else throw domain_error("coefficient must be a \"num/den\" string");
  }
  return out;
}

// Sorted list of {exponents, coeff}.
inline Json to_json(const SymLaurent& a) {
  Json out = Json::array();
  for (const auto& [e, c] : a.terms()) {
    Json t = Json::object();
    t["exponents"] = e;
    t["coeff"] = to_json(c);
    out.push_back(std::move(t));
  }
  return out;
}

inline SymLaurent sym_from_json(const Json& j, int nvars) {
  if (!j.is_array()) throw domain_error("SymLaurent JSON must be an array");
  SymLaurent out(nvars);
  for (const auto& t : j) {
    auto e = t.at("exponents").get<Exponents>();
    if (static_cast<int>(e.size()) != nvars) throw structural_error("exponent tuple of wrong length");
    out.add_term(e, vlaurent_from_json(t.at("coeff")));
  }
  return out;
}

inline std::string canonical(const SymLaurent& a) { return to_json(a).dump(); }

template <class C>
Json to_json(const TruncSeries<C>& s) {
  Json out = Json::object();
  out["low"] = s.low();
  if (s.exact()) out["order"] = "exact";
  else out["order"] = s.order();
  Json cs = Json::array();
  for (const auto& [l, c] : s.terms()) {
    Json t = Json::object();
    t["degree"] = l;
    if constexpr (std::is_same_v<C, Rational>) t["coeff"] = to_fraction_string(c);
    else t["coeff"] = to_json(c);
    cs.push_back(std::move(t));
  }
  out["coefficients"] = std::move(cs);
  return out;
}

}  // namespace rsv
