#include "toroidal/core/json.hpp"

#include "toroidal/error.hpp"

namespace toroidal {

void to_json(json& j, const Scalar& s) { j = s.str(); }

void from_json(const json& j, Scalar& s) { s = scalar_field(j, "scalar"); }

Scalar scalar_field(const json& j, const std::string& field) {
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>());
    } catch (const Error& e) {
      throw Error(Errc::InvalidDescriptor, "field '" + field + "': " + e.what());
    }
  }
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw Error(Errc::InvalidDescriptor, "field '" + field + "': expected a scalar string \"p/q\"");
}

void to_json(json& j, const LaurentPoly& p) {
  j = json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.str();
}

void from_json(const json& j, LaurentPoly& p) {
  if (!j.is_object()) throw Error(Errc::InvalidDescriptor, "polynomial: expected {\"exponent\": \"scalar\"}");
  LaurentPoly::Terms terms;
  for (const auto& [key, value] : j.items()) {
    int e = 0;
    try {
      std::size_t used = 0;
      e = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidDescriptor, "polynomial exponent '" + key + "' is not an integer");
    }
    terms[e] = scalar_field(value, "polynomial[" + key + "]");
  }
  p = LaurentPoly(std::move(terms));
}

void to_json(json& j, const MultiIndex& m) { j = m.entries(); }

void from_json(const json& j, MultiIndex& m) {
  if (!j.is_array()) throw Error(Errc::InvalidDescriptor, "multi-index: expected an integer array");
  m = MultiIndex(j.get<std::vector<int>>());
}

}  // namespace toroidal
