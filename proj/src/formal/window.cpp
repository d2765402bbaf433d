#include "toroidal/formal/window.hpp"

#include <charconv>
#include <string>

#include "toroidal/error.hpp"

namespace toroidal {

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) {
    throw Error(Errc::ParseError, "window '" + std::string(whole) + "' is not of the form lo..hi");
  }
  return v;
}

Range range_field(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw Error(Errc::InvalidDescriptor, "field '" + field + "': expected [lo, hi]");
  }
  Range r{j[0].get<int>(), j[1].get<int>()};
  if (r.lo > r.hi) throw Error(Errc::InvalidDescriptor, "field '" + field + "': lo > hi");
  return r;
}

}  // namespace

Range parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) throw Error(Errc::ParseError, "window '" + std::string(text) + "' lacks '..'");
  Range r{parse_int(text.substr(0, dots), text), parse_int(text.substr(dots + 2), text)};
  if (r.lo > r.hi) throw Error(Errc::ParseError, "window '" + std::string(text) + "' has lo > hi");
  return r;
}

ExponentWindow ExponentWindow::uniform(Range range, int r) {
  return ExponentWindow{range, std::vector<Range>(static_cast<std::size_t>(r), range)};
}

json ExponentWindow::to_json() const {
  json xs = json::array();
  for (const auto& r : x) xs.push_back({r.lo, r.hi});
  return {{"x0", {x0.lo, x0.hi}}, {"x", xs}};
}

ExponentWindow ExponentWindow::from_json(const json& j) {
  const json& w = j.is_object() && j.contains("window") ? j.at("window") : j;
  if (!w.is_object() || !w.contains("x0")) throw Error(Errc::InvalidDescriptor, "field 'window.x0' is missing");
  ExponentWindow out;
  out.x0 = range_field(w.at("x0"), "window.x0");
  if (w.contains("x")) {
    if (!w.at("x").is_array()) throw Error(Errc::InvalidDescriptor, "field 'window.x': expected a list of [lo, hi]");
    for (std::size_t i = 0; i < w.at("x").size(); ++i) {
      out.x.push_back(range_field(w.at("x")[i], "window.x[" + std::to_string(i) + "]"));
    }
  }
  return out;
}

}  // namespace toroidal
