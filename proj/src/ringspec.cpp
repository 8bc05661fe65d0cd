#include "sopkit/ringspec.hpp"

#include <fstream>
#include <sstream>

namespace sopkit {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

Field parse_field(const std::string& text) {
  if (text == "QQ") return Field::rationals();
  if (text.rfind("GF(", 0) == 0 && text.back() == ')') {
    std::string inside = text.substr(3, text.size() - 4);
    try {
      unsigned long p = std::stoul(inside);
      return Field::gf(static_cast<std::uint32_t>(p));
    } catch (const std::logic_error&) {
      throw Error("bad field modulus '" + inside + "'");
    }
  }
  throw Error("bad field '" + text + "' (expected GF(<p>) or QQ)");
}

}  // namespace

RingPresentation RingSpec::presentation() const {
  return RingPresentation::make(ring, defining, name);
}

RingSpec parse_ring_spec(std::string_view text, std::string name) {
  std::string field_line, vars_line, ideal_line;
  bool have_field = false, have_vars = false, have_ideal = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) throw Error("ring spec line without a key: '" + line + "'");
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    if (key == "field") {
      field_line = value;
      have_field = true;
    } else if (key == "vars") {
      vars_line = value;
      have_vars = true;
    } else if (key == "ideal") {
      ideal_line = value;
      have_ideal = true;
    } else {
      throw Error("unknown ring spec key '" + key + "'");
    }
  }
  if (!have_field || !have_vars || !have_ideal)
    throw Error("ring spec needs all of: field, vars, ideal");

  Field field = parse_field(field_line);
  std::vector<std::string> vars;
  std::istringstream vs(vars_line);
  std::string v;
  while (vs >> v) vars.push_back(v);
  if (vars.empty()) throw Error("ring spec declares no variables");
  RingPtr ring = Ring::make(field, std::move(vars));

  Ideal defining = ideal_line.empty() ? Ideal::zero(ring) : parse_ideal(ideal_line, ring);
  return {ring, std::move(defining), std::move(name)};
}

RingSpec load_ring_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ring spec '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string name = path;
  std::size_t slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  std::size_t dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return parse_ring_spec(buf.str(), name);
}

}  // namespace sopkit
