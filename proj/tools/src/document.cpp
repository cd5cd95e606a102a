#include "document.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <regex>
#include <sstream>

#include "toric_dmod/error.hpp"

namespace toric::cli {

namespace {

using nlohmann::json;

std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted && c == '\\') {
      ++i;
    } else if (c == '"') {
      quoted = !quoted;
    } else if (c == '#' && !quoted) {
      return line.substr(0, i);
    }
  }
  return line;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

json parse_value(const std::string& key, const std::string& raw) {
  std::string text = trim(raw);
  if (text.empty()) throw ParseError("missing value for '" + key + "'");
  static const std::regex bare("[A-Za-z_][A-Za-z0-9_-]*");
  if (std::regex_match(text, bare) && text != "true" && text != "false" && text != "null")
    return json(text);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("bad value for '" + key + "': " + e.what());
  }
}

Integer to_integer(const json& v, const std::string& what) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
    return Integer(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    Integer z;
    if (z.set_str(v.get<std::string>(), 10) == 0) return z;
  }
  throw ParseError(what + ": expected an integer");
}

IntVector to_int_vector(const json& v, const std::string& what) {
  if (!v.is_array()) throw ParseError(what + ": expected a list of integers");
  IntVector out;
  for (const auto& x : v) out.push_back(to_integer(x, what));
  return out;
}

const json& require(const Document& doc, const std::string& key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError("missing key '" + key + "'");
  return it->second;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

Document parse_document(std::string_view text) {
  static const std::regex entry(R"(^\s*([A-Za-z_][A-Za-z0-9_-]*)\s*=(.*)$)");
  Document doc;
  std::string key, value;
  std::size_t line_no = 0;
  auto flush = [&] {
    if (key.empty()) return;
    if (doc.count(key)) throw ParseError("duplicate key '" + key + "'");
    doc[key] = parse_value(key, value);
    key.clear();
    value.clear();
  };
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_comment(line);
    std::smatch m;
    if (std::regex_match(line, m, entry)) {
      flush();
      key = m[1];
      value = m[2];
    } else if (!trim(line).empty()) {
      if (key.empty())
        throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
      value += '\n';
      value += line;
    }
  }
  flush();
  return doc;
}

Document read_document(const std::string& path) { return parse_document(slurp(path)); }

Fan parse_fan(const Document& doc) {
  const json& jn = require(doc, "n");
  if (!jn.is_number_integer() || jn.get<long long>() < 0) throw ParseError("n: expected a non-negative integer");
  const std::size_t n = jn.get<std::size_t>();

  const json& jr = require(doc, "rays");
  if (!jr.is_array() || jr.empty()) throw ParseError("rays: expected a non-empty list");
  std::vector<IntVector> rays;
  for (const auto& r : jr) {
    IntVector v = to_int_vector(r, "rays");
    if (v.size() != n)
      throw ParseError("rays: ray " + std::to_string(rays.size() + 1) + " has " +
                       std::to_string(v.size()) + " coordinates, expected " + std::to_string(n));
    rays.push_back(std::move(v));
  }

  std::vector<std::vector<std::size_t>> cones;
  if (auto it = doc.find("max_cones"); it != doc.end()) {
    if (!it->second.is_array()) throw ParseError("max_cones: expected a list of index lists");
    for (const auto& c : it->second) {
      if (!c.is_array()) throw ParseError("max_cones: expected a list of index lists");
      std::vector<std::size_t> cone;
      for (const auto& x : c) {
        if (!x.is_number_integer()) throw ParseError("max_cones: expected integer indices");
        long long k = x.get<long long>();
        if (k < 1 || static_cast<std::size_t>(k) > rays.size())
          throw InvalidFan(FanErrorKind::BadConeIndex, cones.size(),
                           "cone " + std::to_string(cones.size() + 1) + ": ray index " +
                               std::to_string(k) + " out of range");
        cone.push_back(static_cast<std::size_t>(k - 1));
      }
      cones.push_back(std::move(cone));
    }
  }
  return Fan(n, std::move(rays), cones);
}

Fan read_fan(const std::string& path) { return parse_fan(read_document(path)); }

GradedPresentation parse_module(const Document& doc, std::size_t num_vars) {
  GradedPresentation f;
  f.num_vars = num_vars;
  const json& side = require(doc, "side");
  if (side == "left")
    f.side = Side::Left;
  else if (side == "right")
    f.side = Side::Right;
  else
    throw ParseError("side: expected left or right");

  const json& degrees = require(doc, "degrees");
  if (!degrees.is_array()) throw ParseError("degrees: expected a list");
  for (const auto& d : degrees)
    f.generator_degrees.push_back(d.is_array() ? to_int_vector(d, "degrees")
                                               : IntVector{to_integer(d, "degrees")});

  const json& relations = require(doc, "relations");
  if (!relations.is_array()) throw ParseError("relations: expected a list of rows");
  for (const auto& row : relations) {
    WeylVector v;
    if (row.is_string() && f.rank() == 1) {
      v.push_back(parse_weyl(row.get<std::string>(), num_vars));
    } else if (row.is_array()) {
      for (const auto& s : row) {
        if (!s.is_string()) throw ParseError("relations: entries must be strings");
        v.push_back(parse_weyl(s.get<std::string>(), num_vars));
      }
    } else {
      throw ParseError("relations: expected a list of rows");
    }
    if (v.size() != f.rank())
      throw ParseError("relations: row " + std::to_string(f.relations.size() + 1) + " has " +
                       std::to_string(v.size()) + " entries, expected " + std::to_string(f.rank()));
    f.relations.push_back(std::move(v));
  }
  return f;
}

GradedPresentation read_module(const std::string& path, std::size_t num_vars) {
  return parse_module(read_document(path), num_vars);
}

void write_module(std::ostream& os, const GradedPresentation& f) {
  os << "side = " << to_string(f.side) << '\n';
  os << "degrees = [";
  for (std::size_t i = 0; i < f.generator_degrees.size(); ++i)
    os << (i ? ", " : "") << to_string(f.generator_degrees[i]);
  os << "]\n";
  if (f.relations.empty()) {
    os << "relations = []\n";
    return;
  }
  os << "relations = [\n";
  for (std::size_t r = 0; r < f.relations.size(); ++r) {
    os << "  [";
    for (std::size_t i = 0; i < f.relations[r].size(); ++i)
      os << (i ? ", " : "") << json(to_string(f.relations[r][i])).dump();
    os << (r + 1 < f.relations.size() ? "],\n" : "]\n");
  }
  os << "]\n";
}

}  // namespace toric::cli
