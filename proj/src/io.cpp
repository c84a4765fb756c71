#include "connspec/io.hpp"

#include "connspec/errors.hpp"

#include <fstream>
#include <sstream>

namespace connspec {
namespace {

std::vector<std::vector<Vertex>> simplex_list(const nlohmann::json& value, const char* key) {
  if (!value.is_array()) throw InvalidInput(std::string("'") + key + "' must be an array of arrays");
  std::vector<std::vector<Vertex>> out;
  for (const auto& item : value) {
    if (!item.is_array()) throw InvalidInput(std::string("'") + key + "' entries must be arrays");
    std::vector<Vertex> s;
    for (const auto& v : item) {
      if (!v.is_number_integer()) throw InvalidInput("vertex labels must be integers");
      s.push_back(v.get<Vertex>());
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::vector<Vertex>> facet_list(const Complex& c) {
  std::vector<std::vector<Vertex>> out;
  for (std::size_t i : c.facets()) out.push_back(c[i].vertices());
  return out;
}

}  // namespace

Complex parse_complex_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("complex JSON must be an object");
  const bool has_facets = doc.contains("facets");
  const bool has_simplices = doc.contains("simplices");
  if (has_facets == has_simplices) throw InvalidInput("complex JSON needs exactly one of 'facets' or 'simplices'");
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw InvalidInput("'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  return has_facets ? from_facets(simplex_list(doc["facets"], "facets"), name)
                    : from_simplices(simplex_list(doc["simplices"], "simplices"), name);
}

Complex parse_complex_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::vector<Vertex>> simplices;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<Vertex> s;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) throw InvalidInput("line " + std::to_string(number) + ": '" + token + "' is not an integer");
      s.push_back(v);
    }
    simplices.push_back(std::move(s));
  }
  return from_simplices(simplices);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed reading " + path.string());
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << contents;
  if (!out) throw IoError("failed writing " + path.string());
}

Complex read_complex(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  Complex c = first != std::string::npos && text[first] == '{' ? parse_complex_json(text) : parse_complex_text(text);
  if (c.name().empty()) c.set_name(path.stem().string());
  return c;
}

nlohmann::json complex_to_json(const Complex& c) {
  nlohmann::json doc = nlohmann::json::object();
  if (!c.name().empty()) doc["name"] = c.name();
  doc["facets"] = facet_list(c);
  return doc;
}

void write_complex(const std::filesystem::path& path, const Complex& c) {
  write_file(path, complex_to_json(c).dump(2) + "\n");
}

nlohmann::json to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& v : m.row(r)) row.push_back(v.str());
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const Inertia& in) { return {{"p", in.p}, {"n", in.n}, {"z", in.z}}; }

nlohmann::json to_json(const Spectrum& s) { return s.eigenvalues; }

nlohmann::json to_json(const CharPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  return out;
}

}  // namespace connspec
