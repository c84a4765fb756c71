#pragma once

#include "connspec/complex.hpp"
#include "connspec/exact.hpp"
#include "connspec/matrix.hpp"
#include "connspec/spectra.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace connspec {

/// {"name": ..., "facets": [[...]]} or {"simplices": [[...]]}; the two keys
/// are mutually exclusive. Throws InvalidInput on malformed content.
Complex parse_complex_json(const std::string& text);

/// One simplex per line as whitespace-separated integers; '#' starts a
/// comment line. The list is taken literally (no closure).
Complex parse_complex_text(const std::string& text);

/// Chooses the format from the content (a leading '{' means JSON). Throws
/// IoError if the file cannot be read.
Complex read_complex(const std::filesystem::path& path);

nlohmann::json complex_to_json(const Complex& c);
void write_complex(const std::filesystem::path& path, const Complex& c);

nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const Inertia& in);
nlohmann::json to_json(const Spectrum& s);
nlohmann::json to_json(const CharPoly& p);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace connspec
