// User-supplied Manin triples in JSON form; see schema/triple_file.schema.json.
#pragma once

#include <string>

#include <json.hpp>

#include "pdd/doubles.hpp"

namespace pdd {

struct TripleFileError : std::invalid_argument {
  explicit TripleFileError(const std::string& w) : std::invalid_argument(w) {}
};

inline constexpr int kTripleFileVersion = 1;

// Builds a catalog-style entry so that the file runs through the same
// verification pipeline as the built-in cases.
CatalogEntry triple_from_json(const nlohmann::json& j, const std::string& fallback_name);
CatalogEntry load_triple_file(const std::string& path);

}  // namespace pdd
