#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "simpcx/complex.hpp"

namespace simpcx {

struct ComplexDocument {
  std::string name;
  SimplicialComplex complex;
};

// {"name": ..., "label_kind": "ordered"|"unordered"|"atom", "vertices": [...], "facets": [[...]]}
std::string complex_to_json(const SimplicialComplex& k, const std::string& name);
// Throws Error on malformed JSON (with line information), on facet lists
// that are not facet sets, and on facet vertices missing from "vertices".
ComplexDocument complex_from_json(std::string_view text);

void write_complex_file(const std::filesystem::path& path, const SimplicialComplex& k, const std::string& name);
ComplexDocument read_complex_file(const std::filesystem::path& path);

}  // namespace simpcx
