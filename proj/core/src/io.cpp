#include "simpcx/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json_util.hpp"

namespace simpcx {

namespace {

const char* label_kind_name(const SimplicialComplex& k) {
  const auto& v = k.vertices();
  if (std::any_of(v.begin(), v.end(), [](const Label& l) { return l.kind() == Label::Kind::unordered; })) {
    return "unordered";
  }
  if (!v.empty() && std::all_of(v.begin(), v.end(), [](const Label& l) { return !l.is_pair(); })) return "atom";
  return "ordered";
}

}  // namespace

std::string complex_to_json(const SimplicialComplex& k, const std::string& name) {
  nlohmann::json j;
  j["name"] = name;
  j["label_kind"] = label_kind_name(k);
  j["vertices"] = nlohmann::json::array();
  for (const auto& l : k.vertices()) j["vertices"].push_back(l.str());
  j["facets"] = nlohmann::json::array();
  for (const auto& f : k.facets()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& l : f) row.push_back(l.str());
    j["facets"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

ComplexDocument complex_from_json(std::string_view text) {
  const auto j = parse_json_document(text);
  ComplexDocument doc;
  try {
    doc.name = j.value("name", "");
    const std::string kind_name = j.value("label_kind", "ordered");
    auto parse = [&kind_name](const std::string& s) {
      if (kind_name == "atom") return Label::atom(s);
      if (kind_name == "unordered") return Label::parse(s, Label::Kind::unordered);
      if (kind_name == "ordered") return Label::parse(s, Label::Kind::pair);
      throw Error("complex JSON: unknown label_kind '" + kind_name + "'");
    };
    std::vector<Label> declared;
    if (j.contains("vertices")) {
      for (const auto& v : j.at("vertices")) declared.push_back(parse(v.get<std::string>()));
      std::sort(declared.begin(), declared.end());
    }
    std::vector<Simplex> facets;
    for (const auto& f : j.at("facets")) {
      std::vector<Label> labels;
      for (const auto& v : f) {
        Label l = parse(v.get<std::string>());
        if (j.contains("vertices") && !std::binary_search(declared.begin(), declared.end(), l)) {
          throw Error("complex JSON: facet vertex " + l.str() + " not listed in \"vertices\"");
        }
        labels.push_back(std::move(l));
      }
      facets.emplace_back(std::move(labels));
    }
    doc.complex = facets.empty() ? SimplicialComplex{} : SimplicialComplex::from_facets(std::move(facets));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("complex JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(std::string("complex JSON: ") + e.what());
  }
  return doc;
}

void write_complex_file(const std::filesystem::path& path, const SimplicialComplex& k, const std::string& name) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << complex_to_json(k, name);
}

ComplexDocument read_complex_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return complex_from_json(ss.str());
}

}  // namespace simpcx
