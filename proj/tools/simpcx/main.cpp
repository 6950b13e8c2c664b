// simpcx: catalog browsing, claim verification, complex import/export,
// subdivision certificates and move scripts.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "claims.hpp"
#include "simpcx/catalog.hpp"
#include "simpcx/homology.hpp"
#include "simpcx/io.hpp"
#include "simpcx/moves.hpp"
#include "simpcx/product_subdivision.hpp"

namespace {

using namespace simpcx;
namespace fs = std::filesystem;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw Error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_catalog_name(const std::string& s) {
  const auto names = catalog_names();
  return std::find(names.begin(), names.end(), s) != names.end();
}

// A file path, or else a catalog name.
ComplexDocument load_complex(const std::string& arg) {
  if (fs::exists(arg)) return read_complex_file(arg);
  if (is_catalog_name(arg)) return {arg, get(arg).complex};
  throw UsageError("no such file or catalog entry: " + arg);
}

MoveScript load_script(const std::string& arg) {
  if (fs::exists(arg)) return parse_script(slurp(arg));
  const auto names = builtin_script_names();
  if (std::find(names.begin(), names.end(), arg) != names.end()) return builtin_script(arg);
  throw UsageError("no such file or built-in script: " + arg);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

void print_summary(const std::string& name, const SimplicialComplex& k) {
  std::cout << "name: " << name << "\n"
            << "vertices: " << k.num_vertices() << "\n"
            << "f-vector: " << k.f_vector().str() << "\n"
            << "facets: " << k.num_facets() << "\n";
}

int cmd_verify_run(const std::vector<std::string>& ids, const std::string& format, unsigned jobs,
                   std::uint64_t seed, bool timing) {
  verifier::RunOptions opts{seed, jobs};
  std::vector<verifier::ClaimResult> results;
  try {
    results = verifier::run_claims(ids.empty() ? std::vector<std::string>{"all"} : ids, opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << (format == "json" ? verifier::render_json(results, opts, timing)
                                 : verifier::render_text(results, timing));
  return verifier::overall(results) == verifier::Status::fail ? kExitFail : 0;
}

int cmd_catalog_show(const std::string& name) {
  if (!is_catalog_name(name)) throw UsageError("unknown catalog entry: " + name);
  const auto& nc = get(name);
  const auto& k = nc.complex;
  print_summary(name, k);
  std::cout << "recipe: " << nc.recipe << "\n";
  const auto aut = automorphism_group(k);
  std::vector<std::vector<Simplex>> classes;
  for (auto& orb : orbits_on_faces(k, aut, k.dim())) {
    if (k.has_facet(orb.front())) classes.push_back(std::move(orb));
  }
  std::cout << "automorphism group order: " << aut.order() << "\n"
            << "basic facets modulo Aut: " << classes.size() << " orbit classes\n";
  for (const auto& orb : classes) std::cout << "  " << orb.front().str() << "  (orbit " << orb.size() << ")\n";
  return 0;
}

int cmd_subdivision_verify(const std::string& arg) {
  const auto doc = load_complex(arg);
  const auto report = verify_subdivision(doc.complex, build_product_cell_complex());
  std::cout << doc.name << ": " << report.str() << "\n";
  return report.certified ? 0 : kExitFail;
}

int cmd_subdivision_search(const std::string& out_path) {
  const auto search = search_equivariant_pure_subdivisions();
  auto docs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < search.results.size(); ++i) {
    docs.push_back(nlohmann::ordered_json::parse(
        complex_to_json(search.results[i], "subdivision_" + std::to_string(i + 1))));
  }
  emit(docs.dump(2) + "\n", out_path);
  std::cerr << search.results.size() << " certified subdivisions (" << search.edge_pure << " of "
            << search.diagonal_patterns << " diagonal patterns edge-pure)\n";
  return 0;
}

int cmd_moves_apply(const std::string& complex_arg, const std::string& script_arg, const std::string& out_path,
                    bool trace) {
  const auto doc = load_complex(complex_arg);
  const auto script = load_script(script_arg);
  std::vector<SimplicialComplex> steps;
  const auto result = apply_script(doc.complex, script, trace ? &steps : nullptr);
  if (trace) {
    for (std::size_t i = 0; i < steps.size(); ++i) {
      std::cerr << "step " << i + 1 << " (" << script.steps[i].str() << "): f = " << steps[i].f_vector().str()
                << "\n";
    }
  }
  const std::string name = doc.name + "+" + (script.name.empty() ? "script" : script.name);
  emit(complex_to_json(result, name), out_path);
  std::cerr << name << ": f = " << result.f_vector().str() << ", homology " << homology(result).str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial 4-manifold triangulations: catalog, checks and moves"};
  app.require_subcommand(1);
  std::function<int()> action;

  auto* verify = app.add_subcommand("verify", "Run claim checks");
  verify->require_subcommand(1);
  auto* run = verify->add_subcommand("run", "Run claims by id, or all");
  std::vector<std::string> ids;
  std::string format = "text";
  unsigned jobs = 0;
  std::uint64_t seed = 0;
  bool timing = false;
  run->add_option("ids", ids, "Claim ids or 'all' (default all)");
  run->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  run->add_option("--jobs", jobs, "Worker threads (0: hardware threads)");
  run->add_option("--seed", seed, "Seed of the flip-reduction heuristic");
  run->add_flag("--timing", timing, "Include elapsed times (reports are then not byte-stable)");
  run->callback([&] { action = [&] { return cmd_verify_run(ids, format, jobs, seed, timing); }; });
  verify->add_subcommand("list", "List claim ids")->callback([&] {
    action = [] {
      for (const auto& c : verifier::registry()) std::cout << c.id << "  " << c.title << "\n";
      return 0;
    };
  });

  auto* catalog = app.add_subcommand("catalog", "Browse the built-in complexes");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "List catalog names")->callback([&] {
    action = [] {
      for (const auto& n : catalog_names()) std::cout << n << "  " << get(n).complex.f_vector().str() << "\n";
      return 0;
    };
  });
  std::string show_name;
  auto* show = catalog->add_subcommand("show", "Show a catalog complex");
  show->add_option("name", show_name, "Catalog name")->required();
  show->callback([&] { action = [&] { return cmd_catalog_show(show_name); }; });

  auto* complex = app.add_subcommand("complex", "Import or export complexes as JSON");
  complex->require_subcommand(1);
  std::string export_name, export_path, import_path;
  auto* exp = complex->add_subcommand("export", "Write a catalog complex to a JSON file");
  exp->add_option("name", export_name, "Catalog name")->required();
  exp->add_option("path", export_path, "Output path ('-' for stdout)")->required();
  exp->callback([&] {
    action = [&] {
      if (!is_catalog_name(export_name)) throw UsageError("unknown catalog entry: " + export_name);
      emit(complex_to_json(get(export_name).complex, export_name), export_path);
      return 0;
    };
  });
  auto* imp = complex->add_subcommand("import", "Read and validate a JSON complex");
  imp->add_option("path", import_path, "Input path")->required();
  imp->callback([&] {
    action = [&] {
      const auto doc = read_complex_file(import_path);
      print_summary(doc.name, doc.complex);
      return 0;
    };
  });

  auto* subdivision = app.add_subcommand("subdivision", "Subdivisions of S2_4 x S2_4");
  subdivision->require_subcommand(1);
  std::string sub_arg, search_out;
  auto* sv = subdivision->add_subcommand("verify", "Certify a complex as a subdivision");
  sv->add_option("complex", sub_arg, "JSON file or catalog name")->required();
  sv->callback([&] { action = [&] { return cmd_subdivision_verify(sub_arg); }; });
  auto* ss = subdivision->add_subcommand("search", "Find the tau-stable pure subdivisions");
  ss->add_option("--output", search_out, "Output path (default stdout)");
  ss->callback([&] { action = [&] { return cmd_subdivision_search(search_out); }; });

  auto* moves = app.add_subcommand("moves", "Bistellar moves");
  moves->require_subcommand(1);
  std::string mv_complex, mv_script, mv_out;
  bool mv_trace = false;
  auto* apply = moves->add_subcommand("apply", "Replay a move script");
  apply->add_option("complex", mv_complex, "JSON file or catalog name")->required();
  apply->add_option("script", mv_script, "JSON file or built-in script name")->required();
  apply->add_option("--output", mv_out, "Output path (default stdout)");
  apply->add_flag("--trace", mv_trace, "Print face vectors after every step");
  apply->callback([&] { action = [&] { return cmd_moves_apply(mv_complex, mv_script, mv_out, mv_trace); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
