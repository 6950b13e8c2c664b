#pragma once

#include <map>
#include <string>
#include <vector>

#include "simpcx/isomorphism.hpp"
#include "simpcx/perm_group.hpp"

namespace simpcx {

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
  std::string recipe;  // how the complex is built
};

// One verified statement inside a composite check.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckList {
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string detail = "");
  bool all_pass() const;
};

// "S2_4", "Icosa_fig1", "RP2_6", "S2xS2_16", "CP2_10", "S2xS2_16_prime",
// "S2xS2_12", "I1_fig2", "I2_fig2", "S2_8", "S1_6_octa", "S2_6_alt".
std::vector<std::string> catalog_names();
// Builds from the recipe and validates the expected face vector. Throws Error
// for an unknown name.
NamedComplex build(const std::string& name);
// Cached build; safe to call from several threads.
const NamedComplex& get(const std::string& name);

// Groups and fixtures used by the recipes.
Permutation transpose_map(const std::vector<Label>& domain);  // x_ij <-> x_ji
std::vector<Permutation> s2xs2_16_generators();               // alpha, beta, tau
std::vector<Simplex> s2xs2_16_basic_facets();
std::vector<Permutation> cp2_10_generators();  // alpha-bar, beta-bar
std::vector<Simplex> cp2_10_basic_facets();
std::vector<Permutation> a4_index_generators(const std::vector<Label>& domain);  // (123), (12)(34) on subscripts
std::vector<Simplex> s2xs2_16_prime_basic_facets();
std::vector<Permutation> s2xs2_12_generators();  // g, h
std::vector<Simplex> s2xs2_12_basic_facets();
// Basic facets modulo A4 of the complex obtained by the vertex-deleting moves.
std::vector<Simplex> s2xs2_12_a4_basic_facets();

// Icosahedron on {x_ij : i != j}: grid edges within rows and columns plus
// x_ij x_kl for even permutations (i, j, k, l); triangles are 3-cliques.
SimplicialComplex icosahedron_fig1();
// Clique complex of a graph given by its edges.
SimplicialComplex clique_complex(const std::vector<Simplex>& edges, int max_dim = 2);
// Figure transcriptions (edge lists) of the antimorphic pair.
std::vector<Simplex> fig2_left_edges();
std::vector<Simplex> fig2_right_edges();

// Throws Error("not an icosahedron") unless k has f = (12, 30, 20), all vertex
// degrees 5 and is a 2-sphere.
void require_icosahedron(const SimplicialComplex& k);
// Pairwise graph distances in the 1-skeleton, indexed like k.vertices().
std::vector<std::vector<int>> graph_distances(const SimplicialComplex& k);
// The map sending each vertex to the unique vertex at distance 3.
Permutation icosahedron_antipodal_map(const SimplicialComplex& ico);

struct QuadruplePair {
  std::vector<Simplex> first;   // four disjoint triangles covering the vertices
  std::vector<Simplex> second;  // their antipodal images
};

// Partitions of the vertex set into four triangles, paired with their
// antipodal images. Each unordered pair is listed once.
std::vector<QuadruplePair> antipodal_quadruple_pairs(const SimplicialComplex& ico);

struct QuadrupleCensus {
  std::vector<QuadruplePair> pairs;
  std::size_t aut_order = 0;
  std::size_t orbit_count = 0;             // Aut-orbits on the pairs
  std::size_t first_stabilizer_order = 0;  // stabilizer of pairs.front()
};
QuadrupleCensus quadruple_census(const SimplicialComplex& ico);

struct IcosahedronPair {
  SimplicialComplex i1, i2;
};

// Edges: vertex pairs at distance 2 in I1; triangles: 3-cliques. Throws
// Error when the result is not an icosahedron.
SimplicialComplex distance2_complex(const SimplicialComplex& i1);
// Definition of antimorphism: distance 1 <-> distance 2 for all vertex pairs.
bool check_antimorphism(const VertexMap& f, const SimplicialComplex& i1, const SimplicialComplex& i2);

struct TriangleBijection {
  std::map<Simplex, Simplex> phi;  // triangles(I1) -> triangles(I2)
  std::map<Simplex, Simplex> psi;  // triangles(I2) -> triangles(I1)
};

// phi(D) is the unique triangle D' of I2 such that the three triangles of I2
// sharing an edge with D' have their third vertex in D; psi symmetrically.
// Throws Error when a candidate is missing or not unique.
TriangleBijection phi_psi(const IcosahedronPair& pair);

// Open vertex neighbourhoods of I1 (12 facets) and (D ∪ phi(D)) \ {y} for
// y in phi(D) (60 facets).
SimplicialComplex build_s2xs2_12_from_pair(const IcosahedronPair& pair, const TriangleBijection& t);

CheckList verify_join_embeddings();
CheckList structural_report_s2xs2_12();

}  // namespace simpcx
