#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "simpcx/error.hpp"
#include "simpcx/simplex.hpp"

namespace simpcx {

// Bit i set <=> vertex i of the owning complex's vertex table is present.
using VertexMask = std::uint64_t;
inline constexpr std::size_t kMaxVertices = 64;

struct FaceVector {
  std::vector<long long> counts;  // f_0 .. f_d

  FaceVector() = default;
  FaceVector(std::initializer_list<long long> c) : counts(c) {}
  explicit FaceVector(std::vector<long long> c) : counts(std::move(c)) {}

  long long euler_characteristic() const;
  std::string str() const;  // "(16,84,216,240,96)"
  bool operator==(const FaceVector&) const = default;
};

// Finite simplicial complex stored by its facets. Faces are derived on
// demand. Vertices are the labels occurring in some facet, kept sorted; facet
// masks index into that table. Two complexes are equal iff their facet sets
// are equal.
//
// The void complex (no faces at all) and the complex {∅} are distinct: the
// latter has exactly one facet, the empty simplex.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;  // void complex

  // Throws Error if some facet is strictly contained in another.
  static SimplicialComplex from_facets(std::vector<Simplex> facets);
  // Keeps only the maximal members of `faces`.
  static SimplicialComplex from_faces(std::vector<Simplex> faces);
  static SimplicialComplex empty_simplex();  // {∅}
  static SimplicialComplex closure(const Simplex& s);
  // `table` must be sorted and duplicate-free; unused labels are dropped.
  static SimplicialComplex from_masks(const std::vector<Label>& table, std::vector<VertexMask> masks,
                                      bool keep_maximal_only = true);

  const std::vector<Label>& vertices() const noexcept { return vertices_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_facets() const noexcept { return facets_.size(); }
  const std::vector<VertexMask>& facet_masks() const noexcept { return facets_; }
  std::vector<Simplex> facets() const;  // lexicographic order

  bool is_void() const noexcept { return facets_.empty(); }
  // Largest facet dimension; -1 for {∅} and for the void complex.
  int dim() const;
  bool is_pure() const;

  bool contains(const Simplex& s) const;  // s is a face
  bool contains_mask(VertexMask m) const;
  bool has_facet(const Simplex& s) const;

  std::vector<Simplex> faces(int d) const;
  std::vector<VertexMask> face_masks(int d) const;  // sorted ascending
  FaceVector f_vector() const;

  int index_of(const Label& l) const;  // -1 when absent
  std::optional<VertexMask> mask_of(const Simplex& s) const;
  Simplex simplex_of(VertexMask m) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::vector<Label> vertices_;
  std::vector<VertexMask> facets_;  // sorted ascending
};

std::string to_string(const SimplicialComplex& k);

// Faces tau with tau ∩ s = ∅ and tau ∪ s ∈ K. Throws Error("not a face") when s ∉ K.
SimplicialComplex link(const SimplicialComplex& k, const Simplex& s);
// closure(s) * link(k, s).
SimplicialComplex star(const SimplicialComplex& k, const Simplex& s);
// Throws Error when the vertex sets overlap.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
// All faces of K with vertices in w. Labels of w outside K are ignored.
SimplicialComplex induced_subcomplex(const SimplicialComplex& k, const std::vector<Label>& w);
// Union of the face sets.
SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b);

// All proper subsets of v (|v| >= 2 for the public contract; |v| == 1 gives {∅}).
SimplicialComplex standard_sphere(const std::vector<Label>& v);
SimplicialComplex standard_ball(const std::vector<Label>& v);
// The cyclic 1-sphere through v in the given order; |v| >= 3.
SimplicialComplex cycle(const std::vector<Label>& v);

// Ridges contained in exactly one facet, as a complex. Throws Error("not pure").
SimplicialComplex boundary(const SimplicialComplex& k);

bool is_weak_pseudomanifold(const SimplicialComplex& k);
std::vector<SimplicialComplex> strong_components(const SimplicialComplex& k);
// Connected components of the 1-skeleton, by vertex count.
int connected_components(const SimplicialComplex& k);

// Largest k such that every k-subset of the vertex set is a face.
int neighborliness(const SimplicialComplex& k);
// Number of vertices in link(k, s).
int face_degree(const SimplicialComplex& k, const Simplex& s);

}  // namespace simpcx
