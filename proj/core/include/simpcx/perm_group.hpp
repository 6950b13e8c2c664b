#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simpcx/permutation.hpp"

namespace simpcx {

// A finite permutation group held as generators plus its full element list
// (sorted). Orders here stay below a few hundred, so closure is enumerated
// explicitly.
class PermGroup {
 public:
  // Breadth-first closure. Throws Error when generators have different
  // domains or the list is empty (use trivial() for the identity group).
  static PermGroup generate(std::vector<Permutation> generators);
  static PermGroup trivial(std::vector<Label> domain);
  // Wraps an element list already known to be closed (checked).
  static PermGroup from_elements(std::vector<Permutation> elements);

  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<Label>& domain() const noexcept { return elements_.front().domain(); }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& other) const;

  // Sorted multiset of element orders.
  std::vector<int> element_order_profile() const;
  int max_element_order() const;
  std::vector<Permutation> center() const;

  // Elements g with g(s) = s (setwise).
  std::vector<Permutation> stabilizer(const Simplex& s) const;
  std::vector<std::vector<Label>> vertex_orbits() const;

 private:
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

// Orbit of `s` under the group generated by `generators`, in discovery order.
std::vector<Simplex> orbit(const Simplex& s, const std::vector<Permutation>& generators);

struct GeneratedComplex {
  SimplicialComplex complex;
  std::vector<std::size_t> orbit_sizes;  // one entry per basic facet
};

// Union of the facet orbits. Throws Error("orbit closure not a facet set")
// when a generated facet strictly contains another.
GeneratedComplex generate_complex(const std::vector<Permutation>& generators,
                                  const std::vector<Simplex>& basic_facets);

// Orbits of the d-faces of K under G. Each orbit sorted; orbits sorted by
// their first element.
std::vector<std::vector<Simplex>> orbits_on_faces(const SimplicialComplex& k, const PermGroup& g, int d);

// Picks one facet per G-orbit (the least member), i.e. basic facets modulo G.
std::vector<Simplex> basic_facets(const SimplicialComplex& k, const PermGroup& g);

bool is_automorphism(const SimplicialComplex& k, const Permutation& p);

struct GroupActionReport {
  bool is_pure = true;
  std::string condition;     // "a" or "b" when impure
  std::vector<Label> orbit;  // the vertex orbit involved
  Simplex witness;           // edge for (a), face for (b)

  std::string str() const;
};

// Pure action test: (a) no two vertices of one orbit span an edge; (b) for
// every orbit θ and face α the stabilizer of α is transitive on θ ∩ V(lk α).
// Throws Error when some element of G is not an automorphism of K.
GroupActionReport is_pure_action(const SimplicialComplex& k, const PermGroup& g);

// Vertices are sent to the least label of their orbit. Throws Error carrying
// the witness when the action is not pure.
SimplicialComplex quotient_complex(const SimplicialComplex& k, const PermGroup& g);

}  // namespace simpcx
