#pragma once

#include <optional>
#include <vector>

#include "simpcx/perm_group.hpp"

namespace simpcx {

// Vertex bijections K1 -> K2 carrying facets onto facets. Backtracking over
// vertex images, pruned by (degree, link f-vector, sorted edge degrees to
// neighbours) and by checking that every partially mapped facet lands in a
// face of K2.
std::optional<VertexMap> find_isomorphism(const SimplicialComplex& k1, const SimplicialComplex& k2);
std::vector<VertexMap> all_isomorphisms(const SimplicialComplex& k1, const SimplicialComplex& k2);
bool are_isomorphic(const SimplicialComplex& k1, const SimplicialComplex& k2);

// All automorphisms as permutations of the vertex set.
PermGroup automorphism_group(const SimplicialComplex& k);

}  // namespace simpcx
