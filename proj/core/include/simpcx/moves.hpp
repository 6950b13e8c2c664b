#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "simpcx/complex.hpp"

namespace simpcx {

struct BistellarMove {
  Simplex a;  // removed core
  Simplex b;  // inserted core

  std::string str() const;  // "x22x33x44 -> x23x24x34"
  auto operator<=>(const BistellarMove&) const = default;
  bool operator==(const BistellarMove&) const = default;
};

// ∂B as a complex: all proper subsets of B ({∅} when B is a single vertex).
SimplicialComplex simplex_boundary(const Simplex& b);

// Replaces A * ∂B by ∂A * B. Errors: "invalid move: A not a face",
// "invalid move: link" (lk A != ∂B), "invalid move: B present".
SimplicialComplex apply_bistellar(const SimplicialComplex& k, const Simplex& a, const Simplex& b);
SimplicialComplex apply_bistellar(const SimplicialComplex& k, const BistellarMove& m);

// Inserts the fresh vertex x inside the face C.
SimplicialComplex star_vertex(const SimplicialComplex& k, const Simplex& c, const Label& x);

// Replaces the ball D by the ball Dhat. Throws Error naming the failed clause.
SimplicialComplex apply_gbm(const SimplicialComplex& k, const SimplicialComplex& d, const SimplicialComplex& dhat);

// Pure, strongly connected, ridges in at most two facets, acyclic, boundary a
// homology sphere one dimension down. Returns the first failed clause or "".
std::string ball_plausibility_failure(const SimplicialComplex& d);

// All bistellar moves A -> B with dim A <= dim K - 1, sorted by A.
std::vector<BistellarMove> find_proper_moves(const SimplicialComplex& k);

// The three flips u a b -> x y z, u a -> c x y z, u -> b c x y z that
// realize the vertex-deleting GBM (star(u), D(xyz) * S(abc)).
std::vector<BistellarMove> vertex_deletion_flips(const Label& u, const Simplex& xyz,
                                                 const std::vector<Label>& abc);

struct MoveStep {
  enum class Kind { flip, star, gbm };
  Kind kind = Kind::flip;
  Simplex a, b;                 // flip
  Simplex c;                    // star
  Label x;                      // star
  SimplicialComplex d, dhat;    // gbm

  std::string str() const;
};

struct MoveScript {
  std::string name;
  std::vector<MoveStep> steps;
};

// {"name": ..., "steps": [{"kind": "flip", "A": [...], "B": [...]} |
// {"kind": "star", "C": [...], "x": label} | {"kind": "gbm", "D_facets": [[...]], "Dhat_facets": [[...]]}]}
MoveScript parse_script(std::string_view json_text);
std::string script_to_json(const MoveScript& s);

// Replays the steps in order. The first invalid step aborts with an Error
// "step <i> (<move>): <reason>", i counted from 1. When `trace` is given it
// receives the complex after every step.
SimplicialComplex apply_script(const SimplicialComplex& k, const MoveScript& s,
                               std::vector<SimplicialComplex>* trace = nullptr);

std::vector<std::string> builtin_script_names();
// Throws Error for an unknown name.
MoveScript builtin_script(const std::string& name);

}  // namespace simpcx
