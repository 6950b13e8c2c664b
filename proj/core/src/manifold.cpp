#include <algorithm>
#include <random>

#include "simpcx/homology.hpp"
#include "simpcx/moves.hpp"

namespace simpcx {

namespace {

// Change in facet count caused by a move A -> B on a d-complex.
int facet_delta(const BistellarMove& m) { return static_cast<int>(m.a.size()) - static_cast<int>(m.b.size()); }

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

}  // namespace

FlipReduction reduce_to_boundary_simplex(const SimplicialComplex& sphere, std::uint64_t seed, int budget) {
  FlipReduction out;
  const int d = sphere.dim();
  if (d < 0) return out;
  std::mt19937_64 rng(seed);
  SimplicialComplex cur = sphere;
  BistellarMove last;
  int stuck = 0;
  int escape = 0;
  while (true) {
    if (static_cast<int>(cur.num_vertices()) == d + 2) {
      out.success = cur == standard_sphere(cur.vertices());
      return out;
    }
    if (out.moves_used >= budget) return out;
    const auto moves = find_proper_moves(cur);
    if (moves.empty()) return out;
    std::vector<BistellarMove> removals, down, up;
    for (const auto& m : moves) {
      if (m.a.size() == 1) removals.push_back(m);
      else if (facet_delta(m) > 0 && !(m.a == last.b && m.b == last.a)) down.push_back(m);
      else up.push_back(m);
    }
    const std::vector<BistellarMove>* pool = nullptr;
    if (escape > 0 && !up.empty()) {
      pool = &up;
      --escape;
    } else if (!removals.empty()) {
      pool = &removals;
    } else if (!down.empty()) {
      pool = &down;
    } else {
      ++stuck;
      escape = static_cast<int>(pick(rng, 1 + stuck / 8));
      pool = up.empty() ? &moves : &up;
    }
    last = (*pool)[pick(rng, pool->size())];
    cur = apply_bistellar(cur, last);
    ++out.moves_used;
  }
}

ManifoldReport check_combinatorial_manifold(const SimplicialComplex& k, std::uint64_t seed, int budget) {
  if (!k.is_pure()) throw Error("not pure");
  ManifoldReport report;
  const int d = k.dim();
  for (std::size_t i = 0; i < k.num_vertices(); ++i) {
    VertexLinkReport r;
    r.vertex = k.vertices()[i];
    const auto lk = link(k, Simplex{r.vertex});
    r.link_is_homology_sphere = is_homology_sphere(lk, d - 1);
    if (r.link_is_homology_sphere) {
      if (d - 1 <= 0) {
        r.reduced_to_boundary_simplex = Tristate::yes;
      } else {
        const auto red = reduce_to_boundary_simplex(lk, seed + i, budget);
        r.moves_used = red.moves_used;
        r.reduced_to_boundary_simplex = red.success ? Tristate::yes : Tristate::undetermined;
      }
    }
    report.links.push_back(r);
  }
  return report;
}

}  // namespace simpcx
