#include "claims.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "simpcx/catalog.hpp"
#include "simpcx/homology.hpp"
#include "simpcx/moves.hpp"
#include "simpcx/product_subdivision.hpp"

namespace simpcx::verifier {

namespace {

const std::string kHomCP2 = "(Z, 0, Z, 0, Z)";
const std::string kHomS2xS2 = "(Z, 0, Z^2, 0, Z)";
const std::string kHomRP2 = "(Z, Z/2, 0)";

class Checks {
 public:
  void add(std::string name, bool pass, std::string detail = "") {
    out_.push_back({std::move(name), pass ? Status::pass : Status::fail, std::move(detail)});
  }
  // Heuristic clauses never fail: a miss is undetermined.
  void heuristic(std::string name, bool reached, std::string detail = "") {
    out_.push_back({std::move(name), reached ? Status::pass : Status::undetermined, std::move(detail)});
  }
  void merge(const CheckList& list) {
    for (const auto& c : list.checks) add(c.name, c.pass, c.detail);
  }
  std::vector<ClaimCheck> take() { return std::move(out_); }

 private:
  std::vector<ClaimCheck> out_;
};

const SimplicialComplex& cx(const char* name) { return get(name).complex; }

std::string join_strings(const std::vector<std::string>& parts, const char* sep = ", ") {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

// Homology after every complex of a trace, compared with `expected`.
void homology_along(Checks& c, const std::string& what, const std::vector<SimplicialComplex>& trace,
                    const std::string& expected) {
  std::size_t bad = 0;
  for (const auto& k : trace) bad += homology(k).str() != expected;
  c.add("homology " + expected + " after every step of " + what, bad == 0,
        std::to_string(trace.size()) + " steps" + (bad ? ", " + std::to_string(bad) + " differ" : ""));
}

std::vector<ClaimCheck> run_thm1_1(const RunOptions&) {
  Checks c;
  const auto p = build_product_cell_complex();
  const auto search = search_equivariant_pure_subdivisions();
  const auto& out = search.results;
  c.add("exactly two subdivisions found", out.size() == 2,
        std::to_string(search.diagonal_patterns) + " equivariant diagonal patterns, " +
            std::to_string(search.edge_pure) + " edge-pure, " + std::to_string(search.prisms_filled) +
            " with prism fills, " + std::to_string(search.candidates) + " complete fills, " +
            std::to_string(out.size()) + " certified");
  const auto tau = transpose_map(all_pair_labels());
  const auto group = PermGroup::generate({tau});
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto tag = "output " + std::to_string(i + 1);
    const auto rep = verify_subdivision(out[i], p);
    c.add(tag + " certified by exact volumes", rep.certified, rep.str());
    c.add(tag + " keeps x_ij <-> x_ji as an automorphism acting purely",
          is_automorphism(out[i], tau) && is_pure_action(out[i], group).is_pure);
    c.add(tag + " has f-vector (16,84,216,240,96)", out[i].f_vector() == FaceVector{16, 84, 216, 240, 96},
          out[i].f_vector().str());
  }
  const auto n16 = std::count(out.begin(), out.end(), cx("S2xS2_16"));
  c.add("one output equals S2xS2_16", n16 == 1);
  if (out.size() == 2) {
    const auto sigma = Permutation::from_index_permutation({2, 1, 3, 4}, all_pair_labels());
    const auto cycles =
        Permutation::from_cycles("(x11 x22)(x13 x23)(x14 x24)(x31 x32)(x41 x42)", all_pair_labels());
    const bool literal = cycles(out[0]) == out[1];
    c.add("outputs related by the suffix transposition (1 2)", sigma(out[0]) == out[1],
          std::string("x_ij -> x_s(i)s(j), s = (1 2); the five-cycle list without (x12 x21) ") +
              (literal ? "also maps one to the other" : "alone is not an isomorphism"));
  }
  return c.take();
}

std::vector<ClaimCheck> run_cor1_2(const RunOptions&) {
  Checks c;
  const auto& s16 = cx("S2xS2_16");
  const auto group = PermGroup::generate({transpose_map(s16.vertices())});
  const auto report = is_pure_action(s16, group);
  c.add("x_ij <-> x_ji acts purely on S2xS2_16", report.is_pure, report.str());
  const auto generated = generate_complex(cp2_10_generators(), cp2_10_basic_facets()).complex;
  c.add("quotient equals the orbit-generated CP2_10", quotient_complex(s16, group) == generated);
  const auto& cp2 = cx("CP2_10");
  c.add("CP2_10 f-vector (10,45,110,120,48)", cp2.f_vector() == FaceVector{10, 45, 110, 120, 48},
        cp2.f_vector().str());
  c.add("CP2_10 is 2-neighbourly", neighborliness(cp2) == 2);
  c.add("CP2_10 homology " + kHomCP2, homology(cp2).str() == kHomCP2, homology(cp2).str());
  const auto aut = automorphism_group(cp2);
  c.add("Aut(CP2_10) has order 12", aut.order() == 12, std::to_string(aut.order()));
  // Subscript permutations act on the orbit labels x_ij, i <= j, as unordered pairs.
  std::vector<Permutation> gens;
  for (const auto& g : a4_index_generators(all_pair_labels())) {
    gens.push_back(Permutation::from_function(cp2.vertices(), [&g](const Label& l) {
      const auto m = g(l);
      return Label::pair(std::min(m.first(), m.second()), std::max(m.first(), m.second()));
    }));
  }
  const auto a4 = PermGroup::generate(gens);
  c.add("Aut(CP2_10) is A4 acting on subscripts", aut.elements() == a4.elements());
  const std::vector<int> a4_profile{1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3};
  c.add("element orders of Aut(CP2_10) match A4", aut.element_order_profile() == a4_profile);
  return c.take();
}

std::vector<ClaimCheck> run_thm1_4(const RunOptions&) {
  Checks c;
  const auto& cp2 = cx("CP2_10");
  std::vector<SimplicialComplex> t1, t2, t3;
  const auto k = apply_script(cp2, builtin_script("T3_i_to_ix"), &t1);
  c.add("moves (i)-(ix) valid; K has 10 vertices", k.num_vertices() == 10, k.f_vector().str());
  homology_along(c, "T3_i_to_ix", t1, kHomCP2);
  const auto l = apply_script(k, builtin_script("T3_x_to_xv"), &t2);
  c.add("moves (x)-(xv) valid; L has 9 vertices", l.num_vertices() == 9, l.f_vector().str());
  c.add("L has f_2 = 84 = C(9,3)", l.f_vector().counts.size() > 2 && l.f_vector().counts[2] == 84);
  c.add("L is 3-neighbourly", neighborliness(l) == 3, std::to_string(neighborliness(l)));
  homology_along(c, "T3_x_to_xv", t2, kHomCP2);
  const auto m = apply_script(k, builtin_script("T3_xvi_to_xix"), &t3);
  c.add("moves (xvi)-(xix) valid; M has 10 vertices", m.num_vertices() == 10, m.f_vector().str());
  homology_along(c, "T3_xvi_to_xix", t3, kHomCP2);
  return c.take();
}

std::vector<ClaimCheck> run_thm1_5(const RunOptions&) {
  Checks c;
  const auto& prime = cx("S2xS2_16_prime");
  std::vector<SimplicialComplex> t1, t2;
  const auto x1 = apply_script(prime, builtin_script("T5_flips"), &t1);
  c.add("four flips valid", x1.f_vector() == prime.f_vector(), x1.f_vector().str());
  c.add("intermediate complex lacks x12x13x14", !x1.contains(Simplex::parse("x12x13x14")));
  const auto lk = link(x1, Simplex::parse("x11"));
  const auto expect = join(cycle(Simplex::parse("x12x13x14").labels()), cycle(Simplex::parse("x21x31x41").labels()));
  c.add("link of x11 is S1_3{x12,x13,x14} * S1_3{x21,x31,x41}", lk == expect);
  const auto x = apply_script(x1, builtin_script("T5_vertex_deletions"), &t2);
  const auto& s12 = cx("S2xS2_12");
  c.add("result equals S2xS2_12 facet for facet", x == s12, x.f_vector().str());
  const auto a4 = a4_index_generators(off_diagonal_labels());
  c.add("six basic facets modulo A4 generate the result",
        generate_complex(a4, s2xs2_12_a4_basic_facets()).complex == x);
  std::vector<SimplicialComplex> trace = t1;
  trace.insert(trace.end(), t2.begin(), t2.end());
  homology_along(c, "the flips and vertex deletions", trace, kHomS2xS2);

  const auto aut = automorphism_group(s12);
  c.add("Aut(S2xS2_12) has order 240", aut.order() == 240, std::to_string(aut.order()));
  c.add("Aut(S2xS2_12) has an element of order 12", aut.max_element_order() >= 12,
        "max order " + std::to_string(aut.max_element_order()));
  const auto g = s2xs2_12_generators().front();
  const auto center = aut.center();
  const bool g6 = std::find(center.begin(), center.end(), g.pow(6)) != center.end();
  c.add("g has order 12 and g^6 is central", aut.contains(g) && g.order() == 12 && g6,
        "center order " + std::to_string(center.size()));
  return c.take();
}

std::vector<ClaimCheck> run_lem5_2(const RunOptions&) {
  Checks c;
  const ProductCell prism{{1, 2, 3}, {1, 2}};
  auto a = [](int r) { return Label::pair(r, 1); };
  auto b = [](int r) { return Label::pair(r, 2); };
  const auto stairs = staircase(prism, {1, 2, 3}, {1, 2});
  std::vector<Simplex> canonical{Simplex{a(1), b(1), b(2), b(3)}, Simplex{a(1), a(2), b(2), b(3)},
                                 Simplex{a(1), a(2), a(3), b(3)}};
  std::sort(canonical.begin(), canonical.end());
  auto sorted = stairs;
  std::sort(sorted.begin(), sorted.end());
  c.add("a staircase has 3 simplices: a1b1b2b3, a1a2b2b3, a1a2a3b3", sorted == canonical);
  const auto all = staircase_triangulations(prism);
  c.add("6 staircase triangulations over index orders", all.size() == 6, std::to_string(all.size()));

  const auto canonical_boundary = boundary(SimplicialComplex::from_facets(canonical));
  const auto& octa = cx("S1_6_octa");
  int one = 0, none = 0, other = 0;
  bool exhaustive_agrees = true, shapes = true;
  const std::vector<std::pair<int, int>> edges{{1, 2}, {1, 3}, {2, 3}};
  for (int pattern = 0; pattern < 8; ++pattern) {
    std::vector<Simplex> tris{Simplex{a(1), a(2), a(3)}, Simplex{b(1), b(2), b(3)}};
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto [i, j] = edges[e];
      const Simplex d = (pattern >> e & 1) ? Simplex{a(i), b(j)} : Simplex{a(j), b(i)};
      for (const auto& v : {a(i), a(j), b(i), b(j)}) {
        if (!d.contains(v)) tris.push_back(d.with(v));
      }
    }
    const auto bd = SimplicialComplex::from_facets(tris);
    const auto fills = prism_fills(prism, bd);
    exhaustive_agrees = exhaustive_agrees && fills == cell_fills(prism, bd);
    if (fills.size() == 1) {
      ++one;
      shapes = shapes && are_isomorphic(bd, canonical_boundary);
    } else if (fills.empty()) {
      ++none;
      shapes = shapes && are_isomorphic(bd, octa);
    } else {
      ++other;
    }
  }
  c.add("6 of 8 diagonal patterns have exactly one fill, 2 have none", one == 6 && none == 2 && other == 0,
        std::to_string(one) + " with one, " + std::to_string(none) + " with none");
  c.add("fillable boundaries match the canonical fill, the others are octahedra", shapes);
  c.add("exhaustive search finds no fill beyond the staircases", exhaustive_agrees);
  return c.take();
}

std::vector<ClaimCheck> run_lem5_3(const RunOptions&) {
  Checks c;
  const auto& i1 = cx("I1_fig2");
  const auto& i2 = cx("I2_fig2");
  bool icos = true;
  try {
    require_icosahedron(i1);
    require_icosahedron(i2);
  } catch (const Error&) {
    icos = false;
  }
  c.add("both complexes are icosahedra", icos);
  c.add("transcribed right-hand icosahedron equals the distance-2 complex",
        clique_complex(fig2_right_edges()) == i2);
  c.add("identity on labels is an antimorphism", check_antimorphism(Permutation::identity(i1.vertices()).as_map(), i1, i2));
  const auto anti1 = icosahedron_antipodal_map(i1);
  c.add("same antipodal pairs", anti1 == icosahedron_antipodal_map(i2));

  const auto aut1 = automorphism_group(i1);
  const auto aut2 = automorphism_group(i2);
  c.add("Aut(I1) = Aut(I2) as sets", aut1.elements() == aut2.elements(), "order " + std::to_string(aut1.order()));
  const auto center = aut1.center();
  c.add("order 120 with the antipodal map central",
        aut1.order() == 120 && center.size() == 2 && std::find(center.begin(), center.end(), anti1) != center.end());

  const auto t = phi_psi({i1, i2});
  std::set<Simplex> images;
  for (const auto& [d, e] : t.phi) images.insert(e);
  c.add("phi defined and unique on all 20 triangles, bijective", t.phi.size() == 20 && images.size() == 20);
  c.add("phi(x12x13x14) = x21x31x41", t.phi.at(Simplex::parse("x12x13x14")) == Simplex::parse("x21x31x41"));
  bool round1 = true, round2 = true;
  for (const auto& [d, e] : t.phi) round1 = round1 && t.psi.at(e) == anti1(d);
  for (const auto& [e, d] : t.psi) round2 = round2 && t.phi.at(d) == anti1(e);
  c.add("psi o phi is the antipodal map on triangles of I1", round1);
  c.add("phi o psi is the antipodal map on triangles of I2", round2);

  const auto isos = all_isomorphisms(i1, i2);
  bool intertwine = true;
  for (const auto& f : isos) {
    for (const auto& [d, e] : t.phi) intertwine = intertwine && t.psi.at(f(d)) == f(e);
  }
  c.add("all isomorphisms I1 -> I2 intertwine phi and psi", isos.size() == 120 && intertwine,
        std::to_string(isos.size()) + " isomorphisms");
  std::vector<VertexMap> candidates(isos.begin(), isos.end());
  for (const auto& g : aut1.elements()) candidates.push_back(g.as_map());
  const auto induced = std::count_if(candidates.begin(), candidates.end(), [&t](const VertexMap& f) {
    return std::all_of(t.phi.begin(), t.phi.end(), [&f](const auto& de) { return f(de.first) == de.second; });
  });
  c.add("phi induced by none of the automorphisms and isomorphisms", induced == 0,
        std::to_string(candidates.size()) + " vertex maps tried");
  c.add("pair construction equals S2xS2_12", build_s2xs2_12_from_pair({i1, i2}, t) == cx("S2xS2_12"));
  return c.take();
}

std::vector<ClaimCheck> run_rem5_5(const RunOptions&) {
  Checks c;
  // A flip A -> B as the ball swap (A * dB, B * dA).
  const auto& cp2 = cx("CP2_10");
  const auto a = Simplex::parse("x22x33x44");
  const auto b = Simplex::parse("x23x24x34");
  const auto d = join(SimplicialComplex::closure(a), simplex_boundary(b));
  const auto dhat = join(SimplicialComplex::closure(b), simplex_boundary(a));
  c.add("ball swap (A*dB, B*dA) equals the flip x22x33x44 -> x23x24x34",
        apply_gbm(cp2, d, dhat) == apply_bistellar(cp2, a, b));

  auto cur = apply_script(cx("S2xS2_16_prime"), builtin_script("T5_flips"));
  for (const auto& step : builtin_script("T5_vertex_deletions").steps) {
    const auto hat = step.dhat.facets();
    Simplex xyz = hat.front();
    for (const auto& f : hat) xyz = xyz.minus(xyz.minus(f));
    std::vector<Label> abc;
    for (const auto& l : step.dhat.vertices()) {
      if (!xyz.contains(l)) abc.push_back(l);
    }
    std::vector<Label> gone;
    for (const auto& l : step.d.vertices()) {
      if (step.dhat.index_of(l) < 0) gone.push_back(l);
    }
    if (gone.size() != 1 || xyz.size() != 3 || abc.size() != 3) {
      c.add("vertex-deleting move has the shape star(u) -> xyz * S1_3(abc)", false, step.str());
      return c.take();
    }
    const auto u = gone.front();
    const auto after = apply_gbm(cur, step.d, step.dhat);
    auto flipped = cur;
    std::vector<std::string> moves;
    for (const auto& m : vertex_deletion_flips(u, xyz, abc)) {
      flipped = apply_bistellar(flipped, m);
      moves.push_back(m.str());
    }
    c.add("deleting " + u.compact() + ": three flips equal the ball swap", flipped == after, join_strings(moves));
    cur = after;
  }
  return c.take();
}

std::vector<ClaimCheck> run_sec3_joins(const RunOptions&) {
  Checks c;
  c.merge(verify_join_embeddings());
  return c.take();
}

std::vector<ClaimCheck> run_sec3_quadruples(const RunOptions&) {
  Checks c;
  const auto census = quadruple_census(cx("Icosa_fig1"));
  c.add("five antipodal pairs of triangle quadruples", census.pairs.size() == 5, std::to_string(census.pairs.size()));
  c.add("Aut(icosahedron) has order 120", census.aut_order == 120, std::to_string(census.aut_order));
  c.add("Aut transitive on the pairs", census.orbit_count == 1, std::to_string(census.orbit_count) + " orbits");
  c.add("stabilizer of a pair has order 24", census.first_stabilizer_order == 24,
        std::to_string(census.first_stabilizer_order));
  return c.take();
}

std::vector<ClaimCheck> run_sec4_census(const RunOptions&) {
  Checks c;
  const auto p = build_product_cell_complex();
  c.add("S2_4 x S2_4 has cells (16,48,68,48,16)", p.counts() == FaceVector{16, 48, 68, 48, 16}, p.counts().str());
  const auto census = cw_quotient_census();
  c.add("quotient cells (10,24,31,24,10)", census.counts == FaceVector{10, 24, 31, 24, 10}, census.counts.str());
  c.add("4 regular and 6 singular 4-cells", census.regular_4cells == 4 && census.singular_4cells == 6,
        std::to_string(census.regular_4cells) + " regular, " + std::to_string(census.singular_4cells) + " singular");
  bool folded = census.folded_2cells.size() == 6;
  for (const auto& f : census.folded_2cells) folded = folded && f.a == f.b && f.a.size() == 2;
  c.add("the 6 squares E x E fold into 3-cells", folded);
  const auto chi = euler_characteristic(cx("CP2_10"));
  c.add("99 cells, alternating sum 3 = chi(CP2_10)",
        census.total() == 99 && census.alternating_sum() == 3 && chi == 3,
        std::to_string(census.total()) + " cells, alternating sum " + std::to_string(census.alternating_sum()));
  c.add("CP2_10 facets are images of facets of S2xS2_16 inside 4-cells",
        quotient_refines_cells(cx("S2xS2_16"), cx("CP2_10")));
  return c.take();
}

std::vector<ClaimCheck> run_props_s2xs2_12(const RunOptions&) {
  Checks c;
  const auto& k = cx("S2xS2_12");
  c.add("f-vector (12,60,160,180,72)", k.f_vector() == FaceVector{12, 60, 160, 180, 72}, k.f_vector().str());
  c.merge(structural_report_s2xs2_12());
  const auto moves = find_proper_moves(k);
  std::set<Simplex> targets;
  std::size_t low = 0;
  for (const auto& m : moves) {
    targets.insert(m.b);
    low += m.a.dim() <= k.dim() - 2;
  }
  std::vector<std::string> names;
  for (const auto& t : targets) names.push_back(t.str());
  c.add("no proper bistellar moves", moves.empty(),
        moves.empty() ? "" : std::to_string(moves.size()) + " moves tetrahedron -> edge onto the non-edges " +
                                 join_strings(names) + "; first " + moves.front().str());
  c.add("no proper move from a face of dimension <= 2", low == 0,
        "so no move keeps or lowers the number of facets");
  c.add("homology " + kHomS2xS2, homology(k).str() == kHomS2xS2, homology(k).str());
  return c.take();
}

std::vector<ClaimCheck> run_manifold_all(const RunOptions& opts) {
  Checks c;
  const std::vector<std::pair<const char*, const std::string*>> expected{
      {"CP2_10", &kHomCP2}, {"S2xS2_16", &kHomS2xS2}, {"S2xS2_16_prime", &kHomS2xS2},
      {"S2xS2_12", &kHomS2xS2}, {"RP2_6", &kHomRP2}};
  for (const auto& [name, hom] : expected) {
    const auto h = homology(cx(name)).str();
    c.add(std::string(name) + " homology " + *hom, h == *hom, h);
  }
  c.add("both Smith form routes agree on CP2_10",
        homology(cx("CP2_10"), SnfMethod::bezout_echelon).str() == homology(cx("CP2_10")).str());
  for (const char* name : {"CP2_10", "S2xS2_12"}) {
    const auto rep = check_combinatorial_manifold(cx(name), opts.seed);
    int most = 0;
    for (const auto& l : rep.links) most = std::max(most, l.moves_used);
    c.add(std::string("vertex links of ") + name + " are homology 3-spheres", rep.all_links_homology_spheres());
    c.heuristic(std::string("vertex links of ") + name + " flip down to the boundary of a 4-simplex",
                rep.all_links_reduced(),
                std::to_string(rep.links.size()) + " links, at most " + std::to_string(most) + " moves, seed " +
                    std::to_string(opts.seed));
  }
  return c.take();
}

ClaimResult execute(const Claim& claim, const RunOptions& opts) {
  ClaimResult r{claim.id, claim.title, Status::pass, {}, 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    r.checks = claim.runner(opts);
  } catch (const std::exception& e) {
    r.checks.push_back({"runner completed", Status::fail, e.what()});
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  for (const auto& ch : r.checks) {
    if (ch.status == Status::fail) r.status = Status::fail;
    else if (ch.status == Status::undetermined && r.status == Status::pass) r.status = Status::undetermined;
  }
  return r;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::undetermined: return "undetermined";
  }
  return "?";
}

const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims{
      {"thm1.1", "two tau-stable pure subdivisions of S2_4 x S2_4, isomorphic, one is S2xS2_16", run_thm1_1},
      {"cor1.2", "CP2_10 = S2xS2_16 / tau with Aut = A4", run_cor1_2},
      {"thm1.4", "CP2_10 flips to 10-vertex K, 9-vertex 3-neighbourly L and M", run_thm1_4},
      {"thm1.5", "S2xS2_16' moves to S2xS2_12; Aut of order 240 with an element of order 12", run_thm1_5},
      {"lem5.2", "prism triangle x edge: unique fill determined by its boundary", run_lem5_2},
      {"lem5.3", "antimorphic icosahedra: common Aut, phi and psi, intertwining", run_lem5_3},
      {"rem5.5", "vertex-deleting ball swap equals three flips", run_rem5_5},
      {"sec3.joins", "S2xS2_16 in S2_4 * I and CP2_10 in S2_4 * RP2_6", run_sec3_joins},
      {"sec3.quadruples", "five antipodal triangle-quadruple pairs of the icosahedron", run_sec3_quadruples},
      {"sec4.census", "quotient cell structure (10,24,31,24,10) of CP2", run_sec4_census},
      {"props.s2xs2_12", "structure of S2xS2_12: degrees, links, degree-3 triangles, moves", run_props_s2xs2_12},
      {"manifold.all", "homology and combinatorial-manifold checks", run_manifold_all},
  };
  return claims;
}

const Claim* find_claim(std::string_view id) {
  for (const auto& c : registry()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::vector<ClaimResult> run_claims(const std::vector<std::string>& ids, const RunOptions& opts) {
  std::vector<const Claim*> todo;
  for (const auto& id : ids) {
    if (id == "all") {
      for (const auto& c : registry()) todo.push_back(&c);
    } else if (const auto* c = find_claim(id)) {
      todo.push_back(c);
    } else {
      throw std::invalid_argument("unknown claim id: " + id);
    }
  }
  std::vector<ClaimResult> results(todo.size());
  unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(todo.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < todo.size(); i = next++) results[i] = execute(*todo[i], opts);
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

Status overall(const std::vector<ClaimResult>& results) {
  Status s = Status::pass;
  for (const auto& r : results) {
    if (r.status == Status::fail) return Status::fail;
    if (r.status == Status::undetermined) s = Status::undetermined;
  }
  return s;
}

std::string render_text(const std::vector<ClaimResult>& results, bool timing) {
  std::ostringstream out;
  int n[3] = {0, 0, 0};
  for (const auto& r : results) {
    ++n[static_cast<int>(r.status)];
    std::string tag = to_string(r.status);
    std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
    out << "[" << tag << "] " << r.id << "  " << r.title;
    if (timing) out << "  (" << static_cast<long long>(r.elapsed_ms) << " ms)";
    out << "\n";
    for (const auto& ch : r.checks) {
      const char* mark = ch.status == Status::pass ? "ok  " : (ch.status == Status::fail ? "FAIL" : "??  ");
      out << "    " << mark << "  " << ch.name;
      if (!ch.detail.empty()) out << "  [" << ch.detail << "]";
      out << "\n";
    }
  }
  out << "summary: " << n[0] << " pass, " << n[1] << " fail, " << n[2] << " undetermined\n";
  return out.str();
}

std::string render_json(const std::vector<ClaimResult>& results, const RunOptions& opts, bool timing) {
  nlohmann::ordered_json doc;
  doc["seed"] = opts.seed;
  doc["claims"] = nlohmann::ordered_json::array();
  int n[3] = {0, 0, 0};
  for (const auto& r : results) {
    ++n[static_cast<int>(r.status)];
    nlohmann::ordered_json claim{{"id", r.id}, {"title", r.title}, {"status", to_string(r.status)}};
    if (timing) claim["elapsed_ms"] = static_cast<long long>(r.elapsed_ms);
    claim["checks"] = nlohmann::ordered_json::array();
    for (const auto& ch : r.checks) {
      claim["checks"].push_back({{"name", ch.name}, {"status", to_string(ch.status)}, {"detail", ch.detail}});
    }
    doc["claims"].push_back(std::move(claim));
  }
  doc["summary"] = {{"pass", n[0]}, {"fail", n[1]}, {"undetermined", n[2]}};
  return doc.dump(2) + "\n";
}

}  // namespace simpcx::verifier
