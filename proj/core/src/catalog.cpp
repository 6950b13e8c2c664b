#include "simpcx/catalog.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <mutex>
#include <set>

#include "simpcx/moves.hpp"

namespace simpcx {

void CheckList::add(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

bool CheckList::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

std::vector<Simplex> parse_all(std::initializer_list<const char*> texts) {
  std::vector<Simplex> out;
  for (const char* t : texts) out.push_back(Simplex::parse(t));
  return out;
}

std::vector<Label> diagonal_labels() {
  std::vector<Label> out;
  for (int i = 1; i <= 4; ++i) out.push_back(Label::pair(i, i));
  return out;
}

std::vector<Label> atoms(std::initializer_list<const char*> names) {
  std::vector<Label> out;
  for (const char* n : names) out.push_back(Label::atom(n));
  return out;
}

SimplicialComplex octahedron() {
  const auto v = atoms({"a1", "b1", "a2", "b2", "a3", "b3"});
  auto k = standard_sphere({v[0], v[1]});
  k = join(k, standard_sphere({v[2], v[3]}));
  return join(k, standard_sphere({v[4], v[5]}));
}

struct Recipe {
  std::string text;
  std::function<SimplicialComplex()> make;
  FaceVector expected;
};

const std::map<std::string, Recipe>& recipes() {
  static const std::map<std::string, Recipe> table = {
      {"S2_4", {"boundary of the tetrahedron on x11 x22 x33 x44",
                [] { return standard_sphere(diagonal_labels()); }, {4, 6, 4}}},
      {"Icosa_fig1", {"clique complex of the row/column/even-permutation edge rule", icosahedron_fig1, {12, 30, 20}}},
      {"RP2_6", {"Icosa_fig1 modulo the antipodal map x_ij <-> x_ji",
                 [] {
                   const auto& ico = get("Icosa_fig1").complex;
                   return quotient_complex(ico, PermGroup::generate({transpose_map(ico.vertices())}));
                 },
                 {6, 15, 10}}},
      {"S2xS2_16", {"orbits of 5 basic facets under <alpha, beta, tau> (A4 x Z2)",
                    [] { return generate_complex(s2xs2_16_generators(), s2xs2_16_basic_facets()).complex; },
                    {16, 84, 216, 240, 96}}},
      {"CP2_10", {"S2xS2_16 modulo tau, vertices x_ij, x_ji -> x_{min,max}",
                  [] {
                    const auto& k = get("S2xS2_16").complex;
                    return quotient_complex(k, PermGroup::generate({transpose_map(k.vertices())}));
                  },
                  {10, 45, 110, 120, 48}}},
      {"S2xS2_16_prime", {"orbits of 8 basic facets under A4 acting on both subscripts",
                          [] {
                            return generate_complex(a4_index_generators(all_pair_labels()),
                                                    s2xs2_16_prime_basic_facets())
                                .complex;
                          },
                          {16, 84, 216, 240, 96}}},
      {"S2xS2_12", {"orbits of 2 basic facets under <g, h>",
                    [] { return generate_complex(s2xs2_12_generators(), s2xs2_12_basic_facets()).complex; },
                    {12, 60, 160, 180, 72}}},
      {"I1_fig2", {"clique complex of the transcribed left icosahedron",
                   [] { return clique_complex(fig2_left_edges()); }, {12, 30, 20}}},
      {"I2_fig2", {"distance-2 complex of I1_fig2", [] { return distance2_complex(get("I1_fig2").complex); },
                   {12, 30, 20}}},
      {"S2_8", {"octahedron starred in a1a2a3 (vertex c) and b1b2b3 (vertex d)",
                [] {
                  auto k = star_vertex(octahedron(), Simplex(atoms({"a1", "a2", "a3"})), Label::atom("c"));
                  return star_vertex(k, Simplex(atoms({"b1", "b2", "b3"})), Label::atom("d"));
                },
                {8, 18, 12}}},
      {"S1_6_octa", {"join of three 0-spheres {a1,b1} * {a2,b2} * {a3,b3}", octahedron, {6, 12, 8}}},
      {"S2_6_alt", {"explicit triangles: boundary of the staircase prism a1b1b2b3, a1a2b2b3, a1a2a3b3",
                    [] {
                      std::vector<Simplex> t;
                      for (const char* tri : {"b3 b1 a1", "b3 a1 a3", "b3 a3 a2", "b3 a2 b2", "a1 a3 a2",
                                              "a1 a2 b2", "a1 b1 b2", "b1 b2 b3"}) {
                        t.push_back(Simplex::parse(tri, Label::Kind::atom));
                      }
                      return SimplicialComplex::from_facets(t);
                    },
                    {6, 12, 8}}},
  };
  return table;
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"S2_4", "Icosa_fig1", "RP2_6", "S2xS2_16", "CP2_10", "S2xS2_16_prime",
          "S2xS2_12", "I1_fig2", "I2_fig2", "S2_8", "S1_6_octa", "S2_6_alt"};
}

NamedComplex build(const std::string& name) {
  const auto it = recipes().find(name);
  if (it == recipes().end()) throw Error("unknown complex: " + name);
  NamedComplex out{name, it->second.make(), it->second.text};
  const auto f = out.complex.f_vector();
  if (f != it->second.expected) {
    throw Error("catalog: " + name + " has f-vector " + f.str() + ", expected " + it->second.expected.str());
  }
  return out;
}

const NamedComplex& get(const std::string& name) {
  // Recipes may call get() for their ingredients, so the lock is recursive.
  static std::recursive_mutex mu;
  static std::map<std::string, NamedComplex> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, build(name)).first;
  return it->second;
}

Permutation transpose_map(const std::vector<Label>& domain) {
  return Permutation::from_function(domain, [](const Label& l) {
    return l.kind() == Label::Kind::pair ? Label::pair(l.second(), l.first()) : l;
  });
}

std::vector<Permutation> a4_index_generators(const std::vector<Label>& domain) {
  return {Permutation::from_index_permutation({2, 3, 1, 4}, domain),
          Permutation::from_index_permutation({2, 1, 4, 3}, domain)};
}

std::vector<Permutation> s2xs2_16_generators() {
  auto gens = a4_index_generators(all_pair_labels());
  gens.push_back(transpose_map(all_pair_labels()));
  return gens;
}

std::vector<Simplex> s2xs2_16_basic_facets() {
  return parse_all({"x11x22x33x12x13", "x11x22x12x14x34", "x11x22x14x24x34", "x11x22x21x24x31",
                    "x11x22x24x31x34"});
}

std::vector<Permutation> cp2_10_generators() {
  const auto dom = upper_pair_labels();
  return {Permutation::from_cycles("(x11x22x33)(x23x13x12)(x24x34x14)", dom),
          Permutation::from_cycles("(x11x22)(x33x44)(x24x13)(x14x23)", dom)};
}

std::vector<Simplex> cp2_10_basic_facets() {
  return parse_all({"x11x22x33x12x13", "x11x22x12x14x34", "x11x22x14x24x34", "x11x22x12x13x24",
                    "x11x22x13x24x34"});
}

std::vector<Simplex> s2xs2_16_prime_basic_facets() {
  return parse_all({"x11x12x13x21x31", "x11x12x14x21x31", "x11x13x14x21x31", "x12x13x23x31x32",
                    "x12x14x21x24x31", "x12x14x24x31x34", "x12x21x24x31x32", "x12x24x31x32x34"});
}

std::vector<Permutation> s2xs2_12_generators() {
  const auto dom = off_diagonal_labels();
  return {Permutation::from_cycles("(x12 x21 x24 x42 x14 x41 x43 x34 x13 x31 x32 x23)", dom),
          Permutation::from_cycles("(x12 x14 x21 x24 x31)(x13 x42 x43 x32 x34)", dom)};
}

std::vector<Simplex> s2xs2_12_basic_facets() { return parse_all({"x12x14x21x24x31", "x12x13x14x21x31"}); }

std::vector<Simplex> s2xs2_12_a4_basic_facets() {
  return parse_all({"x12x14x21x24x31", "x12x13x14x21x31", "x12x23x31x13x32", "x12x31x34x14x24",
                    "x24x31x32x12x21", "x24x31x32x12x41"});
}

SimplicialComplex clique_complex(const std::vector<Simplex>& edges, int max_dim) {
  std::set<Label> verts;
  for (const auto& e : edges) verts.insert(e.begin(), e.end());
  const std::vector<Label> v(verts.begin(), verts.end());
  const std::size_t n = v.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  auto idx = [&v](const Label& l) { return std::lower_bound(v.begin(), v.end(), l) - v.begin(); };
  for (const auto& e : edges) {
    if (e.size() != 2) throw Error("clique_complex: not an edge: " + e.str());
    adj[idx(e[0])][idx(e[1])] = adj[idx(e[1])][idx(e[0])] = true;
  }
  std::vector<Simplex> faces;
  // Grow cliques vertex by vertex in increasing index order.
  std::function<void(std::vector<std::size_t>&)> grow = [&](std::vector<std::size_t>& cur) {
    std::vector<Label> labels;
    for (std::size_t i : cur) labels.push_back(v[i]);
    faces.emplace_back(std::move(labels));
    if (static_cast<int>(cur.size()) == max_dim + 1) return;
    for (std::size_t j = cur.empty() ? 0 : cur.back() + 1; j < n; ++j) {
      if (std::all_of(cur.begin(), cur.end(), [&](std::size_t i) { return adj[i][j]; })) {
        cur.push_back(j);
        grow(cur);
        cur.pop_back();
      }
    }
  };
  std::vector<std::size_t> start;
  for (std::size_t i = 0; i < n; ++i) {
    start = {i};
    grow(start);
  }
  return SimplicialComplex::from_faces(std::move(faces));
}

SimplicialComplex icosahedron_fig1() {
  std::vector<Simplex> edges;
  for (const auto& a : off_diagonal_labels()) {
    for (const auto& b : off_diagonal_labels()) {
      if (!(a < b)) continue;
      const bool same_row = a.first() == b.first();
      const bool same_col = a.second() == b.second();
      bool even = false;
      const int p[4] = {a.first(), a.second(), b.first(), b.second()};
      if (std::set<int>(p, p + 4).size() == 4) {
        int inversions = 0;
        for (int i = 0; i < 4; ++i) {
          for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
        }
        even = inversions % 2 == 0;
      }
      if (same_row || same_col || even) edges.push_back(Simplex{a, b});
    }
  }
  auto ico = clique_complex(edges);
  require_icosahedron(ico);
  return ico;
}

std::vector<Simplex> fig2_left_edges() {
  return parse_all({"x41x34", "x41x43", "x41x13", "x41x42", "x34x13", "x34x12", "x13x42", "x13x12",
                    "x13x14", "x42x43", "x42x14", "x42x21", "x43x21", "x14x12", "x14x21", "x14x23",
                    "x23x12", "x23x21", "x31x12", "x31x23", "x31x24", "x24x21", "x24x23", "x34x31",
                    "x43x24", "x41x32", "x34x32", "x43x32", "x31x32", "x24x32"});
}

std::vector<Simplex> fig2_right_edges() {
  // The right drawing carries, at each position of the left drawing, the label
  // given by this table.
  const std::map<std::string, std::string> at_position = {
      {"x23", "x12"}, {"x41", "x43"}, {"x12", "x21"}, {"x14", "x41"}, {"x21", "x24"}, {"x24", "x42"},
      {"x31", "x32"}, {"x34", "x13"}, {"x13", "x31"}, {"x42", "x14"}, {"x43", "x34"}, {"x32", "x23"}};
  std::vector<Simplex> out;
  for (const auto& e : fig2_left_edges()) {
    out.push_back(Simplex{Label::parse(at_position.at(e[0].compact())), Label::parse(at_position.at(e[1].compact()))});
  }
  return out;
}

void require_icosahedron(const SimplicialComplex& k) {
  const bool shape = k.f_vector() == FaceVector{12, 30, 20} && k.is_pure() && is_weak_pseudomanifold(k) &&
                     connected_components(k) == 1;
  if (!shape) throw Error("not an icosahedron");
  for (const auto& v : k.vertices()) {
    if (face_degree(k, Simplex{v}) != 5) throw Error("not an icosahedron");
  }
}

std::vector<std::vector<int>> graph_distances(const SimplicialComplex& k) {
  const std::size_t n = k.num_vertices();
  std::vector<std::vector<int>> adj(n);
  for (VertexMask e : k.face_masks(1)) {
    const int a = std::countr_zero(e);
    const int b = std::countr_zero(e & (e - 1));
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<int> q{static_cast<int>(s)};
    dist[s][s] = 0;
    while (!q.empty()) {
      const int u = q.front();
      q.pop_front();
      for (int w : adj[u]) {
        if (dist[s][w] < 0) {
          dist[s][w] = dist[s][u] + 1;
          q.push_back(w);
        }
      }
    }
  }
  return dist;
}

Permutation icosahedron_antipodal_map(const SimplicialComplex& ico) {
  require_icosahedron(ico);
  const auto dist = graph_distances(ico);
  std::map<Label, Label> m;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    for (std::size_t j = 0; j < dist.size(); ++j) {
      if (dist[i][j] == 3) m[ico.vertices()[i]] = ico.vertices()[j];
    }
  }
  return Permutation::from_map(m);
}

std::vector<QuadruplePair> antipodal_quadruple_pairs(const SimplicialComplex& ico) {
  const auto anti = icosahedron_antipodal_map(ico);
  const auto triangles = ico.face_masks(2);
  const VertexMask all = (VertexMask{1} << ico.num_vertices()) - 1;
  std::vector<std::vector<VertexMask>> partitions;
  std::vector<VertexMask> cur;
  // Each partition is found once by always covering the lowest uncovered vertex.
  std::function<void(VertexMask)> cover = [&](VertexMask used) {
    if (used == all) {
      partitions.push_back(cur);
      return;
    }
    const VertexMask low = ~used & (used + 1);
    for (VertexMask t : triangles) {
      if ((t & low) && !(t & used)) {
        cur.push_back(t);
        cover(used | t);
        cur.pop_back();
      }
    }
  };
  cover(0);
  auto as_simplices = [&ico](const std::vector<VertexMask>& q) {
    std::vector<Simplex> out;
    for (VertexMask t : q) out.push_back(ico.simplex_of(t));
    std::sort(out.begin(), out.end());
    return out;
  };
  std::set<std::vector<Simplex>> seen;
  std::vector<QuadruplePair> out;
  for (const auto& p : partitions) {
    const auto first = as_simplices(p);
    std::vector<Simplex> second;
    for (const auto& t : first) second.push_back(anti(t));
    std::sort(second.begin(), second.end());
    if (first == second || seen.count(first)) continue;
    seen.insert(first);
    seen.insert(second);
    out.push_back({first, second});
  }
  return out;
}

QuadrupleCensus quadruple_census(const SimplicialComplex& ico) {
  QuadrupleCensus c;
  c.pairs = antipodal_quadruple_pairs(ico);
  const auto aut = automorphism_group(ico);
  c.aut_order = aut.order();
  auto key = [](std::vector<Simplex> a, std::vector<Simplex> b) {
    if (b < a) std::swap(a, b);
    return std::make_pair(a, b);
  };
  auto image = [&key](const Permutation& g, const QuadruplePair& p) {
    std::vector<Simplex> a, b;
    for (const auto& t : p.first) a.push_back(g(t));
    for (const auto& t : p.second) b.push_back(g(t));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return key(a, b);
  };
  std::map<std::pair<std::vector<Simplex>, std::vector<Simplex>>, std::size_t> index;
  for (std::size_t i = 0; i < c.pairs.size(); ++i) index[key(c.pairs[i].first, c.pairs[i].second)] = i;
  std::vector<bool> done(c.pairs.size(), false);
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    if (done[i]) continue;
    ++c.orbit_count;
    for (const auto& g : aut.elements()) {
      const auto it = index.find(image(g, c.pairs[i]));
      if (it == index.end()) throw Error("quadruple census: automorphism leaves the set of pairs");
      done[it->second] = true;
    }
  }
  if (!c.pairs.empty()) {
    const auto k0 = key(c.pairs[0].first, c.pairs[0].second);
    for (const auto& g : aut.elements()) c.first_stabilizer_order += image(g, c.pairs[0]) == k0;
  }
  return c;
}

SimplicialComplex distance2_complex(const SimplicialComplex& i1) {
  require_icosahedron(i1);
  const auto dist = graph_distances(i1);
  std::vector<Simplex> edges;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    for (std::size_t j = i + 1; j < dist.size(); ++j) {
      if (dist[i][j] == 2) edges.push_back(Simplex{i1.vertices()[i], i1.vertices()[j]});
    }
  }
  auto i2 = clique_complex(edges);
  require_icosahedron(i2);
  return i2;
}

bool check_antimorphism(const VertexMap& f, const SimplicialComplex& i1, const SimplicialComplex& i2) {
  const auto d1 = graph_distances(i1);
  const auto d2 = graph_distances(i2);
  const auto& v = i1.vertices();
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = 0; b < v.size(); ++b) {
      const int fa = i2.index_of(f(v[a]));
      const int fb = i2.index_of(f(v[b]));
      if (fa < 0 || fb < 0) return false;
      const int x = d1[a][b];
      const int y = d2[fa][fb];
      if ((x == 1) != (y == 2) || (x == 2) != (y == 1)) return false;
    }
  }
  return true;
}

namespace {

// For a triangle t of `host`, the third vertices of the triangles sharing an
// edge with t.
std::vector<Label> edge_neighbours(const SimplicialComplex& host, const Simplex& t) {
  std::vector<Label> out;
  for (const auto& v : t) {
    const Simplex e = t.without(v);
    const auto lk = link(host, e);
    for (const auto& l : lk.vertices()) {
      if (l != v) out.push_back(l);
    }
  }
  return out;
}

std::map<Simplex, Simplex> triangle_correspondence(const SimplicialComplex& from, const SimplicialComplex& to,
                                                   const char* name) {
  std::map<Simplex, Simplex> out;
  const auto targets = to.faces(2);
  for (const auto& d : from.faces(2)) {
    std::vector<Simplex> hits;
    for (const auto& t : targets) {
      const auto third = edge_neighbours(to, t);
      if (third.size() == 3 &&
          std::all_of(third.begin(), third.end(), [&d](const Label& l) { return d.contains(l); })) {
        hits.push_back(t);
      }
    }
    if (hits.size() != 1) {
      throw Error(std::string(name) + ": triangle " + d.str() + " has " + std::to_string(hits.size()) +
                  " candidates");
    }
    out[d] = hits.front();
  }
  return out;
}

}  // namespace

TriangleBijection phi_psi(const IcosahedronPair& pair) {
  return {triangle_correspondence(pair.i1, pair.i2, "phi"), triangle_correspondence(pair.i2, pair.i1, "psi")};
}

SimplicialComplex build_s2xs2_12_from_pair(const IcosahedronPair& pair, const TriangleBijection& t) {
  std::vector<Simplex> facets;
  for (const auto& v : pair.i1.vertices()) facets.emplace_back(link(pair.i1, Simplex{v}).vertices());
  for (const auto& [d, d2] : t.phi) {
    const Simplex both = d.united(d2);
    for (const auto& y : d2) facets.push_back(both.without(y));
  }
  for (const auto& f : facets) {
    if (f.size() != 5) throw Error("pair construction: facet " + f.str() + " does not have 5 vertices");
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

CheckList verify_join_embeddings() {
  CheckList out;
  const auto& s24 = get("S2_4").complex;
  const auto& ico = get("Icosa_fig1").complex;
  const auto& rp2 = get("RP2_6").complex;
  const auto& s16 = get("S2xS2_16").complex;
  const auto& cp2 = get("CP2_10").complex;
  auto inside = [](const SimplicialComplex& k, const SimplicialComplex& host, const char* what, CheckList& list) {
    std::size_t bad = 0;
    std::string first;
    for (const auto& f : k.facets()) {
      if (!host.contains(f)) {
        if (!bad++) first = f.str();
      }
    }
    list.add(what, bad == 0,
             bad ? std::to_string(bad) + " facets outside, first " + first
                 : std::to_string(k.num_facets()) + " facets split into a sphere face and a join-factor face");
  };
  inside(s16, join(s24, ico), "S2xS2_16 in S2_4 * Icosa_fig1", out);
  inside(cp2, join(s24, rp2), "CP2_10 in S2_4 * RP2_6", out);
  out.add("induced(CP2_10, diagonal) = S2_4", induced_subcomplex(cp2, diagonal_labels()) == s24);
  std::vector<Label> upper_off;
  for (const auto& l : upper_pair_labels()) {
    if (l.first() != l.second()) upper_off.push_back(l);
  }
  out.add("induced(CP2_10, off-diagonal) = RP2_6", induced_subcomplex(cp2, upper_off) == rp2);
  return out;
}

CheckList structural_report_s2xs2_12() {
  CheckList out;
  const auto& k = get("S2xS2_12").complex;
  bool ok = true;
  for (const auto& v : k.vertices()) ok = ok && face_degree(k, Simplex{v}) == 10;
  out.add("all vertex degrees 10", ok);
  ok = true;
  bool links_ok = true;
  const auto& s28 = get("S2_8").complex;
  for (const auto& e : k.faces(1)) {
    ok = ok && face_degree(k, e) == 8;
    links_ok = links_ok && are_isomorphic(link(k, e), s28);
  }
  out.add("all edge degrees 8", ok);
  out.add("all edge links isomorphic to S2_8", links_ok);
  std::vector<Simplex> deg3;
  std::size_t deg5 = 0, other = 0;
  for (const auto& t : k.faces(2)) {
    const int d = face_degree(k, t);
    if (d == 3) deg3.push_back(t);
    else if (d == 5) ++deg5;
    else ++other;
  }
  out.add("triangle degrees in {3, 5}", other == 0,
          std::to_string(deg3.size()) + " of degree 3, " + std::to_string(deg5) + " of degree 5");
  out.add("exactly 40 degree-3 triangles", deg3.size() == 40, std::to_string(deg3.size()));
  const auto t3 = SimplicialComplex::from_facets(deg3);
  out.add("degree-3 triangles form a weak pseudomanifold", is_weak_pseudomanifold(t3));
  const auto comps = strong_components(t3);
  out.add("two strong components", comps.size() == 2, std::to_string(comps.size()));
  const auto& i1 = get("I1_fig2").complex;
  const auto& i2 = get("I2_fig2").complex;
  bool icos = comps.size() == 2;
  for (const auto& c : comps) {
    try {
      require_icosahedron(c);
    } catch (const Error&) {
      icos = false;
    }
  }
  out.add("components are icosahedra", icos);
  const bool match = comps.size() == 2 && ((comps[0] == i1 && comps[1] == i2) || (comps[0] == i2 && comps[1] == i1));
  out.add("components equal I1_fig2 and I2_fig2", match);
  const auto aut = automorphism_group(k);
  out.add("Aut order 240", aut.order() == 240, std::to_string(aut.order()));
  out.add("Aut transitive on vertices", orbits_on_faces(k, aut, 0).size() == 1);
  out.add("Aut transitive on edges", orbits_on_faces(k, aut, 1).size() == 1);
  const auto tri_orbits = orbits_on_faces(k, aut, 2);
  bool per_degree = tri_orbits.size() == 2;
  for (const auto& orb : tri_orbits) {
    const int d = face_degree(k, orb.front());
    for (const auto& t : orb) per_degree = per_degree && face_degree(k, t) == d;
  }
  out.add("Aut transitive on triangles of each degree", per_degree,
          std::to_string(tri_orbits.size()) + " triangle orbits");
  return out;
}

}  // namespace simpcx
