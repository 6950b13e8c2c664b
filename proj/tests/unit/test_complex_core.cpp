#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "simpcx/catalog.hpp"

using namespace simpcx;

namespace {

std::vector<Label> atoms(std::initializer_list<const char*> names) {
  std::vector<Label> out;
  for (const char* n : names) out.push_back(Label::atom(n));
  return out;
}

Simplex S(const char* text) { return Simplex::parse(text); }

}  // namespace

TEST_CASE("labels order pairs before atoms") {
  CHECK(Label::pair(1, 1) < Label::pair(1, 2));
  CHECK(Label::pair(4, 4) < Label::atom("a"));
  CHECK(Label::parse("x_23") == Label::pair(2, 3));
  CHECK(Label::parse("x23") == Label::pair(2, 3));
  CHECK(Label::parse("x32", Label::Kind::unordered) == Label::unordered(2, 3));
  CHECK(Label::parse("c").kind() == Label::Kind::atom);
  CHECK(Label::pair(2, 3).str() == "x_23");
  CHECK_THROWS(Label::parse(""));
  CHECK_THROWS(Label::parse("x_56"));
}

TEST_CASE("simplex parsing splits compact runs") {
  const auto s = S("x22x11x33");
  CHECK(s.size() == 3);
  CHECK(s[0] == Label::pair(1, 1));
  CHECK(s.str() == "x11x22x33");
  CHECK(S("x11 x22") == S("x11x22"));
  CHECK(Simplex().dim() == -1);
}

TEST_CASE("void complex and {empty} differ") {
  const SimplicialComplex v;
  const auto e = SimplicialComplex::empty_simplex();
  CHECK(v.is_void());
  CHECK_FALSE(e.is_void());
  CHECK(e.dim() == -1);
  CHECK(e.contains(Simplex()));
  CHECK_FALSE(v.contains(Simplex()));
  CHECK(v != e);
}

TEST_CASE("from_facets rejects a facet inside another") {
  CHECK_THROWS_AS(SimplicialComplex::from_facets({S("x11x12x13"), S("x11x12")}), Error);
  const auto k = SimplicialComplex::from_faces({S("x11x12x13"), S("x11x12"), S("x14")});
  CHECK(k.num_facets() == 2);
}

TEST_CASE("catalog f-vectors agree with brute-force face enumeration") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const auto& k = get(name).complex;
    CHECK(k.f_vector().counts == oracle::f_vector(k));
  }
}

TEST_CASE("catalog f-vectors") {
  CHECK(get("S2xS2_16").complex.f_vector() == FaceVector{16, 84, 216, 240, 96});
  CHECK(get("S2xS2_16_prime").complex.f_vector() == FaceVector{16, 84, 216, 240, 96});
  CHECK(get("CP2_10").complex.f_vector() == FaceVector{10, 45, 110, 120, 48});
  CHECK(get("S2xS2_12").complex.f_vector() == FaceVector{12, 60, 160, 180, 72});
  CHECK(get("RP2_6").complex.f_vector() == FaceVector{6, 15, 10});
}

TEST_CASE("standard spheres have binomial face counts") {
  for (int n = 2; n <= 8; ++n) {
    std::vector<Label> v;
    for (int i = 0; i < n; ++i) v.push_back(Label::atom("v" + std::to_string(i)));
    const auto sphere = standard_sphere(v);
    const auto ball = standard_ball(v);
    for (int k = 0; k < n - 1; ++k) {
      CHECK(sphere.f_vector().counts[static_cast<std::size_t>(k)] == oracle::binomial(n, k + 1));
    }
    CHECK(sphere.dim() == n - 2);
    CHECK(ball.num_facets() == 1);
    CHECK(boundary(ball) == sphere);
  }
  CHECK_THROWS(cycle(atoms({"a", "b"})));
  CHECK(cycle(atoms({"a", "b", "c", "d", "e"})).f_vector() == FaceVector{5, 5});
}

TEST_CASE("join f-vector is the convolution of the factors") {
  const std::vector<std::pair<const char*, const char*>> pairs{
      {"S2_4", "Icosa_fig1"}, {"S2_4", "RP2_6"}, {"S1_6_octa", "S2_4"}};
  for (const auto& [x, y] : pairs) {
    CAPTURE(x);
    const auto& a = get(x).complex;
    // Relabel the second factor with atoms to keep the vertex sets disjoint.
    const auto& b0 = get(y).complex;
    std::map<Label, Label> rename;
    for (const auto& l : b0.vertices()) rename[l] = Label::atom("y" + l.str());
    const auto b = VertexMap(rename)(b0);
    CHECK(join(a, b).f_vector().counts == oracle::join_f_vector(a.f_vector().counts, b.f_vector().counts));
  }
  CHECK_THROWS_AS(join(get("S2_4").complex, get("S2_4").complex), Error);
}

TEST_CASE("star is the closure joined with the link") {
  std::mt19937_64 rng(7);
  for (const char* name : {"CP2_10", "S2xS2_12", "S2xS2_16"}) {
    const auto& k = get(name).complex;
    for (int d = 0; d <= 2; ++d) {
      const auto faces = k.faces(d);
      for (int trial = 0; trial < 5; ++trial) {
        const auto& s = faces[rng() % faces.size()];
        CHECK(star(k, s) == join(SimplicialComplex::closure(s), link(k, s)));
      }
    }
  }
}

TEST_CASE("links in the boundary of a simplex are boundaries of simplices") {
  const auto v = atoms({"a", "b", "c", "d", "e", "f"});
  const auto k = standard_sphere(v);
  const auto lk = link(k, Simplex(atoms({"a", "b"})));
  CHECK(lk == standard_sphere(atoms({"c", "d", "e", "f"})));
  CHECK(link(k, Simplex()) == k);
  CHECK_THROWS_AS(link(k, Simplex(v)), Error);
  // The link of a facet is {empty}.
  CHECK(link(k, Simplex(atoms({"a", "b", "c", "d", "e"}))) == SimplicialComplex::empty_simplex());
}

TEST_CASE("induced subcomplexes of CP2_10") {
  const auto& cp2 = get("CP2_10").complex;
  const std::vector<Label> diag{Label::pair(1, 1), Label::pair(2, 2), Label::pair(3, 3), Label::pair(4, 4)};
  CHECK(induced_subcomplex(cp2, diag) == get("S2_4").complex);
  std::vector<Label> off;
  for (const auto& l : cp2.vertices()) {
    if (l.first() != l.second()) off.push_back(l);
  }
  CHECK(induced_subcomplex(cp2, off) == get("RP2_6").complex);
  CHECK(induced_subcomplex(cp2, cp2.vertices()) == cp2);
}

TEST_CASE("neighbourliness") {
  CHECK(neighborliness(get("CP2_10").complex) == 2);
  // Every 3-subset of the 4 vertices is a face, the 4-set is not.
  CHECK(neighborliness(get("S2_4").complex) == 3);
  CHECK(neighborliness(get("S2xS2_12").complex) == 1);
}

TEST_CASE("weak pseudomanifolds and strong components") {
  const auto tet = get("S2_4").complex;
  CHECK(is_weak_pseudomanifold(tet));
  CHECK(strong_components(tet).size() == 1);
  const auto two = SimplicialComplex::from_facets({S("x11x12x13"), S("x21x22x23")});
  CHECK(strong_components(two).size() == 2);
  CHECK(connected_components(two) == 2);
  CHECK_FALSE(is_weak_pseudomanifold(two));
  CHECK_THROWS_AS(boundary(SimplicialComplex::from_facets({S("x11x12x13"), S("x21x22")})), Error);
}

TEST_CASE("face degrees") {
  const auto& k = get("S2xS2_12").complex;
  CHECK(face_degree(k, S("x12")) == 10);
  CHECK(face_degree(k, S("x12x13")) == 8);
  CHECK_THROWS(face_degree(k, S("x12x43")));
}
