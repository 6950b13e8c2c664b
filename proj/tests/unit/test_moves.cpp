#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "simpcx/catalog.hpp"
#include "simpcx/homology.hpp"
#include "simpcx/moves.hpp"

using namespace simpcx;

namespace {

Simplex S(const char* text) { return Simplex::parse(text); }

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("a flip followed by its inverse is the identity") {
  const auto& k = get("CP2_10").complex;
  const auto moves = find_proper_moves(k);
  REQUIRE_FALSE(moves.empty());
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto& m = moves[rng() % moves.size()];
    CAPTURE(m.str());
    const auto k2 = apply_bistellar(k, m);
    CHECK(k2 != k);
    CHECK(k2.f_vector().euler_characteristic() == k.f_vector().euler_characteristic());
    CHECK(apply_bistellar(k2, m.b, m.a) == k);
  }
}

TEST_CASE("bistellar moves reject bad input") {
  const auto& k = get("CP2_10").complex;
  CHECK(error_of([&] { apply_bistellar(k, S("x11x22x33x44"), S("x12")); }).find("A not a face") !=
        std::string::npos);
  CHECK(error_of([&] { apply_bistellar(k, S("x11x12"), S("x13x14")); }).find("link") != std::string::npos);
  // A facet with a vertex already present: link is {∅} = ∂{x}, but x is a face.
  const auto facet = k.facets().front();
  CHECK(error_of([&] { apply_bistellar(k, facet, S("x11")); }).size() > 0);
}

TEST_CASE("proper moves") {
  const auto sphere = simplex_boundary(S("x11x12x13x14x21x22"));
  CHECK(find_proper_moves(sphere).empty());
  const auto moves = find_proper_moves(get("CP2_10").complex);
  CHECK(std::find(moves.begin(), moves.end(), BistellarMove{S("x22x33x44"), S("x23x24x34")}) != moves.end());
  CHECK(std::is_sorted(moves.begin(), moves.end()));
  for (const auto& m : moves) CHECK(m.a.dim() <= 3);
}

TEST_CASE("starring a facet adds one vertex") {
  const auto& k = get("CP2_10").complex;
  const auto f = k.facets().front();
  const auto k2 = star_vertex(k, f, Label::atom("c"));
  CHECK(k2.num_vertices() == 11);
  CHECK(k2.num_facets() == k.num_facets() + 4);
  CHECK(homology(k2) == homology(k));
  // Starring a facet is the flip facet -> new vertex.
  CHECK(k2 == apply_bistellar(k, f, Simplex({Label::atom("c")})));
}

TEST_CASE("ball swaps check their preconditions") {
  const auto& k = get("CP2_10").complex;
  const auto a = S("x22x33x44"), b = S("x23x24x34");
  const auto d = join(SimplicialComplex::closure(a), simplex_boundary(b));
  const auto dhat = join(SimplicialComplex::closure(b), simplex_boundary(a));
  CHECK(apply_gbm(k, d, dhat) == apply_bistellar(k, a, b));
  // Reversed roles: dhat is not inside K.
  CHECK_THROWS_AS(apply_gbm(k, dhat, d), Error);
  // Boundaries differ.
  CHECK_THROWS_AS(apply_gbm(k, d, SimplicialComplex::closure(S("x11x12x13x14x21"))), Error);
  CHECK(ball_plausibility_failure(d).empty());
  CHECK_FALSE(ball_plausibility_failure(get("S2_4").complex).empty());
}

TEST_CASE("vertex-deleting moves expand into three flips") {
  auto cur = apply_script(get("S2xS2_16_prime").complex, builtin_script("T5_flips"));
  int sites = 0;
  for (const auto& step : builtin_script("T5_vertex_deletions").steps) {
    REQUIRE(step.kind == MoveStep::Kind::gbm);
    const auto hat = step.dhat.facets();
    Simplex xyz = hat.front();
    for (const auto& f : hat) xyz = xyz.minus(xyz.minus(f));
    std::vector<Label> abc;
    for (const auto& l : step.dhat.vertices()) {
      if (!xyz.contains(l)) abc.push_back(l);
    }
    Label u;
    for (const auto& l : step.d.vertices()) {
      if (step.dhat.index_of(l) < 0) u = l;
    }
    REQUIRE(xyz.size() == 3);
    REQUIRE(abc.size() == 3);
    const auto after = apply_gbm(cur, step.d, step.dhat);
    auto flipped = cur;
    for (const auto& m : vertex_deletion_flips(u, xyz, abc)) flipped = apply_bistellar(flipped, m);
    CHECK(flipped == after);
    CHECK(after.num_vertices() + 1 == cur.num_vertices());
    cur = after;
    ++sites;
  }
  CHECK(sites == 4);
  CHECK(cur == get("S2xS2_12").complex);
}

TEST_CASE("scripts survive a JSON round trip") {
  for (const auto& name : builtin_script_names()) {
    CAPTURE(name);
    const auto s = builtin_script(name);
    const auto back = parse_script(script_to_json(s));
    CHECK(back.name == s.name);
    REQUIRE(back.steps.size() == s.steps.size());
    for (std::size_t i = 0; i < s.steps.size(); ++i) CHECK(back.steps[i].str() == s.steps[i].str());
  }
  CHECK_THROWS_AS(builtin_script("nope"), Error);
  CHECK_THROWS_AS(parse_script("{\"steps\": [{\"kind\": \"twist\"}]}"), Error);
}

TEST_CASE("the built-in scripts replay") {
  const auto& cp2 = get("CP2_10").complex;
  std::vector<SimplicialComplex> trace;
  const auto k = apply_script(cp2, builtin_script("T3_i_to_ix"), &trace);
  CHECK(trace.size() == builtin_script("T3_i_to_ix").steps.size());
  CHECK(k.num_vertices() == 10);
  const auto l = apply_script(k, builtin_script("T3_x_to_xv"));
  CHECK(l.num_vertices() == 9);
  CHECK(l.f_vector().counts[2] == 84);
  CHECK(neighborliness(l) == 3);
  CHECK(homology(l).str() == "(Z, 0, Z, 0, Z)");
  const auto m = apply_script(k, builtin_script("T3_xvi_to_xix"));
  CHECK(m.num_vertices() == 10);
  CHECK(homology(m).str() == "(Z, 0, Z, 0, Z)");

  const auto x1 = apply_script(get("S2xS2_16_prime").complex, builtin_script("T5_flips"));
  CHECK_FALSE(x1.contains(S("x12x13x14")));
  CHECK(apply_script(x1, builtin_script("T5_vertex_deletions")) == get("S2xS2_12").complex);
}

TEST_CASE("a failing step is reported by position") {
  MoveScript s;
  s.name = "bad";
  MoveStep ok;
  ok.a = S("x22x33x44");
  ok.b = S("x23x24x34");
  MoveStep bad;
  bad.a = S("x22x33x44");
  bad.b = S("x23x24x34");
  s.steps = {ok, bad};
  const auto msg = error_of([&] { apply_script(get("CP2_10").complex, s); });
  CHECK(msg.rfind("step 2", 0) == 0);
}
