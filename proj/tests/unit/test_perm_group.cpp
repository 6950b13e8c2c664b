#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "simpcx/catalog.hpp"

using namespace simpcx;

namespace {

std::vector<Label> atoms(std::initializer_list<const char*> names) {
  std::vector<Label> out;
  for (const char* n : names) out.push_back(Label::atom(n));
  return out;
}

// Closure by multiplying everything with everything until nothing new appears.
std::size_t naive_order(const std::vector<Permutation>& gens) {
  std::set<Permutation> g(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Permutation> cur(g.begin(), g.end());
    for (const auto& a : cur) {
      for (const auto& b : cur) grew |= g.insert(a * b).second;
    }
  }
  return g.size();
}

// Bijections V(k1) -> V(k2) carrying facets onto facets, by trying all of them.
std::size_t brute_force_maps(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  if (k1.num_vertices() != k2.num_vertices() || k1.num_facets() != k2.num_facets()) return 0;
  const auto facets = oracle::facet_strings(k1);
  const auto facets2 = oracle::facet_strings(k2);
  const std::set<oracle::Face> target(facets2.begin(), facets2.end());
  auto v = k1.vertices();
  auto images = k2.vertices();
  std::size_t count = 0;
  do {
    std::map<std::string, std::string> f;
    for (std::size_t i = 0; i < v.size(); ++i) f[v[i].str()] = images[i].str();
    bool ok = true;
    for (const auto& facet : facets) {
      oracle::Face img;
      for (const auto& s : facet) img.push_back(f[s]);
      std::sort(img.begin(), img.end());
      if (!target.count(img)) {
        ok = false;
        break;
      }
    }
    count += ok;
  } while (std::next_permutation(images.begin(), images.end()));
  return count;
}

std::size_t brute_force_aut(const SimplicialComplex& k) { return brute_force_maps(k, k); }

}  // namespace

TEST_CASE("composition applies the right factor first") {
  const auto dom = atoms({"a", "b", "c"});
  const auto p = Permutation::from_cycles("(a b)", dom, Label::Kind::atom);
  const auto q = Permutation::from_cycles("(b c)", dom, Label::Kind::atom);
  CHECK((p * q)(Label::atom("b")) == Label::atom("c"));
  CHECK((p * q)(Label::atom("c")) == Label::atom("a"));
  CHECK((p * q).order() == 3);
  CHECK((p * p).is_identity());
  CHECK(p.inverse() == p);
  CHECK((p * q).pow(3).is_identity());
  CHECK((p * q).pow(-1) == (p * q).inverse());
  CHECK_THROWS_AS(Permutation::from_cycles("(a z)", dom, Label::Kind::atom), Error);
}

TEST_CASE("cycle notation round trip") {
  const auto g = s2xs2_12_generators().front();
  CHECK(g.order() == 12);
  CHECK(Permutation::from_cycles(g.cycle_notation(), g.domain()) == g);
  CHECK(Permutation::identity(g.domain()).cycle_notation() == "()");
}

TEST_CASE("generated groups agree with naive closure") {
  CHECK(PermGroup::generate(s2xs2_16_generators()).order() == naive_order(s2xs2_16_generators()));
  CHECK(PermGroup::generate(cp2_10_generators()).order() == naive_order(cp2_10_generators()));
  CHECK(PermGroup::generate(s2xs2_12_generators()).order() == 240);
  const auto a4 = a4_index_generators(all_pair_labels());
  CHECK(PermGroup::generate(a4).order() == 12);
  CHECK(naive_order(a4) == 12);
  CHECK_THROWS_AS(PermGroup::generate({}), Error);
}

TEST_CASE("orbit sizes of the basic facets") {
  CHECK(generate_complex(s2xs2_16_generators(), s2xs2_16_basic_facets()).orbit_sizes ==
        std::vector<std::size_t>{24, 24, 24, 12, 12});
  CHECK(generate_complex(cp2_10_generators(), cp2_10_basic_facets()).orbit_sizes ==
        std::vector<std::size_t>{12, 12, 12, 6, 6});
  CHECK(generate_complex(s2xs2_12_generators(), s2xs2_12_basic_facets()).orbit_sizes ==
        std::vector<std::size_t>{12, 60});
}

TEST_CASE("orbit-stabilizer on facets") {
  const auto& k = get("S2xS2_16").complex;
  const auto g = PermGroup::generate(s2xs2_16_generators());
  for (const auto& f : k.facets()) {
    CHECK(orbit(f, g.generators()).size() * g.stabilizer(f).size() == g.order());
  }
}

TEST_CASE("automorphism groups of small complexes match brute force") {
  for (const char* name : {"S2_4", "RP2_6", "S1_6_octa", "S2_6_alt", "S2_8"}) {
    CAPTURE(name);
    const auto& k = get(name).complex;
    CHECK(automorphism_group(k).order() == brute_force_aut(k));
  }
}

TEST_CASE("automorphism groups of the catalog") {
  CHECK(automorphism_group(get("CP2_10").complex).order() == 12);
  CHECK(automorphism_group(get("S2xS2_16").complex).order() == 24);
  CHECK(automorphism_group(get("Icosa_fig1").complex).order() == 120);
  const auto aut = automorphism_group(get("S2xS2_12").complex);
  CHECK(aut.order() == 240);
  CHECK(aut.max_element_order() == 12);
  const auto center = aut.center();
  REQUIRE(center.size() == 2);
  const auto g = s2xs2_12_generators().front();
  CHECK(std::find(center.begin(), center.end(), g.pow(6)) != center.end());
  CHECK(PermGroup::generate(s2xs2_12_generators()).is_subgroup_of(aut));
}

TEST_CASE("isomorphism search") {
  const auto& octa = get("S1_6_octa").complex;
  const auto& alt = get("S2_6_alt").complex;
  const auto f = find_isomorphism(octa, alt);
  const auto expected = brute_force_maps(octa, alt);
  CHECK(f.has_value() == (expected > 0));
  CHECK(all_isomorphisms(octa, alt).size() == expected);
  if (f) CHECK((*f)(octa) == alt);
  CHECK(all_isomorphisms(get("S2_8").complex, get("S2_8").complex).size() == brute_force_aut(get("S2_8").complex));
  CHECK_FALSE(are_isomorphic(get("CP2_10").complex, get("S2xS2_12").complex));
  CHECK(all_isomorphisms(get("I1_fig2").complex, get("I2_fig2").complex).size() == 120);
}

TEST_CASE("tau acts purely on S2xS2_16 and the quotient is CP2_10") {
  const auto& k = get("S2xS2_16").complex;
  const auto g = PermGroup::generate({transpose_map(k.vertices())});
  CHECK(is_pure_action(k, g).is_pure);
  CHECK(quotient_complex(k, g) == generate_complex(cp2_10_generators(), cp2_10_basic_facets()).complex);
}

TEST_CASE("an impure action is reported with a witness") {
  const auto v = atoms({"a", "b", "c", "d"});
  const auto square = cycle(v);
  const auto g = PermGroup::generate({Permutation::from_cycles("(a c)(b d)", v, Label::Kind::atom)});
  const auto report = is_pure_action(square, g);
  CHECK_FALSE(report.is_pure);
  CHECK(report.condition == "b");
  CHECK_THROWS_AS(quotient_complex(square, g), Error);

  const auto bad = PermGroup::generate({Permutation::from_cycles("(a b)", v, Label::Kind::atom)});
  CHECK_THROWS_AS(is_pure_action(square, bad), Error);

  // An edge inside an orbit breaks condition (a).
  const auto swap = PermGroup::generate({Permutation::from_cycles("(a b)(c d)", v, Label::Kind::atom)});
  const auto r2 = is_pure_action(square, swap);
  CHECK_FALSE(r2.is_pure);
  CHECK(r2.condition == "a");
}
