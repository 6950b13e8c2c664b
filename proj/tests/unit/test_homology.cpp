#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "simpcx/catalog.hpp"
#include "simpcx/homology.hpp"
#include "simpcx/moves.hpp"

using namespace simpcx;

namespace {

std::vector<std::vector<long long>> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<long long> d(-6, 6);
  std::vector<std::vector<long long>> m(r, std::vector<long long>(c));
  for (auto& row : m) {
    for (auto& x : row) x = d(rng);
  }
  return m;
}

IntMatrix to_int_matrix(const std::vector<std::vector<long long>>& m) {
  IntMatrix out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = m[i][j];
  }
  return out;
}

std::vector<long long> factors(const SmithForm& s) {
  std::vector<long long> out;
  for (const auto& x : s.invariant_factors) out.push_back(static_cast<long long>(x));
  return out;
}

}  // namespace

TEST_CASE("boundary of a boundary vanishes") {
  for (const char* name : {"CP2_10", "S2xS2_12", "RP2_6", "S2xS2_16"}) {
    CAPTURE(name);
    const auto& k = get(name).complex;
    for (int d = 1; d <= k.dim(); ++d) CHECK((boundary_matrix(k, d - 1) * boundary_matrix(k, d)).is_zero());
  }
}

TEST_CASE("boundary matrix signs on a triangle") {
  const auto k = SimplicialComplex::closure(Simplex::parse("x11x12x13"));
  // Edges x11x12, x11x13, x12x13 as rows; the triangle column is (+1, -1, +1).
  CHECK(boundary_matrix(k, 2) == IntMatrix{{1}, {-1}, {1}});
  CHECK(boundary_matrix(k, 0).rows() == 0);
}

TEST_CASE("Smith normal form agrees with determinantal divisors") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    auto m = random_matrix(rng, r, c);
    // Some rank-deficient cases: copy a row.
    if (trial % 3 == 0 && r > 1) m[r - 1] = m[0];
    CAPTURE(trial);
    const auto expected = oracle::invariant_factors(m);
    const auto a = smith_normal_form(to_int_matrix(m), SnfMethod::min_pivot);
    const auto b = smith_normal_form(to_int_matrix(m), SnfMethod::bezout_echelon);
    CHECK(factors(a) == expected);
    CHECK(a == b);
    CHECK(a.rank == expected.size());
  }
}

TEST_CASE("Smith normal form of edge cases") {
  CHECK(smith_normal_form(IntMatrix(0, 3)).rank == 0);
  CHECK(smith_normal_form(IntMatrix(2, 2)).rank == 0);
  CHECK(factors(smith_normal_form(IntMatrix{{2, 0}, {0, 3}})) == std::vector<long long>{1, 6});
  const std::vector<std::vector<long long>> m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  CHECK(factors(smith_normal_form(to_int_matrix(m))) == oracle::invariant_factors(m));
}

TEST_CASE("homology of the catalog") {
  CHECK(homology(get("CP2_10").complex).str() == "(Z, 0, Z, 0, Z)");
  CHECK(homology(get("S2xS2_12").complex).str() == "(Z, 0, Z^2, 0, Z)");
  CHECK(homology(get("S2xS2_16").complex).str() == "(Z, 0, Z^2, 0, Z)");
  CHECK(homology(get("S2xS2_16_prime").complex).str() == "(Z, 0, Z^2, 0, Z)");
  CHECK(homology(get("RP2_6").complex).str() == "(Z, Z/2, 0)");
  CHECK(homology(get("RP2_6").complex, SnfMethod::bezout_echelon) == homology(get("RP2_6").complex));
}

TEST_CASE("Euler characteristic from homology and from faces") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const auto& k = get(name).complex;
    CHECK(homology(k).euler_characteristic() == k.f_vector().euler_characteristic());
    CHECK(euler_characteristic(k) == k.f_vector().euler_characteristic());
  }
}

TEST_CASE("homology spheres") {
  const auto& ico = get("Icosa_fig1").complex;
  CHECK(is_homology_sphere(ico, 2));
  CHECK_FALSE(is_homology_sphere(ico, 1));
  CHECK_FALSE(is_homology_sphere(get("RP2_6").complex, 2));
  CHECK(is_homology_sphere(SimplicialComplex::empty_simplex(), -1));
  CHECK(is_homology_sphere(link(get("CP2_10").complex, Simplex::parse("x11")), 3));
  CHECK(is_acyclic(SimplicialComplex::closure(Simplex::parse("x11x12x13x14"))));
  CHECK_FALSE(is_acyclic(ico));
}

TEST_CASE("flip reduction of vertex links") {
  const auto& k = get("CP2_10").complex;
  const auto lk = link(k, Simplex::parse("x11"));
  const auto r = reduce_to_boundary_simplex(lk, 0);
  CHECK(r.success);
  CHECK(r.moves_used > 0);
  CHECK(reduce_to_boundary_simplex(lk, 0).moves_used == r.moves_used);

  const auto sphere = simplex_boundary(Simplex::parse("x11x12x13x14x21"));
  const auto trivial = reduce_to_boundary_simplex(sphere, 0);
  CHECK(trivial.success);
  CHECK(trivial.moves_used == 0);

  const auto report = check_combinatorial_manifold(get("S2xS2_12").complex);
  CHECK(report.links.size() == 12);
  CHECK(report.all_links_homology_spheres());
  CHECK(report.all_links_reduced());
}
