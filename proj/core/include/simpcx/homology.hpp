#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simpcx/complex.hpp"

namespace simpcx {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer matrix with arbitrary-precision entries, row major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix transposed() const;
  bool is_zero() const;
  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> a_;
};

struct SmithForm {
  std::vector<BigInt> invariant_factors;  // positive, d1 | d2 | ... | dr
  std::size_t rank = 0;

  bool operator==(const SmithForm&) const = default;
};

enum class SnfMethod {
  min_pivot,       // smallest-|entry| pivot with row and column elimination
  bezout_echelon,  // alternating Bezout row/column echelon, then gcd/lcm diagonal fix-up
};

SmithForm smith_normal_form(IntMatrix m, SnfMethod method = SnfMethod::min_pivot);

// Columns are d-faces, rows (d-1)-faces, both in lexicographic order; the
// entry for removing the vertex at position p of a face is (-1)^p. For d = 0
// the matrix has zero rows.
IntMatrix boundary_matrix(const SimplicialComplex& k, int d);

struct HomologyGroup {
  long long betti = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1

  std::string str() const;  // "0", "Z", "Z^2", "Z/2", "Z + Z/2"
  bool operator==(const HomologyGroup&) const = default;
};

// Unreduced integral homology H_0 .. H_dim.
struct HomologyGroups {
  std::vector<HomologyGroup> groups;

  std::vector<long long> betti() const;
  long long euler_characteristic() const;
  std::string str() const;  // "(Z, Z/2, 0)"
  bool operator==(const HomologyGroups&) const = default;
};

HomologyGroups homology(const SimplicialComplex& k, SnfMethod method = SnfMethod::min_pivot);
long long euler_characteristic(const SimplicialComplex& k);

// Homology of S^d and dimension d. d = 0 means two points; d = -1 means {∅}.
bool is_homology_sphere(const SimplicialComplex& k, int d);
// H_0 = Z and all higher groups vanish.
bool is_acyclic(const SimplicialComplex& k);

enum class Tristate { yes, no, undetermined };
std::string to_string(Tristate t);

struct VertexLinkReport {
  Label vertex;
  bool link_is_homology_sphere = false;
  // Only attempted for links that are homology spheres of dimension >= 1;
  // a failed search gives undetermined, never no.
  Tristate reduced_to_boundary_simplex = Tristate::undetermined;
  int moves_used = 0;
};

struct ManifoldReport {
  std::vector<VertexLinkReport> links;

  bool all_links_homology_spheres() const;
  bool all_links_reduced() const;
};

struct FlipReduction {
  bool success = false;
  int moves_used = 0;
};

inline constexpr int kDefaultFlipBudget = 10000;

// Greedy descent toward the boundary of a simplex by bistellar moves, with
// random plateau escapes. Deterministic for a fixed seed.
FlipReduction reduce_to_boundary_simplex(const SimplicialComplex& sphere, std::uint64_t seed,
                                         int budget = kDefaultFlipBudget);

ManifoldReport check_combinatorial_manifold(const SimplicialComplex& k, std::uint64_t seed = 0,
                                            int budget = kDefaultFlipBudget);

}  // namespace simpcx
