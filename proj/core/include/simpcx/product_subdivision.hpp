#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "simpcx/complex.hpp"
#include "simpcx/perm_group.hpp"

namespace simpcx {

using Rational = boost::multiprecision::cpp_rational;

// A cell A x B of S2_4 x S2_4: A, B nonempty proper subsets of {1,2,3,4},
// both sorted. Its vertices are the x_ij with i in A, j in B.
struct ProductCell {
  std::vector<int> a;
  std::vector<int> b;

  int dim() const { return static_cast<int>(a.size() + b.size()) - 2; }
  std::vector<Label> vertices() const;
  bool is_face_of(const ProductCell& other) const;
  ProductCell transposed() const { return {b, a}; }
  std::string str() const;  // "12x34"

  auto operator<=>(const ProductCell&) const = default;
  bool operator==(const ProductCell&) const = default;
};

// x_ij -> (e_i, e_j) with e_1 = 0 and e_2, e_3, e_4 the unit vectors of Q^3.
using RationalPoint = std::array<Rational, 6>;
RationalPoint realize(const Label& l);

class ProductCellComplex {
 public:
  // Sorted by dimension, then by (a, b).
  const std::vector<ProductCell>& cells() const noexcept { return cells_; }
  std::vector<ProductCell> cells(int d) const;
  FaceVector counts() const;  // (16, 48, 68, 48, 16)

  // Least cell whose vertex set contains s; none when the rows or columns of
  // s cover all of {1,2,3,4}.
  static std::optional<ProductCell> minimal_cell(const Simplex& s);

  // Affine chart of a cell: drop the first index of A and of B and use
  // indicator coordinates. The cell is then a product of standard simplices.
  static std::vector<Rational> chart(const ProductCell& c, const Label& l);
  // 1 / ((|A|-1)! (|B|-1)!)
  static Rational cell_volume(const ProductCell& c);
  // |det| / k! for a k-simplex with k = dim c; zero when degenerate.
  static Rational simplex_volume(const ProductCell& c, const Simplex& s);
  // Sign of the chart determinant of (s[0..k-1], apex) relative to s[0]; s is
  // a (k-1)-simplex of the cell. Returns -1, 0 or 1.
  static int side(const ProductCell& c, const Simplex& ridge, const Label& apex);

 private:
  friend ProductCellComplex build_product_cell_complex();
  std::vector<ProductCell> cells_;
};

ProductCellComplex build_product_cell_complex();

struct CellTiling {
  ProductCell cell;
  std::size_t tiles = 0;
  Rational volume;
  Rational expected;
};

struct SubdivisionReport {
  bool certified = false;
  std::vector<std::string> failures;  // first few problems, in cell order
  std::vector<CellTiling> tilings;    // every cell of dimension >= 1

  std::string str() const;
};

// Exact certificate that K subdivides P without new vertices: each face sits
// in its minimal cell, tiles of each cell are non-degenerate, their volumes
// add up exactly, and interior ridges of each cell see tiles on both sides.
SubdivisionReport verify_subdivision(const SimplicialComplex& k, const ProductCellComplex& p);

// Staircase triangulation of a cell for given orders of A and B: one simplex
// per monotone lattice path, C(|A|+|B|-2, |A|-1) in all.
std::vector<Simplex> staircase(const ProductCell& c, const std::vector<int>& order_a,
                               const std::vector<int>& order_b);
// The distinct staircase triangulations of a cell over all index orders.
std::vector<SimplicialComplex> staircase_triangulations(const ProductCell& c);

// Fills of a prism (triangle x edge) among its staircase triangulations whose
// boundary equals `boundary`. Empty or a single fill.
std::vector<SimplicialComplex> prism_fills(const ProductCell& prism, const SimplicialComplex& boundary);

// All triangulations of a cell without new vertices whose boundary is
// `boundary`, found by ridge matching over the non-degenerate simplices.
std::vector<SimplicialComplex> cell_fills(const ProductCell& c, const SimplicialComplex& boundary);

// For a square E x F: true selects the diagonal x_{e0 f0} x_{e1 f1}.
struct Square {
  ProductCell cell;
  Simplex diagonal(bool main) const;
};
std::vector<Square> squares();  // the 36 cells edge x edge

struct SubdivisionSearch {
  std::size_t diagonal_patterns = 0;  // tau-equivariant assignments tried
  std::size_t edge_pure = 0;          // passing the link-vertex test on edges
  std::size_t prisms_filled = 0;      // every prism has a fill
  std::size_t candidates = 0;         // complete fills of all 4-cells
  std::vector<SimplicialComplex> results;  // certified, tau-stable, pure; sorted
};

// Exhaustive search for simplicial subdivisions of S2_4 x S2_4 on its 16
// vertices that keep x_ij <-> x_ji as an automorphism acting purely.
SubdivisionSearch search_equivariant_pure_subdivisions();
std::vector<SimplicialComplex> enumerate_equivariant_pure_subdivisions();

struct QuotientCellCensus {
  FaceVector counts;
  int regular_4cells = 0;
  int singular_4cells = 0;
  std::vector<ProductCell> folded_2cells;  // the tau-fixed squares E x E

  long long total() const;
  long long alternating_sum() const;
};

QuotientCellCensus cw_quotient_census();

// Every facet of `quotient` is the image of a facet of `k` lying in a 4-cell.
bool quotient_refines_cells(const SimplicialComplex& k, const SimplicialComplex& quotient);

}  // namespace simpcx
