#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "simpcx/complex.hpp"

namespace simpcx {

// Bijection between two label sets of equal size. Isomorphisms between
// different complexes are VertexMaps; a Permutation is the special case
// where domain and codomain coincide.
class VertexMap {
 public:
  VertexMap() = default;
  // Throws Error unless `pairs` is a bijection.
  explicit VertexMap(const std::map<Label, Label>& pairs);

  Label operator()(const Label& l) const;  // throws Error outside the domain
  Simplex operator()(const Simplex& s) const;
  SimplicialComplex operator()(const SimplicialComplex& k) const;

  const std::vector<Label>& domain() const noexcept { return domain_; }
  const std::vector<Label>& images() const noexcept { return images_; }
  VertexMap inverse() const;
  std::string str() const;  // "x11->x22 x12->x21 ..."

  bool operator==(const VertexMap&) const = default;

 private:
  std::vector<Label> domain_;  // sorted
  std::vector<Label> images_;  // images_[i] = image of domain_[i]
};

class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::vector<Label> domain);
  // Throws Error unless `images` maps the domain bijectively onto itself.
  static Permutation from_map(const std::map<Label, Label>& images);
  static Permutation from_function(std::vector<Label> domain, const std::function<Label(const Label&)>& f);
  // Cycle notation such as "(x12 x21 x24)(x13 x31)" or "(x11x22x33)". Labels
  // of `domain` not mentioned are fixed; labels mentioned must lie in it.
  static Permutation from_cycles(std::string_view cycles, std::vector<Label> domain,
                                 Label::Kind kind = Label::Kind::pair);
  // x_ij -> x_{s(i) s(j)} for an index permutation s of {1,2,3,4} given as
  // images of 1..4. Applies to every pair label of `domain`.
  static Permutation from_index_permutation(const std::vector<int>& images_of_1_to_4,
                                            std::vector<Label> domain);

  const std::vector<Label>& domain() const noexcept { return domain_; }
  std::size_t degree() const noexcept { return domain_.size(); }

  Label operator()(const Label& l) const;  // identity outside the domain
  Simplex operator()(const Simplex& s) const;
  SimplicialComplex operator()(const SimplicialComplex& k) const;
  // Image index of domain_[i].
  int image_index(std::size_t i) const { return image_[i]; }

  // (p * q)(x) = p(q(x)). Throws Error on mismatched domains.
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(long long n) const;
  int order() const;
  bool is_identity() const;
  std::string cycle_notation() const;  // fixed points omitted; "()" for identity
  VertexMap as_map() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Label> domain_;  // sorted
  std::vector<int> image_;
};

// The 16 labels x_ij, 1 <= i, j <= 4.
std::vector<Label> all_pair_labels();
// The 12 labels x_ij with i != j.
std::vector<Label> off_diagonal_labels();
// The 10 labels x_ij with i <= j.
std::vector<Label> upper_pair_labels();

}  // namespace simpcx
