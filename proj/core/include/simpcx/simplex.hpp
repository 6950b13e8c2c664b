#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "simpcx/label.hpp"

namespace simpcx {

// Sorted, duplicate-free vertex list. The empty simplex is allowed and has
// dimension -1.
class Simplex {
 public:
  using const_iterator = std::vector<Label>::const_iterator;

  Simplex() = default;
  Simplex(std::initializer_list<Label> labels);
  explicit Simplex(std::vector<Label> labels);

  // Whitespace-separated labels; runs like "x11x22x33" are split at each 'x'.
  static Simplex parse(std::string_view text, Label::Kind kind = Label::Kind::pair);

  int dim() const noexcept { return static_cast<int>(v_.size()) - 1; }
  std::size_t size() const noexcept { return v_.size(); }
  bool empty() const noexcept { return v_.empty(); }
  const_iterator begin() const noexcept { return v_.begin(); }
  const_iterator end() const noexcept { return v_.end(); }
  const Label& operator[](std::size_t i) const { return v_[i]; }
  const std::vector<Label>& labels() const noexcept { return v_; }

  bool contains(const Label& l) const;
  bool is_subset_of(const Simplex& other) const;
  bool intersects(const Simplex& other) const;

  Simplex united(const Simplex& other) const;
  Simplex minus(const Simplex& other) const;
  Simplex without(const Label& l) const;
  Simplex with(const Label& l) const;

  // "x11x22x33" style, compact labels concatenated.
  std::string str() const;

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;

 private:
  std::vector<Label> v_;
};

// Splits a label list such as "x11 x22" or "x11x22" into tokens.
std::vector<std::string> split_label_tokens(std::string_view text);

}  // namespace simpcx
