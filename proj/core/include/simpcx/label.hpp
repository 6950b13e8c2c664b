#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace simpcx {

// A vertex name. Pair labels x_ij carry indices in 1..4; unordered pairs are
// stored with i <= j; atoms are free-form names (used for fresh vertices and
// small test complexes). The total order is kind first, then indices, then
// name, so x11 < x12 < ... < x44 < atoms.
class Label {
 public:
  enum class Kind : std::uint8_t { pair = 0, unordered = 1, atom = 2 };

  Label() = default;

  static Label pair(int i, int j);
  static Label unordered(int i, int j);
  static Label atom(std::string name);

  // Accepts "x_ij", "xij" (pair or unordered depending on `kind`), anything
  // else becomes an atom. Throws std::invalid_argument on an empty string or
  // out-of-range pair indices.
  static Label parse(std::string_view text, Kind kind = Kind::pair);

  Kind kind() const noexcept { return kind_; }
  int first() const noexcept { return i_; }
  int second() const noexcept { return j_; }
  const std::string& name() const noexcept { return name_; }
  bool is_pair() const noexcept { return kind_ != Kind::atom; }

  // "x_12" for pairs, the name for atoms.
  std::string str() const;
  // "x12" for pairs; used by cycle notation.
  std::string compact() const;

  auto operator<=>(const Label&) const = default;
  bool operator==(const Label&) const = default;

 private:
  Kind kind_ = Kind::atom;
  std::uint8_t i_ = 0;
  std::uint8_t j_ = 0;
  std::string name_;
};

}  // namespace simpcx
