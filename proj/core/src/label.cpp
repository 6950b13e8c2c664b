#include "simpcx/label.hpp"

#include <stdexcept>

namespace simpcx {

namespace {

void check_index(int i) {
  if (i < 1 || i > 4) {
    throw std::invalid_argument("pair label index out of range 1..4: " + std::to_string(i));
  }
}

}  // namespace

Label Label::pair(int i, int j) {
  check_index(i);
  check_index(j);
  Label l;
  l.kind_ = Kind::pair;
  l.i_ = static_cast<std::uint8_t>(i);
  l.j_ = static_cast<std::uint8_t>(j);
  return l;
}

Label Label::unordered(int i, int j) {
  check_index(i);
  check_index(j);
  if (i > j) std::swap(i, j);
  Label l;
  l.kind_ = Kind::unordered;
  l.i_ = static_cast<std::uint8_t>(i);
  l.j_ = static_cast<std::uint8_t>(j);
  return l;
}

Label Label::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty atom label");
  Label l;
  l.kind_ = Kind::atom;
  l.name_ = std::move(name);
  return l;
}

Label Label::parse(std::string_view text, Kind kind) {
  if (text.empty()) throw std::invalid_argument("empty label");
  if (kind != Kind::atom && text.front() == 'x') {
    std::string_view digits = text.substr(1);
    if (!digits.empty() && digits.front() == '_') digits.remove_prefix(1);
    if (digits.size() == 2 && digits[0] >= '0' && digits[0] <= '9' && digits[1] >= '0' &&
        digits[1] <= '9') {
      const int i = digits[0] - '0';
      const int j = digits[1] - '0';
      return kind == Kind::unordered ? unordered(i, j) : pair(i, j);
    }
  }
  return atom(std::string(text));
}

std::string Label::str() const {
  if (kind_ == Kind::atom) return name_;
  return "x_" + std::to_string(i_) + std::to_string(j_);
}

std::string Label::compact() const {
  if (kind_ == Kind::atom) return name_;
  return "x" + std::to_string(i_) + std::to_string(j_);
}

}  // namespace simpcx
