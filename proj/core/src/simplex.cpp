#include "simpcx/simplex.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

namespace simpcx {

Simplex::Simplex(std::initializer_list<Label> labels) : Simplex(std::vector<Label>(labels)) {}

Simplex::Simplex(std::vector<Label> labels) : v_(std::move(labels)) {
  std::sort(v_.begin(), v_.end());
  v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
}

std::vector<std::string> split_label_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      flush();
    } else if (c == 'x' && !cur.empty() && cur.front() == 'x') {
      flush();
      cur.push_back(c);
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return out;
}

Simplex Simplex::parse(std::string_view text, Label::Kind kind) {
  std::vector<Label> labels;
  for (const auto& tok : split_label_tokens(text)) labels.push_back(Label::parse(tok, kind));
  return Simplex(std::move(labels));
}

bool Simplex::contains(const Label& l) const { return std::binary_search(v_.begin(), v_.end(), l); }

bool Simplex::is_subset_of(const Simplex& other) const {
  return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

bool Simplex::intersects(const Simplex& other) const {
  auto a = v_.begin();
  auto b = other.v_.begin();
  while (a != v_.end() && b != other.v_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

Simplex Simplex::united(const Simplex& other) const {
  std::vector<Label> out;
  std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(), std::back_inserter(out));
  Simplex s;
  s.v_ = std::move(out);
  return s;
}

Simplex Simplex::minus(const Simplex& other) const {
  std::vector<Label> out;
  std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                      std::back_inserter(out));
  Simplex s;
  s.v_ = std::move(out);
  return s;
}

Simplex Simplex::without(const Label& l) const { return minus(Simplex{l}); }

Simplex Simplex::with(const Label& l) const { return united(Simplex{l}); }

std::string Simplex::str() const {
  const bool spaced = std::any_of(v_.begin(), v_.end(), [](const Label& l) { return !l.is_pair(); });
  std::string out;
  for (const auto& l : v_) {
    if (spaced && !out.empty()) out += ' ';
    out += l.compact();
  }
  return out.empty() ? "{}" : out;
}

}  // namespace simpcx
