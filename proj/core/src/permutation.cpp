#include "simpcx/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace simpcx {

VertexMap::VertexMap(const std::map<Label, Label>& pairs) {
  std::vector<Label> targets;
  for (const auto& [from, to] : pairs) {
    domain_.push_back(from);
    images_.push_back(to);
    targets.push_back(to);
  }
  std::sort(targets.begin(), targets.end());
  if (std::adjacent_find(targets.begin(), targets.end()) != targets.end()) {
    throw Error("vertex map is not injective");
  }
}

Label VertexMap::operator()(const Label& l) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), l);
  if (it == domain_.end() || *it != l) throw Error("vertex map: label outside domain: " + l.str());
  return images_[it - domain_.begin()];
}

Simplex VertexMap::operator()(const Simplex& s) const {
  std::vector<Label> out;
  out.reserve(s.size());
  for (const auto& l : s) out.push_back((*this)(l));
  return Simplex(std::move(out));
}

SimplicialComplex VertexMap::operator()(const SimplicialComplex& k) const {
  if (k.is_void()) return k;
  std::vector<Simplex> out;
  for (const auto& f : k.facets()) out.push_back((*this)(f));
  return SimplicialComplex::from_facets(std::move(out));
}

VertexMap VertexMap::inverse() const {
  std::map<Label, Label> inv;
  for (std::size_t i = 0; i < domain_.size(); ++i) inv.emplace(images_[i], domain_[i]);
  return VertexMap(inv);
}

std::string VertexMap::str() const {
  std::string out;
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (i) out += ' ';
    out += domain_[i].compact() + "->" + images_[i].compact();
  }
  return out;
}

Permutation Permutation::identity(std::vector<Label> domain) {
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  Permutation p;
  p.image_.resize(domain.size());
  std::iota(p.image_.begin(), p.image_.end(), 0);
  p.domain_ = std::move(domain);
  return p;
}

Permutation Permutation::from_map(const std::map<Label, Label>& images) {
  Permutation p;
  for (const auto& [from, to] : images) p.domain_.push_back(from);
  p.image_.reserve(p.domain_.size());
  std::vector<bool> hit(p.domain_.size(), false);
  for (const auto& [from, to] : images) {
    auto it = std::lower_bound(p.domain_.begin(), p.domain_.end(), to);
    if (it == p.domain_.end() || *it != to) throw Error("permutation: image outside domain: " + to.str());
    const auto idx = static_cast<std::size_t>(it - p.domain_.begin());
    if (hit[idx]) throw Error("permutation: not injective at " + to.str());
    hit[idx] = true;
    p.image_.push_back(static_cast<int>(idx));
  }
  return p;
}

Permutation Permutation::from_function(std::vector<Label> domain,
                                       const std::function<Label(const Label&)>& f) {
  std::map<Label, Label> images;
  for (const auto& l : domain) images[l] = f(l);
  return from_map(images);
}

Permutation Permutation::from_cycles(std::string_view cycles, std::vector<Label> domain,
                                     Label::Kind kind) {
  std::map<Label, Label> images;
  for (const auto& l : domain) images[l] = l;
  std::map<Label, bool> seen;
  std::size_t pos = 0;
  while (pos < cycles.size()) {
    const auto open = cycles.find('(', pos);
    if (open == std::string_view::npos) {
      if (cycles.substr(pos).find_first_not_of(" \t\n") != std::string_view::npos) {
        throw Error("cycle notation: stray text outside parentheses");
      }
      break;
    }
    const auto close = cycles.find(')', open);
    if (close == std::string_view::npos) throw Error("cycle notation: unbalanced '('");
    std::vector<Label> cyc;
    for (const auto& tok : split_label_tokens(cycles.substr(open + 1, close - open - 1))) {
      Label l = Label::parse(tok, kind);
      if (!images.count(l)) throw Error("cycle notation: label outside domain: " + l.str());
      if (seen[l]) throw Error("cycle notation: label repeated: " + l.str());
      seen[l] = true;
      cyc.push_back(l);
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) images[cyc[i]] = cyc[(i + 1) % cyc.size()];
    pos = close + 1;
  }
  return from_map(images);
}

Permutation Permutation::from_index_permutation(const std::vector<int>& s, std::vector<Label> domain) {
  if (s.size() != 4) throw Error("index permutation must list images of 1..4");
  return from_function(std::move(domain), [&s](const Label& l) {
    switch (l.kind()) {
      case Label::Kind::pair: return Label::pair(s[l.first() - 1], s[l.second() - 1]);
      case Label::Kind::unordered: return Label::unordered(s[l.first() - 1], s[l.second() - 1]);
      default: return l;
    }
  });
}

Label Permutation::operator()(const Label& l) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), l);
  if (it == domain_.end() || *it != l) return l;
  return domain_[image_[it - domain_.begin()]];
}

Simplex Permutation::operator()(const Simplex& s) const {
  std::vector<Label> out;
  out.reserve(s.size());
  for (const auto& l : s) out.push_back((*this)(l));
  return Simplex(std::move(out));
}

SimplicialComplex Permutation::operator()(const SimplicialComplex& k) const {
  if (k.is_void()) return k;
  std::vector<Simplex> out;
  for (const auto& f : k.facets()) out.push_back((*this)(f));
  return SimplicialComplex::from_facets(std::move(out));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (domain_ != rhs.domain_) throw Error("permutation product: domains differ");
  Permutation out;
  out.domain_ = domain_;
  out.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out.image_[i] = image_[rhs.image_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.domain_ = domain_;
  out.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out.image_[image_[i]] = static_cast<int>(i);
  return out;
}

Permutation Permutation::pow(long long n) const {
  Permutation base = n < 0 ? inverse() : *this;
  if (n < 0) n = -n;
  Permutation result = identity(domain_);
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

int Permutation::order() const {
  long long ord = 1;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image_[j])) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return static_cast<int>(ord);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::string Permutation::cycle_notation() const {
  std::string out;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i] || image_[i] == static_cast<int>(i)) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image_[j])) {
      seen[j] = true;
      if (j != i) out += ' ';
      out += domain_[j].compact();
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

VertexMap Permutation::as_map() const {
  std::map<Label, Label> m;
  for (std::size_t i = 0; i < domain_.size(); ++i) m[domain_[i]] = domain_[image_[i]];
  return VertexMap(m);
}

std::vector<Label> all_pair_labels() {
  std::vector<Label> out;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) out.push_back(Label::pair(i, j));
  }
  return out;
}

std::vector<Label> off_diagonal_labels() {
  std::vector<Label> out;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      if (i != j) out.push_back(Label::pair(i, j));
    }
  }
  return out;
}

std::vector<Label> upper_pair_labels() {
  std::vector<Label> out;
  for (int i = 1; i <= 4; ++i) {
    for (int j = i; j <= 4; ++j) out.push_back(Label::pair(i, j));
  }
  return out;
}

}  // namespace simpcx
